#include "mcone/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcone {

RepSpec RepSpec::kronecker(std::vector<int> dims) {
    if (dims.empty()) throw std::invalid_argument("kronecker: empty dims");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("kronecker: dims must be positive");
    if (!std::is_sorted(dims.begin(), dims.end(), std::greater<int>()))
        throw std::invalid_argument("kronecker: dims must be non-increasing");
    RepSpec s;
    s.kind = Kind::Kronecker;
    s.dims = std::move(dims);
    return s;
}

RepSpec RepSpec::fermion(int d, int r) {
    if (r < 2 || r > d - 2) throw std::invalid_argument("fermion: need 2 <= r <= d-2");
    RepSpec s;
    s.kind = Kind::Fermion;
    s.dims = {d};
    s.r = r;
    return s;
}

RepSpec RepSpec::boson(int d, int r) {
    if (r < 2 || d < 1) throw std::invalid_argument("boson: need r >= 2");
    RepSpec s;
    s.kind = Kind::Boson;
    s.dims = {d};
    s.r = r;
    return s;
}

RepSpec RepSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    std::vector<int> nums;
    int x;
    while (in >> x) nums.push_back(x);
    if (head == "kron" || head == "kronecker") return kronecker(nums);
    if (nums.size() != 2) throw std::invalid_argument("expected two integers after " + head);
    if (head == "fermion") return fermion(nums[0], nums[1]);
    if (head == "boson") return boson(nums[0], nums[1]);
    throw std::invalid_argument("unknown representation kind: " + head);
}

int RepSpec::n() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int RepSpec::offset(int k) const {
    int o = 0;
    for (int i = 0; i < k; ++i) o += dims[i];
    return o;
}

long RepSpec::dim_v() const {
    switch (kind) {
    case Kind::Kronecker: {
        long p = 1;
        for (int d : dims) p *= d;
        return p;
    }
    case Kind::Fermion: return binomial(dims[0], r);
    case Kind::Boson: return binomial(dims[0] + r - 1, r);
    }
    return 0;
}

std::string RepSpec::name() const {
    std::ostringstream o;
    if (kind == Kind::Kronecker) {
        o << "Kron(";
        for (size_t i = 0; i < dims.size(); ++i) o << (i ? "," : "") << dims[i];
        o << ")";
    } else {
        o << (kind == Kind::Fermion ? "Fermion(" : "Boson(") << dims[0] << "," << r << ")";
    }
    return o.str();
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

static void sorted_tuples(int d, int r, bool strict, int start, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < d; ++i) {
        cur.push_back(i);
        sorted_tuples(d, r, strict, strict ? i + 1 : i, cur, out);
        cur.pop_back();
    }
}

std::vector<Weight> weights(const RepSpec& spec) {
    std::vector<Weight> out;
    int n = spec.n();
    if (spec.kind == Kind::Kronecker) {
        std::vector<int> idx(spec.s(), 0);
        while (true) {
            Weight w;
            w.index = idx;
            w.coords.assign(n, 0);
            for (int k = 0; k < spec.s(); ++k) w.coords[spec.offset(k) + idx[k]] = 1;
            out.push_back(std::move(w));
            int k = spec.s() - 1;
            while (k >= 0 && ++idx[k] == spec.dims[k]) idx[k--] = 0;
            if (k < 0) break;
        }
        return out;
    }
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    sorted_tuples(spec.dims[0], spec.r, spec.kind == Kind::Fermion, 0, cur, tuples);
    for (auto& t : tuples) {
        Weight w;
        w.index = t;
        w.coords.assign(n, 0);
        for (int i : t) w.coords[i] += 1;
        out.push_back(std::move(w));
    }
    return out;
}

long pairing(const Vec& tau, const Vec& chi) {
    if (tau.size() != chi.size()) throw std::invalid_argument("pairing: length mismatch");
    long s = 0;
    for (size_t i = 0; i < tau.size(); ++i) s += tau[i] * chi[i];
    return s;
}

std::vector<Root> positive_roots(const RepSpec& spec) {
    std::vector<Root> out;
    for (int k = 0; k < spec.s(); ++k)
        for (int i = 0; i < spec.dims[k]; ++i)
            for (int j = i + 1; j < spec.dims[k]; ++j) out.push_back({k, i, j});
    return out;
}

Vec root_coords(const RepSpec& spec, const Root& b) {
    Vec v(spec.n(), 0);
    v[spec.offset(b.k) + b.i] += 1;
    v[spec.offset(b.k) + b.j] -= 1;
    return v;
}

long root_level(const RepSpec& spec, const Vec& tau, const Root& b) {
    int o = spec.offset(b.k);
    return tau[o + b.i] - tau[o + b.j];
}

bool is_dominant(const RepSpec& spec, const Vec& tau) {
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        for (int i = 0; i + 1 < spec.dims[k]; ++i)
            if (tau[o + i] < tau[o + i + 1]) return false;
    }
    return true;
}

bool is_normalized(const RepSpec& spec, const Vec& tau) {
    if (spec.kind != Kind::Kronecker) return true;
    for (int k = 0; k + 1 < spec.s(); ++k)
        if (tau[spec.offset(k) + spec.dims[k] - 1] != 0) return false;
    return true;
}

long gcd_vec(const Vec& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

bool is_indivisible(const Vec& tau) { return gcd_vec(tau) == 1; }

Vec normalize(const RepSpec& spec, const Vec& tau) {
    Vec t = tau;
    if (spec.kind == Kind::Kronecker) {
        long total = 0;
        for (int k = 0; k + 1 < spec.s(); ++k) {
            int o = spec.offset(k);
            long c = t[o + spec.dims[k] - 1];
            for (int i = 0; i < spec.dims[k]; ++i) t[o + i] -= c;
            total += c;
        }
        int o = spec.offset(spec.s() - 1);
        for (int i = 0; i < spec.dims.back(); ++i) t[o + i] += total;
    }
    long g = gcd_vec(t);
    if (g > 1)
        for (long& x : t) x /= g;
    return t;
}

FaceData reduce_to_face(const RepSpec& spec, const Vec& tau) {
    if (!is_dominant(spec, tau)) throw std::invalid_argument("reduce_to_face: tau not dominant");
    FaceData f;
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        Vec tb;
        std::vector<int> m;
        for (int i = 0; i < spec.dims[k]; ++i) {
            if (i > 0 && tau[o + i] == tau[o + i - 1]) {
                ++m.back();
            } else {
                tb.push_back(tau[o + i]);
                m.push_back(1);
            }
        }
        f.dbar.push_back(static_cast<int>(tb.size()));
        f.taubar.push_back(std::move(tb));
        f.mult.push_back(std::move(m));
    }
    return f;
}

Vec extend_from_face(const FaceData& face) {
    Vec t;
    for (size_t k = 0; k < face.taubar.size(); ++k)
        for (size_t i = 0; i < face.taubar[k].size(); ++i)
            for (int c = 0; c < face.mult[k][i]; ++c) t.push_back(face.taubar[k][i]);
    return t;
}

Order weight_order(Kind kind, const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return Order::Equal;
    bool le = true, ge = true;
    if (kind == Kind::Kronecker) {
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] < b[k]) le = false;
            if (a[k] > b[k]) ge = false;
        }
    } else {
        long pa = 0, pb = 0;
        for (size_t q = 0; q < a.size(); ++q) {
            pa += a[q];
            pb += b[q];
            if (pa > pb) le = false;
            if (pa < pb) ge = false;
        }
    }
    if (le) return Order::Less;
    if (ge) return Order::Greater;
    return Order::Incomparable;
}

std::vector<std::pair<int, int>> inversions(const Perm& w) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) out.push_back({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

Perm permutation_from_inversions(int m, const std::vector<std::pair<int, int>>& inv) {
    std::vector<std::vector<char>> in(m, std::vector<char>(m, 0));
    for (auto [i, j] : inv) {
        if (i < 0 || j >= m || i >= j) throw std::invalid_argument("invalid root in inversion set");
        in[i][j] = 1;
    }
    Perm w(m);
    for (int i = 0; i < m; ++i) {
        int v = i;
        for (int p = 0; p < i; ++p) v -= in[p][i];
        for (int p = i + 1; p < m; ++p) v += in[i][p];
        w[i] = v;
    }
    std::vector<char> seen(m, 0);
    for (int x : w) {
        if (x < 0 || x >= m || seen[x]) throw std::invalid_argument("not an inversion set");
        seen[x] = 1;
    }
    auto back = inversions(w);
    std::sort(back.begin(), back.end());
    auto want = inv;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (back != want) throw std::invalid_argument("not an inversion set");
    return w;
}

std::vector<Root> inversion_set(const BlockPerm& w) {
    std::vector<Root> out;
    for (size_t k = 0; k < w.size(); ++k)
        for (auto [i, j] : inversions(w[k])) out.push_back({static_cast<int>(k), i, j});
    return out;
}

BlockPerm inversion_set_to_permutation(const RepSpec& spec, const std::vector<Root>& phi) {
    BlockPerm w;
    for (int k = 0; k < spec.s(); ++k) {
        std::vector<std::pair<int, int>> inv;
        for (auto& b : phi)
            if (b.k == k) inv.push_back({b.i, b.j});
        w.push_back(permutation_from_inversions(spec.dims[k], inv));
    }
    return w;
}

BlockPerm identity_perm(const RepSpec& spec) {
    BlockPerm w;
    for (int d : spec.dims) {
        Perm p(d);
        std::iota(p.begin(), p.end(), 0);
        w.push_back(p);
    }
    return w;
}

Perm inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i]] = static_cast<int>(i);
    return v;
}

int length(const BlockPerm& w) {
    int l = 0;
    for (auto& p : w) l += static_cast<int>(inversions(p).size());
    return l;
}

Vec apply_w_to_tau(const RepSpec& spec, const BlockPerm& w, const Vec& tau) {
    Vec out(tau.size());
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        for (int i = 0; i < spec.dims[k]; ++i) out[o + w[k][i]] = tau[o + i];
    }
    return out;
}

Vec apply_perm(const RepSpec& spec, const BlockPerm& w, const Vec& lambda) {
    return apply_w_to_tau(spec, w, lambda);
}

Vec canonical_inequality(const RepSpec& spec, const Vec& ineq, bool symmetry) {
    std::vector<Vec> blocks;
    long c = 0;
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        Vec b(ineq.begin() + o, ineq.begin() + o + spec.dims[k]);
        if (spec.kind == Kind::Kronecker) {
            long m = *std::min_element(b.begin(), b.end());
            for (long& x : b) x -= m;
            c += m;
        }
        blocks.push_back(std::move(b));
    }
    if (symmetry && spec.kind == Kind::Kronecker) {
        size_t i = 0;
        while (i < blocks.size()) {
            size_t j = i;
            while (j < blocks.size() && spec.dims[j] == spec.dims[i]) ++j;
            std::sort(blocks.begin() + i, blocks.begin() + j);
            i = j;
        }
    }
    Vec out;
    for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    if (spec.kind == Kind::Kronecker) out.push_back(c);
    return out;
}

std::string to_string(const Vec& v, const RepSpec& spec) {
    std::ostringstream o;
    o << "(";
    for (int k = 0; k < spec.s(); ++k) {
        if (k) o << " |";
        int off = spec.offset(k);
        for (int i = 0; i < spec.dims[k] && off + i < static_cast<int>(v.size()); ++i)
            o << (k || i ? " " : "") << v[off + i];
    }
    if (static_cast<int>(v.size()) > spec.n()) o << " ; " << v.back();
    o << ")";
    return o.str();
}

std::string to_string(const BlockPerm& w) {
    std::ostringstream o;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) o << "|";
        for (size_t i = 0; i < w[k].size(); ++i) o << (i ? " " : "") << w[k][i] + 1;
    }
    return o.str();
}

std::vector<Vec> dominance_inequalities(const RepSpec& spec) {
    std::vector<Vec> out;
    for (int k = 0; k < spec.s(); ++k)
        for (int i = 0; i + 1 < spec.dims[k]; ++i) {
            Vec v(spec.n(), 0);
            v[spec.offset(k) + i] = -1;
            v[spec.offset(k) + i + 1] = 1;
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace mcone

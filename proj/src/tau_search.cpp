#include "mcone/tau_search.hpp"

#include "mcone/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mcone {

namespace {

enum Status : uint8_t { Unknown, Zero, Plus, Minus, NonZero };

struct State {
    std::vector<uint8_t> st;
    long pos = 0;
    int n_zero = 0, n_unknown = 0;
    Echelon ech;
    std::vector<int> s0;
};

void recurse(const FaceProblem& f, bool prune, State& s, std::vector<std::vector<int>>& out, SearchStats& stats) {
    ++stats.calls;
    size_t codim = f.dim - s.ech.rank();
    if (codim == f.target_codim) {
        out.push_back(s.s0);
        ++stats.candidates;
        return;
    }
    if (s.n_unknown == 0 || static_cast<size_t>(s.n_zero + s.n_unknown) < f.dim - f.target_codim) return;
    int chi = -1;
    for (int i : f.order)
        if (s.st[i] == Unknown) {
            chi = i;
            break;
        }

    State in = s;
    s.st[chi] = NonZero;
    --s.n_unknown;
    recurse(f, prune, s, out, stats);

    in.st[chi] = Zero;
    --in.n_unknown;
    ++in.n_zero;
    in.ech.add(f.coords[chi]);
    in.s0.push_back(chi);
    auto transfer = [&](const std::vector<int>& targets, Status to) {
        for (int g : targets) {
            uint8_t& t = in.st[g];
            if (t != Unknown && t != NonZero) continue;
            if (t == Unknown) --in.n_unknown;
            t = to;
            if (to == Plus) in.pos += f.mult[g];
        }
    };
    transfer(f.greater[chi], Plus);
    transfer(f.lesser[chi], Minus);
    if (!prune || in.pos <= f.u) recurse(f, prune, in, out, stats);
}

void fill_order(FaceProblem& f, const std::function<Order(int, int)>& cmp, const Vec& generic) {
    size_t n = f.coords.size();
    f.greater.assign(n, {});
    f.lesser.assign(n, {});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Order o = cmp(static_cast<int>(i), static_cast<int>(j));
            if (o == Order::Less) f.greater[i].push_back(static_cast<int>(j));
            if (o == Order::Greater) f.lesser[i].push_back(static_cast<int>(j));
        }
    f.order.resize(n);
    std::iota(f.order.begin(), f.order.end(), 0);
    std::vector<long> key(n);
    for (size_t i = 0; i < n; ++i) key[i] = pairing(generic, f.coords[i]);
    std::stable_sort(f.order.begin(), f.order.end(), [&](int a, int b) { return key[a] < key[b]; });
}

bool strictly_decreasing_blocks(const std::vector<int>& dims, const Vec& t) {
    int o = 0;
    for (int d : dims) {
        for (int i = 1; i < d; ++i)
            if (t[o + i - 1] <= t[o + i]) return false;
        o += d;
    }
    return true;
}

long positive_count_face(const FaceProblem& f, const Vec& t) {
    long c = 0;
    for (size_t i = 0; i < f.coords.size(); ++i)
        if (pairing(t, f.coords[i]) > 0) c += f.mult[i];
    return c;
}

void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 1; a <= n - parts + 1; ++a) {
        cur.push_back(a);
        compositions(n - a, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (parts >= 1 && parts <= n) compositions(n, parts, cur, out);
    return out;
}

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = std::min(n, max); a >= 1; --a) {
        cur.push_back(a);
        partitions(n - a, a, cur, out);
        cur.pop_back();
    }
}

Vec expand(const std::vector<Vec>& values, const std::vector<std::vector<int>>& mult) {
    Vec t;
    for (size_t k = 0; k < values.size(); ++k)
        for (size_t i = 0; i < values[k].size(); ++i) t.insert(t.end(), mult[k][i], values[k][i]);
    return t;
}

std::vector<Vec> split_blocks(const std::vector<int>& dims, const Vec& t) {
    std::vector<Vec> out;
    int o = 0;
    for (int d : dims) {
        out.emplace_back(t.begin() + o, t.begin() + o + d);
        o += d;
    }
    return out;
}

std::vector<Vec> kronecker_tau_plus(const RepSpec& spec, const Step1Options& opt, Step1Stats& st) {
    const auto& d = spec.dims;
    int s = spec.s();
    std::vector<std::vector<int>> ebars;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int k, int maxv) {
        if (k == s) {
            ebars.push_back(cur);
            return;
        }
        for (int e = std::min(maxv, d[k]); e >= 1; --e) {
            cur.push_back(e);
            gen(k + 1, e);
            cur.pop_back();
        }
    };
    gen(0, d[0]);

    std::map<Vec, Vec> kept;
    for (const auto& ebar : ebars) {
        long u = dimU_bound(d, ebar);
        FaceProblem face = kronecker_face(ebar, u);
        SearchStats ss;
        auto cands = recurse_candidates(face, opt.prune, &ss);
        st.total_calls += ss.calls;
        RepSpec se = RepSpec::kronecker(ebar);
        bool dense = ebar == d;
        std::set<Vec> hyper, regular, unbounded;
        std::set<Vec> unbounded_keys;
        std::map<Vec, Vec> primes;
        for (const auto& s0 : cands) {
            Vec t = orthogonal_tau(face, s0);
            if (t.empty()) continue;
            hyper.insert(t);
            for (int sign : {1, -1}) {
                Vec ts = t;
                for (long& x : ts) x *= sign;
                if (!strictly_decreasing_blocks(ebar, ts)) continue;
                if (dense && unbounded.insert(ts).second) unbounded_keys.insert(tau_key(se, ts, opt.symmetry));
                if (positive_count_face(face, ts) > u) continue;
                regular.insert(ts);
                Vec key = tau_key(se, ts, opt.symmetry);
                auto it = primes.find(key);
                if (it == primes.end() || ts < it->second) primes[key] = ts;
            }
        }
        if (dense) {
            st.dense_calls = ss.calls;
            st.dense_hyperplanes = static_cast<long>(cands.size());
            st.dense_distinct_hyperplanes = static_cast<long>(hyper.size());
            st.dense_regular = static_cast<long>(regular.size());
            st.dense_regular_mod_sym = static_cast<long>(primes.size());
            st.dense_regular_unbounded = static_cast<long>(unbounded.size());
            st.dense_regular_unbounded_mod_sym = static_cast<long>(unbounded_keys.size());
        }
        st.tau_prime += static_cast<long>(primes.size());

        std::vector<int> sigma(s);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (const auto& [key, tp] : primes) {
            auto vals = split_blocks(ebar, tp);
            std::vector<int> perm = sigma;
            do {
                // block perm[i] of the result receives block i of tau'
                bool fits = true;
                for (int i = 0; i < s; ++i)
                    if (ebar[i] > d[perm[i]]) fits = false;
                if (!fits) continue;
                std::vector<std::vector<std::vector<int>>> comps(s);
                for (int i = 0; i < s; ++i) comps[perm[i]] = compositions(d[perm[i]], ebar[i]);
                std::vector<Vec> block_vals(s);
                for (int i = 0; i < s; ++i) block_vals[perm[i]] = vals[i];
                std::vector<size_t> idx(s, 0);
                while (true) {
                    std::vector<std::vector<int>> m(s);
                    for (int k = 0; k < s; ++k) m[k] = comps[k][idx[k]];
                    Vec t = normalize(spec, expand(block_vals, m));
                    ++st.extensions;
                    if (check_Bpp(spec, t)) {
                        ++st.bpp_pass;
                        Vec k2 = tau_key(spec, t, opt.symmetry);
                        auto it = kept.find(k2);
                        if (it == kept.end() || t < it->second) kept[k2] = t;
                    }
                    int k = s - 1;
                    while (k >= 0 && ++idx[k] == comps[k].size()) idx[k--] = 0;
                    if (k < 0) break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    st.bpp_mod_sym = static_cast<long>(kept.size());
    std::vector<Vec> out;
    for (const auto& [key, t] : kept)
        if (check_Cprime(spec, t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> symmetric_tau_plus(const RepSpec& spec, const Step1Options& opt, Step1Stats& st) {
    int n = spec.n();
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(n, n, cur, parts);
    std::set<Vec> kept;
    for (auto lam : parts) {
        std::sort(lam.begin(), lam.end());
        do {
            const std::vector<int>& mu = lam;
            long sq = 0;
            for (int m : mu) sq += static_cast<long>(m) * m;
            long u = (static_cast<long>(n) * n - sq) / 2;
            FaceProblem face = symmetric_power_face(spec.kind, spec.r, mu, u);
            SearchStats ss;
            auto cands = recurse_candidates(face, opt.prune, &ss);
            st.total_calls += ss.calls;
            bool dense = static_cast<int>(mu.size()) == n;
            std::set<Vec> hyper, regular, unbounded;
            for (const auto& s0 : cands) {
                Vec t = orthogonal_tau(face, s0);
                if (t.empty()) continue;
                hyper.insert(t);
                for (int sign : {1, -1}) {
                    Vec ts = t;
                    for (long& x : ts) x *= sign;
                    if (!std::is_sorted(ts.begin(), ts.end(), std::greater<long>())) continue;
                    if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) continue;
                    if (dense) unbounded.insert(ts);
                    if (positive_count_face(face, ts) > u) continue;
                    if (!regular.insert(ts).second) continue;
                    ++st.tau_prime;
                    Vec full;
                    for (size_t i = 0; i < mu.size(); ++i) full.insert(full.end(), mu[i], ts[i]);
                    ++st.extensions;
                    if (!check_Bpp(spec, full)) continue;
                    ++st.bpp_pass;
                    kept.insert(full);
                }
            }
            if (dense) {
                st.dense_calls = ss.calls;
                st.dense_hyperplanes = static_cast<long>(cands.size());
                st.dense_distinct_hyperplanes = static_cast<long>(hyper.size());
                st.dense_regular = static_cast<long>(regular.size());
                st.dense_regular_mod_sym = static_cast<long>(regular.size());
                st.dense_regular_unbounded = static_cast<long>(unbounded.size());
                st.dense_regular_unbounded_mod_sym = static_cast<long>(unbounded.size());
            }
        } while (std::next_permutation(lam.begin(), lam.end()));
    }
    st.bpp_mod_sym = static_cast<long>(kept.size());
    std::vector<Vec> out;
    for (const auto& t : kept)
        if (check_Cprime(spec, t)) out.push_back(t);
    return out;
}

}  // namespace

std::vector<std::vector<int>> recurse_candidates(const FaceProblem& face, bool prune, SearchStats* stats) {
    SearchStats local;
    State s{std::vector<uint8_t>(face.coords.size(), Unknown), 0, 0, static_cast<int>(face.coords.size()),
            Echelon(face.dim), {}};
    std::vector<std::vector<int>> out;
    recurse(face, prune, s, out, local);
    if (stats) *stats = local;
    return out;
}

Vec orthogonal_tau(const FaceProblem& face, const std::vector<int>& s0) {
    Echelon e(face.dim);
    for (int i : s0) e.add(face.coords[i]);
    for (const auto& v : face.normalization) e.add(v);
    auto orth = e.orthogonal();
    if (orth.size() != 1) return {};
    Vec t = orth[0];
    long g = gcd_vec(t);
    if (g == 0) return {};
    for (long& x : t) x /= g;
    return t;
}

FaceProblem kronecker_face(const std::vector<int>& ebar, long u) {
    RepSpec se = RepSpec::kronecker(ebar);
    FaceProblem f;
    auto ws = weights(se);
    std::vector<std::vector<int>> idx;
    for (const auto& w : ws) {
        f.coords.push_back(w.coords);
        f.mult.push_back(1);
        idx.push_back(w.index);
    }
    f.dim = static_cast<size_t>(se.n());
    f.target_codim = static_cast<size_t>(se.s());
    f.u = u;
    for (int k = 0; k + 1 < se.s(); ++k) {
        Vec v(f.dim, 0);
        v[se.offset(k) + ebar[k] - 1] = 1;
        f.normalization.push_back(v);
    }
    Vec generic(f.dim, 0);
    for (int k = 0; k < se.s(); ++k)
        for (int i = 0; i < ebar[k]; ++i) generic[se.offset(k) + i] = (ebar[k] - i) * (1000L + 37L * k);
    fill_order(f, [&](int a, int b) { return weight_order(Kind::Kronecker, idx[a], idx[b]); }, generic);
    return f;
}

FaceProblem symmetric_power_face(Kind kind, int r, const std::vector<int>& mu, long u) {
    FaceProblem f;
    size_t e = mu.size();
    f.dim = e;
    f.target_codim = 1;
    f.u = u;
    std::vector<int> c(e, 0);
    std::function<void(size_t, int)> gen = [&](size_t i, int left) {
        if (i == e) {
            if (left != 0) return;
            long m = 1;
            for (size_t q = 0; q < e; ++q)
                m *= kind == Kind::Fermion ? binomial(mu[q], c[q]) : binomial(mu[q] + c[q] - 1, c[q]);
            if (m == 0) return;
            f.coords.emplace_back(c.begin(), c.end());
            f.mult.push_back(m);
            return;
        }
        int top = kind == Kind::Fermion ? std::min(left, mu[i]) : left;
        for (int x = top; x >= 0; --x) {
            c[i] = x;
            gen(i + 1, left - x);
        }
        c[i] = 0;
    };
    gen(0, r);
    std::vector<std::vector<int>> cnt;
    for (const auto& v : f.coords) cnt.emplace_back(v.begin(), v.end());
    Vec generic(e);
    for (size_t i = 0; i < e; ++i) generic[i] = static_cast<long>(e - i) * 1000 + static_cast<long>(i * i);
    fill_order(f, [&](int a, int b) { return weight_order(kind, cnt[a], cnt[b]); }, generic);
    return f;
}

long dimU_bound(const std::vector<int>& d, std::vector<int> ebar) {
    std::sort(ebar.begin(), ebar.end(), std::greater<int>());
    Rat total(0);
    for (size_t k = 0; k < d.size(); ++k) {
        Rat t(static_cast<long>(d[k]) * d[k] * (ebar[k] - 1));
        t /= 2 * ebar[k];
        total += t;
    }
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
    return fl.get_si();
}

long dim_U(const RepSpec& spec, const Vec& tau) {
    long c = 0;
    for (const auto& b : positive_roots(spec))
        if (root_level(spec, tau, b) != 0) ++c;
    return c;
}

long positive_weight_count(const RepSpec& spec, const Vec& tau) {
    long c = 0;
    for (const auto& w : weights(spec))
        if (pairing(tau, w.coords) > 0) ++c;
    return c;
}

bool check_Bpp(const RepSpec& spec, const Vec& tau) { return positive_weight_count(spec, tau) <= dim_U(spec, tau); }

bool check_Cprime(const RepSpec& spec, const Vec& tau) {
    Echelon e(static_cast<size_t>(spec.n()));
    for (const auto& w : weights(spec))
        if (pairing(tau, w.coords) == 0) e.add(w.coords);
    size_t codim = static_cast<size_t>(spec.n()) - e.rank();
    return codim == static_cast<size_t>(spec.kind == Kind::Kronecker ? spec.s() : 1);
}

Vec tau_key(const RepSpec& spec, const Vec& tau, bool symmetry) { return canonical_inequality(spec, tau, symmetry); }

std::vector<Vec> enumerate_tau_plus(const RepSpec& spec, const Step1Options& opt, Step1Stats* stats) {
    Step1Stats local;
    auto out = spec.kind == Kind::Kronecker ? kronecker_tau_plus(spec, opt, local) : symmetric_tau_plus(spec, opt, local);
    if (stats) *stats = local;
    return out;
}

std::vector<Vec> brute_force_tau_plus(const RepSpec& spec, bool symmetry) {
    auto ws = weights(spec);
    size_t n = static_cast<size_t>(spec.n());
    size_t codim = spec.kind == Kind::Kronecker ? static_cast<size_t>(spec.s()) : 1;
    size_t need = n - codim;
    std::vector<Vec> norm;
    if (spec.kind == Kind::Kronecker)
        for (int k = 0; k + 1 < spec.s(); ++k) {
            Vec v(n, 0);
            v[spec.offset(k) + spec.dims[k] - 1] = 1;
            norm.push_back(v);
        }
    std::map<Vec, Vec> kept;
    std::vector<int> pick(need);
    std::function<void(size_t, int, Echelon&)> rec = [&](size_t depth, int start, Echelon& e) {
        if (depth == need) {
            Echelon full = e;
            for (const auto& v : norm) full.add(v);
            auto orth = full.orthogonal();
            if (orth.size() != 1) return;
            Vec t = orth[0];
            long g = gcd_vec(t);
            for (long& x : t) x /= g;
            for (int sign : {1, -1}) {
                Vec ts = t;
                for (long& x : ts) x *= sign;
                if (!is_dominant(spec, ts) || !check_Bpp(spec, ts) || !check_Cprime(spec, ts)) continue;
                Vec key = tau_key(spec, ts, symmetry);
                auto it = kept.find(key);
                if (it == kept.end() || ts < it->second) kept[key] = ts;
            }
            return;
        }
        for (int i = start; i < static_cast<int>(ws.size()); ++i) {
            Echelon next = e;
            if (!next.add(ws[i].coords)) continue;
            rec(depth + 1, i + 1, next);
        }
    };
    Echelon e(n);
    rec(0, 0, e);
    std::vector<Vec> out;
    for (const auto& [k, t] : kept) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mcone

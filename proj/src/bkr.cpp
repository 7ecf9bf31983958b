#include "mcone/bkr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcone {

Vec chi_det(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    int n = spec.n();
    Vec chi(n, 0);
    for (auto& wt : weights(spec))
        if (pairing(tau, wt.coords) > 0)
            for (int q = 0; q < n; ++q) chi[q] += wt.coords[q];
    for (auto& b : inversion_set(w)) {
        auto rc = root_coords(spec, b);
        for (int q = 0; q < n; ++q) chi[q] -= rc[q];
    }
    if (pairing(tau, chi) != 0) throw std::logic_error("chi_det: nonzero pairing with tau");
    return chi;
}

LeviBlocks levi_blocks(const RepSpec& spec, const Vec& tau) {
    LeviBlocks lb;
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        std::vector<long> val;
        std::vector<int> mult, first;
        for (int a = 0; a < spec.dims[k];) {
            int b = a;
            while (b + 1 < spec.dims[k] && tau[o + b + 1] == tau[o + a]) ++b;
            val.push_back(tau[o + a]);
            mult.push_back(b - a + 1);
            first.push_back(o + a);
            a = b + 1;
        }
        lb.value.push_back(std::move(val));
        lb.mult.push_back(std::move(mult));
        lb.first.push_back(std::move(first));
    }
    return lb;
}

BlockPerm wbar(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    auto lb = levi_blocks(spec, tau);
    BlockPerm out(spec.s());
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        out[k].resize(spec.dims[k]);
        for (size_t i = 0; i < lb.mult[k].size(); ++i) {
            int a = lb.first[k][i] - o, m = lb.mult[k][i];
            std::vector<int> idx(m);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int x, int y) { return w[k][a + x] < w[k][a + y]; });
            for (int r = 0; r < m; ++r) out[k][a + idx[r]] = a + r;
        }
    }
    return out;
}

std::optional<LeviWeight> levi_weight(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    Vec chi = chi_det(spec, tau, w);
    Vec nu = apply_perm(spec, wbar(spec, tau, w), chi);
    auto lb = levi_blocks(spec, tau);
    LeviWeight out(spec.s());
    for (int k = 0; k < spec.s(); ++k)
        for (size_t i = 0; i < lb.mult[k].size(); ++i) {
            Partition p;
            for (int q = 0; q < lb.mult[k][i]; ++q) {
                long x = nu[lb.first[k][i] + q];
                if (x < 0) return std::nullopt;
                p.push_back(static_cast<int>(x));
            }
            // the eigenline of a Borel of G^tau has an extremal weight
            std::sort(p.rbegin(), p.rend());
            out[k].push_back(trim(p));
        }
    return out;
}

std::vector<std::vector<int>> pset(const RepSpec& spec, const LeviBlocks& lb) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (spec.kind == Kind::Kronecker) {
        std::function<void(int, long)> rec = [&](int k, long sum) {
            if (k == spec.s()) {
                if (sum == 0) out.push_back(cur);
                return;
            }
            for (size_t i = 0; i < lb.value[k].size(); ++i) {
                cur.push_back(static_cast<int>(i));
                rec(k + 1, sum + lb.value[k][i]);
                cur.pop_back();
            }
        };
        rec(0, 0);
        return out;
    }
    const auto& val = lb.value[0];
    const auto& mult = lb.mult[0];
    int L = static_cast<int>(val.size());
    std::function<void(int, int, long)> rec = [&](int j, int left, long sum) {
        if (j == L) {
            if (left == 0 && sum == 0) out.push_back(cur);
            return;
        }
        int top = spec.kind == Kind::Fermion ? std::min(left, mult[j]) : left;
        for (int c = 0; c <= top; ++c) {
            cur.push_back(c);
            rec(j + 1, left - c, sum + c * val[j]);
            cur.pop_back();
        }
    };
    rec(0, spec.r, 0);
    return out;
}

namespace {

constexpr int kMaxPlethysmVars = 8;
constexpr int kMaxPlethysmDegree = 24;

struct Skipped {};

// Kronecker case: rows of P carry one partition per block, all of size delta(j).
Int kron_expansion(const RepSpec& spec, const LeviBlocks& lb, const LeviWeight& nu) {
    auto P = pset(spec, lb);
    int s = spec.s();
    size_t p = P.size();
    std::vector<std::vector<int>> rem(s);
    for (int k = 0; k < s; ++k)
        for (auto& part : nu[k]) rem[k].push_back(size(part));
    // rows meeting each level space
    std::vector<std::vector<std::vector<int>>> rows_at(s);
    for (int k = 0; k < s; ++k) {
        rows_at[k].resize(lb.value[k].size());
        for (size_t j = 0; j < p; ++j) rows_at[k][P[j][k]].push_back(static_cast<int>(j));
    }
    std::vector<int> delta(p, 0);
    std::vector<std::vector<Partition>> Lam(p, std::vector<Partition>(s));
    Int total = 0;

    std::function<Int()> lr_product = [&]() -> Int {
        Int prod = 1;
        for (int k = 0; k < s && prod != 0; ++k)
            for (size_t i = 0; i < lb.value[k].size() && prod != 0; ++i) {
                std::vector<Partition> inner;
                for (int j : rows_at[k][i]) inner.push_back(Lam[j][k]);
                prod *= lr_coefficient(nu[k][i], inner);
            }
        return prod;
    };

    std::function<void(size_t, Int)> choose_rows = [&](size_t j, Int weight) {
        if (j == p) {
            total += weight * lr_product();
            return;
        }
        std::vector<Partition> cur(s);
        std::vector<std::vector<Partition>> opts(s);
        for (int k = 0; k < s; ++k) {
            int i = P[j][k];
            for (auto& l : partitions(delta[j], lb.mult[k][i]))
                if (contains(nu[k][i], l)) opts[k].push_back(l);
            if (opts[k].empty()) return;
        }
        std::function<void(int)> pick = [&](int k) {
            if (k == s) {
                Int g = kronecker_coefficient(cur);
                if (g == 0) return;
                Lam[j] = cur;
                choose_rows(j + 1, weight * g);
                return;
            }
            for (auto& l : opts[k]) {
                cur[k] = l;
                pick(k + 1);
            }
        };
        pick(0);
    };

    std::function<void(size_t)> choose_delta = [&](size_t j) {
        if (j == p) {
            for (int k = 0; k < s; ++k)
                for (int r : rem[k])
                    if (r) return;
            choose_rows(0, 1);
            return;
        }
        int top = 1 << 30;
        for (int k = 0; k < s; ++k) top = std::min(top, rem[k][P[j][k]]);
        for (int d = 0; d <= top; ++d) {
            delta[j] = d;
            for (int k = 0; k < s; ++k) rem[k][P[j][k]] -= d;
            choose_delta(j + 1);
            for (int k = 0; k < s; ++k) rem[k][P[j][k]] += d;
        }
        delta[j] = 0;
    };
    choose_delta(0);
    return total;
}

long dim_schur_power(Kind kind, int t, int m) {
    return kind == Kind::Fermion ? binomial(m, t) : binomial(m + t - 1, t);
}

Partition theta_of(Kind kind, int t) {
    if (t == 0) return {};
    if (kind == Kind::Fermion) return Partition(t, 1);
    return Partition{t};
}

// Fermion/boson case: V^tau = sum over I of the tensor products of
// S^{theta(I(j))} of the level spaces.
Int power_expansion(const RepSpec& spec, const LeviBlocks& lb, const LeviWeight& nu0) {
    const auto& mult = lb.mult[0];
    const auto& nu = nu0[0];
    int L = static_cast<int>(mult.size());
    auto P = pset(spec, lb);
    size_t p = P.size();
    std::vector<int> rem(L);
    for (int j = 0; j < L; ++j) rem[j] = size(nu[j]);
    std::vector<int> delta(p, 0);
    // Mu[I][j]
    std::vector<std::vector<Partition>> Mu(p, std::vector<Partition>(L));
    Int total = 0;

    auto lr_product = [&]() -> Int {
        Int prod = 1;
        for (int j = 0; j < L && prod != 0; ++j) {
            std::vector<Partition> inner;
            for (size_t I = 0; I < p; ++I) inner.push_back(Mu[I][j]);
            prod *= lr_coefficient(nu[j], inner);
        }
        return prod;
    };

    std::function<void(size_t, Int)> choose_rows = [&](size_t I, Int weight) {
        if (I == p) {
            total += weight * lr_product();
            return;
        }
        const auto& cnt = P[I];
        int d = delta[I];
        // per level: options (Lambda, Mu, plethysm coefficient)
        struct Opt {
            Partition lam, mu;
            Int a;
        };
        std::vector<std::vector<Opt>> opts(L);
        for (int j = 0; j < L; ++j) {
            int t = cnt[j];
            Partition th = theta_of(spec.kind, t);
            long dimw = dim_schur_power(spec.kind, t, mult[j]);
            for (auto& lam : partitions(d, static_cast<int>(std::min<long>(dimw, d)))) {
                for (auto& mu : partitions(t * d, mult[j])) {
                    if (!contains(nu[j], mu)) continue;
                    if (t > 0 && d > 0 &&
                        (static_cast<int>(mu.size()) > kMaxPlethysmVars || t * d > kMaxPlethysmDegree))
                        throw Skipped{};
                    Int a = plethysm_coefficient(lam, th, mu);
                    if (a != 0) opts[j].push_back({lam, mu, a});
                }
            }
            if (opts[j].empty()) return;
        }
        std::vector<Partition> lams(L);
        std::function<void(int, Int)> pick = [&](int j, Int wgt) {
            if (j == L) {
                Int g = kronecker_coefficient(lams);
                if (g != 0) choose_rows(I + 1, weight * wgt * g);
                return;
            }
            for (auto& o : opts[j]) {
                lams[j] = o.lam;
                Mu[I][j] = o.mu;
                pick(j + 1, wgt * o.a);
            }
        };
        pick(0, 1);
    };

    std::function<void(size_t)> choose_delta = [&](size_t I) {
        if (I == p) {
            for (int r : rem)
                if (r) return;
            choose_rows(0, 1);
            return;
        }
        int top = 1 << 30;
        bool any = false;
        for (int j = 0; j < L; ++j)
            if (P[I][j]) {
                top = std::min(top, rem[j] / P[I][j]);
                any = true;
            }
        if (!any) top = 0;  // only for r = 0
        for (int d = 0; d <= top; ++d) {
            delta[I] = d;
            for (int j = 0; j < L; ++j) rem[j] -= P[I][j] * d;
            choose_delta(I + 1);
            for (int j = 0; j < L; ++j) rem[j] += P[I][j] * d;
        }
        delta[I] = 0;
    };
    choose_delta(0);
    return total;
}

// Number of ways to write target as a sum of the given vectors.
struct PartitionFunction {
    std::vector<Vec> w;
    std::map<std::pair<size_t, Vec>, Int> memo;
    Int count(size_t i, const Vec& r) {
        bool zero = true;
        for (long x : r) {
            if (x < 0) return 0;
            if (x) zero = false;
        }
        if (zero) return 1;
        if (i == w.size()) return 0;
        auto key = std::make_pair(i, r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int s = 0;
        Vec c = r;
        while (true) {
            s += count(i + 1, c);
            bool ok = true;
            for (size_t q = 0; q < c.size(); ++q) {
                c[q] -= w[i][q];
                if (c[q] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo.emplace(std::move(key), s);
        return s;
    }
};

}  // namespace

BkrResult levi_multiplicity(const RepSpec& spec, const Vec& tau, const LeviWeight& nu) {
    auto lb = levi_blocks(spec, tau);
    BkrResult res;
    if (spec.kind == Kind::Kronecker) {
        res.multiplicity = kron_expansion(spec, lb, nu);
        return res;
    }
    try {
        res.multiplicity = power_expansion(spec, lb, nu);
    } catch (const Skipped&) {
        res.skipped = true;
    }
    return res;
}

BkrResult levi_multiplicity(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    auto nu = levi_weight(spec, tau, w);
    if (!nu) return {};
    return levi_multiplicity(spec, tau, *nu);
}

Int levi_multiplicity_weyl(const RepSpec& spec, const Vec& tau, const LeviWeight& nu) {
    auto lb = levi_blocks(spec, tau);
    int n = spec.n();
    Vec target0(n, 0), rho(n, 0);
    std::vector<std::pair<int, int>> groups;  // first coordinate, size
    for (int k = 0; k < spec.s(); ++k)
        for (size_t i = 0; i < lb.mult[k].size(); ++i) {
            int f = lb.first[k][i], m = lb.mult[k][i];
            groups.push_back({f, m});
            for (int q = 0; q < m; ++q) {
                target0[f + q] = q < static_cast<int>(nu[k][i].size()) ? nu[k][i][q] : 0;
                rho[f + q] = m - 1 - q;
            }
        }
    PartitionFunction pf;
    for (auto& wt : weights(spec))
        if (pairing(tau, wt.coords) == 0) pf.w.push_back(wt.coords);
    std::vector<std::vector<int>> perms;
    for (auto& [f, m] : groups) {
        std::vector<int> p(m);
        std::iota(p.begin(), p.end(), 0);
        perms.push_back(std::move(p));
    }
    Int mult = 0;
    while (true) {
        Vec t = target0;
        int sign = 1;
        for (size_t g = 0; g < groups.size(); ++g) {
            auto [f, m] = groups[g];
            const auto& p = perms[g];
            for (int q = 0; q < m; ++q) t[f + q] += rho[f + q] - rho[f + p[q]];
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if (p[a] > p[b]) sign = -sign;
        }
        Int c = pf.count(0, t);
        if (sign > 0) mult += c;
        else mult -= c;
        size_t g = 0;
        for (; g < groups.size(); ++g)
            if (std::next_permutation(perms[g].begin(), perms[g].end())) break;
        if (g == groups.size()) break;
    }
    return mult;
}

Int levi_multiplicity_weyl(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    auto nu = levi_weight(spec, tau, w);
    if (!nu) return 0;
    return levi_multiplicity_weyl(spec, tau, *nu);
}

bool bkr_passes(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    auto r = levi_multiplicity(spec, tau, w);
    return r.skipped || r.multiplicity == 1;
}

}  // namespace mcone

#include "mcone/isotropy.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace mcone {

namespace {

bool all_zero(const Mat<Rat>& m) {
    for (auto& row : m)
        for (auto& x : row)
            if (!is_zero(x)) return false;
    return true;
}

std::vector<Rat> mul(const Mat<Rat>& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(m[i][j]) && !is_zero(v[j])) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

int pid(LieActionContext ctx, uint64_t seed, int max_resample) {
    std::mt19937_64 rng(seed);
    int resamples = 0;
    while (true) {
        bool trivial = ctx.dim == 0;
        if (!trivial) {
            trivial = true;
            for (auto& g : ctx.gens)
                if (!all_zero(g)) {
                    trivial = false;
                    break;
                }
        }
        if (trivial) return static_cast<int>(ctx.gens.size());

        size_t m = ctx.gens.size(), n = ctx.dim;
        std::vector<Rat> v(n);
        for (auto& x : v) x = Rat(static_cast<long>(rng() % 20001) - 10000);
        std::vector<std::vector<Rat>> cols;
        for (auto& g : ctx.gens) cols.push_back(mul(g, v));
        Mat<Rat> M(n, std::vector<Rat>(m));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) M[i][j] = cols[j][i];
        Mat<Rat> img = cols;  // rows span the orbit tangent space
        auto piv = rref(img);
        if (piv.empty()) {
            if (++resamples > max_resample) throw std::runtime_error("pid: random point fixed repeatedly");
            continue;
        }
        img.resize(piv.size());
        auto ker = kernel_field<Rat>(M, m, Rat(1));

        std::vector<char> is_piv(n, 0);
        for (size_t p : piv) is_piv[p] = 1;
        std::vector<size_t> keep;
        for (size_t i = 0; i < n; ++i)
            if (!is_piv[i]) keep.push_back(i);
        auto quotient = [&](std::vector<Rat> x) {
            for (size_t r = 0; r < piv.size(); ++r) {
                if (is_zero(x[piv[r]])) continue;
                Rat c = x[piv[r]];
                for (size_t j = 0; j < n; ++j)
                    if (!is_zero(img[r][j])) x[j] -= c * img[r][j];
            }
            std::vector<Rat> out;
            for (size_t i : keep) out.push_back(x[i]);
            return out;
        };

        LieActionContext next;
        next.dim = keep.size();
        for (auto& c : ker) {
            Mat<Rat> Y(n, std::vector<Rat>(n, Rat(0)));
            for (size_t t = 0; t < m; ++t) {
                if (is_zero(c[t])) continue;
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        if (!is_zero(ctx.gens[t][i][j])) Y[i][j] += c[t] * ctx.gens[t][i][j];
            }
            Mat<Rat> Yq(next.dim, std::vector<Rat>(next.dim));
            for (size_t a = 0; a < keep.size(); ++a) {
                std::vector<Rat> col(n);
                for (size_t i = 0; i < n; ++i) col[i] = Y[i][keep[a]];
                auto q = quotient(col);
                for (size_t b = 0; b < keep.size(); ++b) Yq[b][a] = q[b];
            }
            next.gens.push_back(std::move(Yq));
        }
        ctx = std::move(next);
    }
}

int pid_checked(const LieActionContext& ctx, uint64_t seed) {
    for (int round = 0; round < 3; ++round) {
        int a = pid(ctx, seed + 3 * round);
        int b = pid(ctx, seed + 3 * round + 1);
        int c = pid(ctx, seed + 3 * round + 2);
        if (a == b && b == c) return a;
    }
    throw SeedDisagreement("pid: seeds disagree");
}

LieActionContext compact_context(const WeightIndex& wi, const std::vector<int>& support, const Vec& tau) {
    const auto& spec = wi.spec();
    std::map<int, int> pos;
    for (size_t i = 0; i < support.size(); ++i) pos[support[i]] = static_cast<int>(i);
    size_t N = support.size();
    LieActionContext ctx;
    ctx.dim = 2 * N;
    // complex matrix of E^k_{ab} restricted to the support
    auto emat = [&](int k, int a, int b) {
        Mat<Rat> e(N, std::vector<Rat>(N, Rat(0)));
        for (size_t j = 0; j < N; ++j) {
            auto t = wi.apply(k, a, b, support[j]);
            if (t.coef == 0) continue;
            auto it = pos.find(t.target);
            if (it == pos.end()) throw std::logic_error("compact_context: support not stable");
            e[it->second][j] += Rat(t.coef);
        }
        return e;
    };
    auto realify = [&](const Mat<Rat>& R, const Mat<Rat>& I) {
        Mat<Rat> out(2 * N, std::vector<Rat>(2 * N, Rat(0)));
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) {
                out[i][j] = R[i][j];
                out[i][N + j] = -I[i][j];
                out[N + i][j] = I[i][j];
                out[N + i][N + j] = R[i][j];
            }
        return out;
    };
    Mat<Rat> zero(N, std::vector<Rat>(N, Rat(0)));
    for (int k = 0; k < spec.s(); ++k) {
        int o = spec.offset(k);
        for (int a = 0; a < spec.dims[k]; ++a)
            for (int b = a; b < spec.dims[k]; ++b) {
                if (!tau.empty() && tau[o + a] != tau[o + b]) continue;
                if (a == b) {
                    ctx.gens.push_back(realify(zero, emat(k, a, a)));
                    continue;
                }
                auto eab = emat(k, a, b), eba = emat(k, b, a);
                Mat<Rat> d = eab, s = eab;
                for (size_t i = 0; i < N; ++i)
                    for (size_t j = 0; j < N; ++j) {
                        d[i][j] -= eba[i][j];
                        s[i][j] += eba[i][j];
                    }
                ctx.gens.push_back(realify(d, zero));
                ctx.gens.push_back(realify(zero, s));
            }
    }
    return ctx;
}

int pid_full(const RepSpec& spec, uint64_t seed) {
    WeightIndex wi(spec);
    std::vector<int> all(wi.size());
    for (int i = 0; i < wi.size(); ++i) all[i] = i;
    return pid_checked(compact_context(wi, all, {}), seed);
}

int pid_fixed(const RepSpec& spec, const Vec& tau, uint64_t seed) {
    WeightIndex wi(spec);
    std::vector<int> fixed;
    for (int i = 0; i < wi.size(); ++i)
        if (pairing(tau, wi.weights()[i].coords) == 0) fixed.push_back(i);
    return pid_checked(compact_context(wi, fixed, tau), seed);
}

bool check_C0(const RepSpec& spec, uint64_t seed) { return pid_full(spec, seed) == spec.central_rank(); }

bool check_C(const RepSpec& spec, const Vec& tau, uint64_t seed) {
    return pid_fixed(spec, tau, seed) == spec.central_rank() + 1;
}

bool check_C_relative(const RepSpec& spec, const Vec& tau, int base, uint64_t seed) {
    return pid_fixed(spec, tau, seed) == base + 1;
}

}  // namespace mcone

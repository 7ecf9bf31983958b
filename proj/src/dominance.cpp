#include "mcone/dominance.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mcone {

bool TangentMap::square_levels() const {
    for (auto& l : levels)
        if (l.row_end - l.row_begin != l.col_end - l.col_begin) return false;
    return true;
}

TangentMap tangent_map(const WeightIndex& wi, const Vec& tau, const BlockPerm& w) {
    const auto& spec = wi.spec();
    TangentMap tm;
    const auto& ws = wi.weights();
    int n = wi.size();
    std::vector<long> lev(n);
    for (int i = 0; i < n; ++i) lev[i] = pairing(tau, ws[i].coords);

    tm.roots = inversion_set(w);
    std::stable_sort(tm.roots.begin(), tm.roots.end(), [&](const Root& x, const Root& y) {
        return root_level(spec, tau, x) < root_level(spec, tau, y);
    });
    for (auto& r : tm.roots) tm.col_level.push_back(root_level(spec, tau, r));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return lev[x] < lev[y]; });
    std::vector<int> row_of(n, -1);
    tm.var_of.assign(n, -1);
    for (int i : order) {
        if (lev[i] > 0) {
            row_of[i] = static_cast<int>(tm.pos_weights.size());
            tm.pos_weights.push_back(i);
            tm.row_level.push_back(lev[i]);
        } else if (lev[i] == 0) {
            tm.var_of[i] = static_cast<int>(tm.zero_weights.size());
            tm.zero_weights.push_back(i);
        } else {
            tm.neg_weights.push_back(i);
        }
    }

    for (int c = 0; c < static_cast<int>(tm.roots.size()); ++c)
        for (int src = 0; src < n; ++src) {
            if (lev[src] > 0) continue;
            auto t = wi.apply_root(tm.roots[c], src);
            if (t.coef == 0) continue;
            long l = lev[t.target];
            if (l > 0)
                tm.a.push_back({row_of[t.target], c, t.coef, src});
            else if (l == 0)
                tm.b.push_back({tm.var_of[t.target], c, t.coef, src});
        }

    std::vector<long> ls(tm.row_level);
    ls.insert(ls.end(), tm.col_level.begin(), tm.col_level.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    for (long l : ls) {
        TangentMap::Level L{l, 0, 0, 0, 0};
        L.row_begin = static_cast<int>(std::lower_bound(tm.row_level.begin(), tm.row_level.end(), l) - tm.row_level.begin());
        L.row_end = static_cast<int>(std::upper_bound(tm.row_level.begin(), tm.row_level.end(), l) - tm.row_level.begin());
        L.col_begin = static_cast<int>(std::lower_bound(tm.col_level.begin(), tm.col_level.end(), l) - tm.col_level.begin());
        L.col_end = static_cast<int>(std::upper_bound(tm.col_level.begin(), tm.col_level.end(), l) - tm.col_level.begin());
        tm.levels.push_back(L);
    }
    return tm;
}

namespace {

const TangentMap::Level* level_of_row(const TangentMap& tm, int row) {
    for (auto& L : tm.levels)
        if (row >= L.row_begin && row < L.row_end) return &L;
    return nullptr;
}

}  // namespace

std::vector<Mat<Int>> tangent_blocks(const TangentMap& tm, const std::vector<Int>& x0) {
    std::vector<Mat<Int>> out;
    for (auto& L : tm.levels)
        out.emplace_back(L.row_end - L.row_begin, std::vector<Int>(L.col_end - L.col_begin, Int(0)));
    for (auto& e : tm.a) {
        int v = tm.var_of[e.source];
        if (v < 0) continue;
        size_t li = level_of_row(tm, e.row) - tm.levels.data();
        auto& L = tm.levels[li];
        out[li][e.row - L.row_begin][e.col - L.col_begin] += e.coef * x0[v];
    }
    return out;
}

std::vector<std::vector<std::vector<MPoly>>> symbolic_blocks(const TangentMap& tm) {
    size_t nv = tm.zero_weights.size();
    std::vector<std::vector<std::vector<MPoly>>> out;
    for (auto& L : tm.levels)
        out.emplace_back(L.row_end - L.row_begin, std::vector<MPoly>(L.col_end - L.col_begin, MPoly(nv)));
    for (auto& e : tm.a) {
        int v = tm.var_of[e.source];
        if (v < 0) continue;
        size_t li = level_of_row(tm, e.row) - tm.levels.data();
        auto& L = tm.levels[li];
        auto& slot = out[li][e.row - L.row_begin][e.col - L.col_begin];
        slot = slot + MPoly::var(nv, v, e.coef);
    }
    return out;
}

bool is_dominant_probabilistic(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed, int retries) {
    WeightIndex wi(spec);
    auto tm = tangent_map(wi, tau, w);
    if (!tm.square_levels()) return false;
    std::mt19937_64 rng(seed);
    for (int r = 0; r < retries; ++r) {
        std::vector<Int> x0(tm.zero_weights.size());
        for (auto& x : x0) {
            long v = static_cast<long>(rng() % 10000) + 1;
            x = (rng() & 1) ? v : -v;
        }
        bool ok = true;
        for (auto& B : tangent_blocks(tm, x0))
            if (is_zero(det_bareiss(B))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

MPoly jacobian_J(const TangentMap& tm) {
    size_t nv = tm.zero_weights.size();
    MPoly J = MPoly::constant(nv, 1);
    for (auto& B : symbolic_blocks(tm)) {
        J = J * det(B);
        if (J.is_zero()) break;
    }
    return J;
}

bool is_dominant_symbolic(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    WeightIndex wi(spec);
    auto tm = tangent_map(wi, tau, w);
    if (!tm.square_levels()) return false;
    return !jacobian_J(tm).is_zero();
}

DominanceResult decide_dominance(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                                 SymbolicPolicy policy) {
    DominanceResult res;
    if (policy != SymbolicPolicy::Always) res.dominant = is_dominant_probabilistic(spec, tau, w, seed);
    if (policy == SymbolicPolicy::Always || (policy == SymbolicPolicy::OnReject && !res.dominant)) {
        WeightIndex wi(spec);
        auto tm = tangent_map(wi, tau, w);
        res.symbolic_used = true;
        if (tm.square_levels()) {
            MPoly J = jacobian_J(tm);
            res.dominant = !J.is_zero();
            if (res.dominant) res.J = std::move(J);
        }
    }
    return res;
}

}  // namespace mcone

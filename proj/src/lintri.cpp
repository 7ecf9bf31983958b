#include "mcone/lintri.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mcone {

LevelGraph level_graph(const WeightIndex& wi, const Vec& tau, const std::vector<Root>& roots) {
    const auto& spec = wi.spec();
    LevelGraph g;
    int n = wi.size();
    g.vertex.resize(n);
    std::iota(g.vertex.begin(), g.vertex.end(), 0);
    std::vector<long> lev(n);
    for (int i = 0; i < n; ++i) lev[i] = pairing(tau, wi.weights()[i].coords);
    std::stable_sort(g.vertex.begin(), g.vertex.end(), [&](int a, int b) { return lev[a] < lev[b]; });
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) {
        pos[g.vertex[p]] = p;
        g.level.push_back(lev[g.vertex[p]]);
    }
    g.G.assign(n, std::vector<Int>(n, Int(0)));
    g.label.assign(n, std::vector<int>(n, -1));
    for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
        Vec delta = root_coords(spec, roots[r]);
        for (int a = 0; a < n; ++a) {
            int b = wi.shift(g.vertex[a], delta);
            if (b < 0) continue;
            g.G[a][pos[b]] = 1;
            g.label[a][pos[b]] = r;
        }
    }
    // (I - G)^-1 by back substitution; G is strictly upper triangular.
    Mat<Int> inv(n, std::vector<Int>(n, Int(0)));
    for (int c = 0; c < n; ++c) {
        inv[c][c] = 1;
        for (int r = c - 1; r >= 0; --r) {
            Int s = 0;
            for (int k = r + 1; k <= c; ++k)
                if (!is_zero(g.G[r][k])) s += g.G[r][k] * inv[k][c];
            inv[r][c] = s;
        }
    }
    g.M = inv;
    for (int i = 0; i < n; ++i) {
        g.M[i][i] -= 1;
        for (int j = 0; j < n; ++j) g.M[i][j] -= g.G[i][j];
    }
    return g;
}

std::vector<int> lin_eq(const LevelGraph& g, const std::vector<char>& open) {
    std::vector<int> out;
    int n = static_cast<int>(g.vertex.size());
    for (int b = 0; b < n; ++b) {
        if (g.level[b] <= 0 || !open[b]) continue;
        bool linear = true;
        for (int a = 0; a < n && linear; ++a)
            if (g.level[a] <= 0 && !is_zero(g.M[a][b])) linear = false;
        if (linear) out.push_back(b);
    }
    return out;
}

LinTriVerdict lin_tri_verdict(const RepSpec& spec, const Vec& tau, const BlockPerm& w, LinTriTrace* trace) {
    WeightIndex wi(spec);
    std::vector<Root> roots = inversion_set(w);
    std::vector<char> open;
    int rounds = 0;
    auto finish = [&](LinTriVerdict v) {
        if (trace) {
            trace->rounds = rounds;
            trace->remaining = roots;
        }
        return v;
    };
    while (!roots.empty()) {
        auto g = level_graph(wi, tau, roots);
        if (open.empty()) open.assign(g.vertex.size(), 1);
        ++rounds;
        auto eqs = lin_eq(g, open);
        if (eqs.empty()) return finish(LinTriVerdict::Undecided);
        std::set<int> used;
        for (int b : eqs)
            for (size_t a = 0; a < g.vertex.size(); ++a)
                if (g.level[a] <= 0 && g.label[a][b] >= 0) used.insert(g.label[a][b]);
        if (used.size() != eqs.size()) return finish(LinTriVerdict::Undecided);
        for (int b : eqs) open[b] = 0;
        std::vector<Root> rest;
        for (int r = 0; r < static_cast<int>(roots.size()); ++r)
            if (!used.count(r)) rest.push_back(roots[r]);
        roots = std::move(rest);
    }
    return finish(LinTriVerdict::Birational);
}

}  // namespace mcone

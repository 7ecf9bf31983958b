// Step 4: dominance of pi_(tau,w) : (w^-1 U^- w cap U) x V^{tau<=0} -> V
// through the level blocks of its differential at points of V^tau.
#pragma once

#include "mcone/core.hpp"
#include "mcone/lie_action.hpp"
#include "mcone/linalg.hpp"
#include "mcone/mpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mcone {

// Coefficient of e_row in E_root . (x_source e_source).
struct TangentEntry {
    int row = 0;
    int col = 0;
    long coef = 0;
    int source = 0;
};

// Differential of pi at a point of V^{tau<=0}, split by tau-levels. Columns
// are the roots of Phi(w), rows the weights of V^{tau>0} (entries `a`) or
// of V^tau (entries `b`). The V^{tau<=0} directions map identically.
struct TangentMap {
    std::vector<Root> roots;
    std::vector<long> col_level;
    std::vector<int> pos_weights;  // by increasing level
    std::vector<long> row_level;
    std::vector<int> zero_weights;
    std::vector<int> neg_weights;
    std::vector<int> var_of;  // weight -> position in zero_weights or -1
    std::vector<TangentEntry> a, b;
    // Contiguous ranges of rows and columns of each positive level.
    struct Level {
        long level;
        int row_begin, row_end, col_begin, col_end;
    };
    std::vector<Level> levels;
    bool square_levels() const;
};

TangentMap tangent_map(const WeightIndex& wi, const Vec& tau, const BlockPerm& w);

// Per-level square blocks at an integer point x0 of V^tau (indexed like
// zero_weights).
std::vector<Mat<Int>> tangent_blocks(const TangentMap& tm, const std::vector<Int>& x0);
// Same blocks with the V^tau coordinates as polynomial variables.
std::vector<std::vector<std::vector<MPoly>>> symbolic_blocks(const TangentMap& tm);
inline Int scaled(long c, const Int& x) { return c * x; }
inline Rat scaled(long c, const Rat& x) { return Rat(c) * x; }
inline UPoly scaled(long c, const UPoly& x) { return UPoly(Rat(c)) * x; }
inline NFElem scaled(long c, const NFElem& x) { return NFElem(x.field(), Rat(c)) * x; }

// Full positive-row matrix at a point of V^{tau<=0} (values for every weight).
template <class F>
Mat<F> positive_matrix(const TangentMap& tm, const std::vector<F>& x, const F& zero) {
    Mat<F> m(tm.pos_weights.size(), std::vector<F>(tm.roots.size(), zero));
    for (auto& e : tm.a) m[e.row][e.col] = m[e.row][e.col] + scaled(e.coef, x[e.source]);
    return m;
}
// Rows of V^tau (zero_weights order).
template <class F>
Mat<F> zero_level_matrix(const TangentMap& tm, const std::vector<F>& x, const F& zero) {
    Mat<F> m(tm.zero_weights.size(), std::vector<F>(tm.roots.size(), zero));
    for (auto& e : tm.b) m[e.row][e.col] = m[e.row][e.col] + scaled(e.coef, x[e.source]);
    return m;
}

bool is_dominant_probabilistic(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                               int retries = 3);
bool is_dominant_symbolic(const RepSpec& spec, const Vec& tau, const BlockPerm& w);
// Product of the symbolic level determinants over the V^tau variables.
MPoly jacobian_J(const TangentMap& tm);

enum class SymbolicPolicy { Never, OnReject, Always };

struct DominanceResult {
    bool dominant = false;
    bool symbolic_used = false;
    std::optional<MPoly> J;
};

DominanceResult decide_dominance(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                                 SymbolicPolicy policy = SymbolicPolicy::Never);

}  // namespace mcone

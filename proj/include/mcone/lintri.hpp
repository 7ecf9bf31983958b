// Linear triangular pairs: the fiber equations solve by repeated linear
// elimination, detected on the graph of weights joined by roots of Phi(w).
#pragma once

#include "mcone/core.hpp"
#include "mcone/lie_action.hpp"
#include "mcone/linalg.hpp"

#include <vector>

namespace mcone {

// Vertices are all weights sorted by non-decreasing level; edge a -> b when
// chi_b - chi_a is one of `roots`. M = (I-G)^-1 - I - G counts the paths of
// length at least two.
struct LevelGraph {
    std::vector<int> vertex;  // weight index of each vertex
    std::vector<long> level;
    Mat<Int> G, M;
    // label[a][b]: root index of the edge a -> b or -1.
    std::vector<std::vector<int>> label;
};

LevelGraph level_graph(const WeightIndex& wi, const Vec& tau, const std::vector<Root>& roots);

// Positive-level vertices among `open` reached from no vertex of level <= 0
// by a path of length >= 2.
std::vector<int> lin_eq(const LevelGraph& g, const std::vector<char>& open);

enum class LinTriVerdict { Birational, Undecided };

struct LinTriTrace {
    int rounds = 0;
    std::vector<Root> remaining;
};

LinTriVerdict lin_tri_verdict(const RepSpec& spec, const Vec& tau, const BlockPerm& w, LinTriTrace* trace = nullptr);

}  // namespace mcone

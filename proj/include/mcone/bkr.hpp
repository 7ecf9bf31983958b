// Necessary condition for birationality: the multiplicity in S(V^tau) of the
// irreducible G^tau-module carried by the Jacobian must be one.
#pragma once

#include "mcone/core.hpp"
#include "mcone/symmetric.hpp"

#include <optional>
#include <vector>

namespace mcone {

// chi_det = sum of the weights of positive level - sum of Phi(w).
Vec chi_det(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// Levels of tau inside each block: G^tau is the product of GL(V_k^{tau[i,k]}).
struct LeviBlocks {
    std::vector<std::vector<long>> value;     // value[k][i], decreasing in i
    std::vector<std::vector<int>> mult;       // dimension of each level space
    std::vector<std::vector<int>> first;      // first coordinate of each level
};

LeviBlocks levi_blocks(const RepSpec& spec, const Vec& tau);

// Per block the permutation of each level space with the same relative order
// as w, so that w^-1 B^- w and wbar^-1 B^- wbar meet G^tau in the same group.
BlockPerm wbar(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// nu[k][i]: the highest weight on the level space (k,i); nullopt when some
// entry is negative (no polynomial module).
using LeviWeight = std::vector<std::vector<Partition>>;
std::optional<LeviWeight> levi_weight(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// Tuples of levels (i_1..i_s) with tau values summing to zero (Kronecker), or
// count vectors I over the levels with sum r and zero tau pairing.
std::vector<std::vector<int>> pset(const RepSpec& spec, const LeviBlocks& lb);

struct BkrResult {
    Int multiplicity = 0;
    bool skipped = false;  // plethysm sizes beyond the supported range
};

// Multiplicity of the module nu in S(V^tau) by the expansion over Kronecker
// and Littlewood-Richardson coefficients (plethysms for fermions/bosons).
BkrResult levi_multiplicity(const RepSpec& spec, const Vec& tau, const BlockPerm& w);
BkrResult levi_multiplicity(const RepSpec& spec, const Vec& tau, const LeviWeight& nu);

// Same multiplicity from the Weyl character formula: alternating sum of the
// vector partition function of the weights of V^tau.
Int levi_multiplicity_weyl(const RepSpec& spec, const Vec& tau, const BlockPerm& w);
Int levi_multiplicity_weyl(const RepSpec& spec, const Vec& tau, const LeviWeight& nu);

// Pair kept by the filter (multiplicity exactly one, or skipped).
bool bkr_passes(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

}  // namespace mcone

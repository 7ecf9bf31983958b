// Step 3: elements w of W^{P(tau)} whose inversion set has exactly as many
// roots at each positive tau-level as V has weights there.
#pragma once

#include "mcone/core.hpp"

#include <map>
#include <vector>

namespace mcone {

// level l > 0 -> number of weights chi with <chi,tau> = l.
std::map<long, long> required_level_counts(const RepSpec& spec, const Vec& tau);

// Per-level histogram of the inversion set of w against tau.
std::map<long, long> inversion_level_counts(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// Minimal coset representative: no inversion between equal tau entries.
bool in_WP(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// Convexity, coconvexity, closure under the negative Levi roots and
// positivity against tau.
bool is_admissible_inversion_set(const RepSpec& spec, const Vec& tau, const std::vector<Root>& phi);

// Depth-first search over the image slots of each factor with the shared
// level budget; sorted output.
std::vector<BlockPerm> enumerate_weyl(const RepSpec& spec, const Vec& tau);
// Same set by filtering every element of the Weyl group.
std::vector<BlockPerm> brute_force_weyl(const RepSpec& spec, const Vec& tau);

struct CandidatePair {
    Vec tau;
    BlockPerm w;
    Vec ineq;
};

// All pairs for the given tau list, deduplicated modulo permutations of
// equal blocks (through the canonical form of w.tau) when symmetry is on.
std::vector<CandidatePair> step3(const RepSpec& spec, const std::vector<Vec>& taus, bool symmetry);

}  // namespace mcone

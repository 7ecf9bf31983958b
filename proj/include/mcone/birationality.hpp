// Step 5: birationality of a dominant pi_(tau,w). Every non-simple boundary
// divisor D_beta and the affine ramification divisor R_0 must be contracted.
#pragma once

#include "mcone/core.hpp"
#include "mcone/dominance.hpp"
#include "mcone/mpoly.hpp"
#include "mcone/upoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mcone {

struct BoundaryDivisor {
    Root beta;
    BlockPerm v;  // s_beta w
    bool contracted = false;
};

// Non-simple beta with l(s_beta w) = l(w) - 1 and s_beta w in W^P(tau).
std::vector<BoundaryDivisor> boundary_betas(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// True when the differential of pi_v, v = s_beta w, is rank deficient at
// `samples` random points of V^{tau<=0}; a full-rank sample means pi_v has
// finite general fibers and D_beta dominates a divisor.
bool boundary_contracted(const RepSpec& spec, const Vec& tau, const BlockPerm& w, const Root& beta, uint64_t seed,
                         int samples = 3);

struct DegenerateLine : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorData {
    UPoly delta;
    int corank = 0;
    bool passes = true;
};

struct RamificationInstance {
    MPoly J, Jbar;
    std::vector<Int> a, b;  // line in V^{tau<=0}, indexed by weight
    UPoly J_line;           // J o phi
    std::vector<FactorData> factors;
    bool contracted = false;
};

// The full test on one random line; throws DegenerateLine when the line
// does not meet the ramification locus generically.
RamificationInstance ram0_on_line(const TangentMap& tm, const MPoly& J, uint64_t seed);

// Resamples the line up to `retries` times on DegenerateLine.
bool ram0_contracted(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                     const std::optional<MPoly>& J = std::nullopt, int retries = 5);

struct BirationalityResult {
    bool birational = false;
    bool boundary_rejected = false;
    std::vector<BoundaryDivisor> boundary;
};

BirationalityResult decide_birationality(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                                         const std::optional<MPoly>& J = std::nullopt);
bool is_birational(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed);

}  // namespace mcone

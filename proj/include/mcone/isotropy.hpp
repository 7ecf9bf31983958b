// Principal isotropy dimension of a compact Lie algebra acting on a real
// representation, by repeated slicing at random points.
#pragma once

#include "mcone/lie_action.hpp"
#include "mcone/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mcone {

// Basis of the acting Lie algebra as real matrices on the current space.
struct LieActionContext {
    std::vector<Mat<Rat>> gens;
    size_t dim = 0;
};

// Single run of the slicing loop with the given seed.
int pid(LieActionContext ctx, uint64_t seed, int max_resample = 20);
struct SeedDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs three seeds; throws SeedDisagreement if they cannot be made to agree.
int pid_checked(const LieActionContext& ctx, uint64_t seed);

// Real form of u(d_1) + ... + u(d_s) restricted to the blocks of equal tau
// (all of u(d_k) when tau is empty), acting on the span of the given weights
// viewed as a real vector space of twice the complex dimension.
LieActionContext compact_context(const WeightIndex& wi, const std::vector<int>& support, const Vec& tau);

int pid_full(const RepSpec& spec, uint64_t seed);
int pid_fixed(const RepSpec& spec, const Vec& tau, uint64_t seed);

// General isotropy of Lie(K) on V trivial, modulo the central kernel.
bool check_C0(const RepSpec& spec, uint64_t seed);
// General isotropy of Lie(K^tau) on V^tau of dimension one (modulo center).
bool check_C(const RepSpec& spec, const Vec& tau, uint64_t seed);
// Same with the general isotropy dimension on V given: one more than base.
// Equals check_C when base is the central rank.
bool check_C_relative(const RepSpec& spec, const Vec& tau, int base, uint64_t seed);

}  // namespace mcone

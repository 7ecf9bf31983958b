// Step 1: indivisible dominant tau satisfying (B'') and (C') by a pruned
// recursive search for weight hyperplanes, face class by face class.
#pragma once

#include "mcone/core.hpp"

#include <cstdint>
#include <vector>

namespace mcone {

// Reduced weights of one face class with the order and bounds used by the
// recursive search.
struct FaceProblem {
    std::vector<Vec> coords;
    std::vector<long> mult;
    size_t dim = 0;
    size_t target_codim = 1;
    long u = 0;
    // greater[i]: weights strictly above weight i in the face order.
    std::vector<std::vector<int>> greater, lesser;
    // Linear extension of the face order, smallest first.
    std::vector<int> order;
    // Extra rows killing the central directions (Kronecker normalization).
    std::vector<Vec> normalization;
};

struct SearchStats {
    long calls = 0;
    long candidates = 0;
};

// Every S0 whose span has the target codimension, reachable under the
// order propagation and (if prune) the bound u on the positive side.
std::vector<std::vector<int>> recurse_candidates(const FaceProblem& face, bool prune, SearchStats* stats = nullptr);

// Primitive generator of the orthogonal of S0 within the normalized
// cocharacters; empty if that orthogonal is not a line.
Vec orthogonal_tau(const FaceProblem& face, const std::vector<int>& s0);

FaceProblem kronecker_face(const std::vector<int>& ebar, long u);
// Face of a fermion/boson representation where tau repeats its values
// according to the composition mu.
FaceProblem symmetric_power_face(Kind kind, int r, const std::vector<int>& mu, long u);

long dimU_bound(const std::vector<int>& d, std::vector<int> ebar);
long dim_U(const RepSpec& spec, const Vec& tau);
long positive_weight_count(const RepSpec& spec, const Vec& tau);
bool check_Bpp(const RepSpec& spec, const Vec& tau);
bool check_Cprime(const RepSpec& spec, const Vec& tau);

struct Step1Stats {
    long dense_calls = 0;
    long dense_hyperplanes = 0;
    long dense_distinct_hyperplanes = 0;
    long dense_regular = 0;
    long dense_regular_mod_sym = 0;
    // same before the bound on the number of positive weights
    long dense_regular_unbounded = 0;
    long dense_regular_unbounded_mod_sym = 0;
    long tau_prime = 0;
    long extensions = 0;
    long bpp_pass = 0;
    long bpp_mod_sym = 0;
    long total_calls = 0;
};

struct Step1Options {
    bool prune = true;
    bool symmetry = true;
};

// Normalized indivisible dominant tau != 0 satisfying (B'') and (C'),
// modulo permutations of equal blocks when symmetry is on. Sorted.
std::vector<Vec> enumerate_tau_plus(const RepSpec& spec, const Step1Options& opt = {}, Step1Stats* stats = nullptr);

// Exhaustive oracle over all weight subsets of the size needed to span.
std::vector<Vec> brute_force_tau_plus(const RepSpec& spec, bool symmetry);

// Canonical key of tau modulo permutations of equal-size blocks.
Vec tau_key(const RepSpec& spec, const Vec& tau, bool symmetry);

}  // namespace mcone

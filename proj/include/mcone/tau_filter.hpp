// Step 2: per-level comparison of V^{tau>0} with Lie(U(tau)), then the full
// isotropy condition (C).
#pragma once

#include "mcone/core.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mcone {

// level -> (number of weights, number of positive roots) for levels > 0.
struct LevelCounts {
    std::map<long, long> weights;
    std::map<long, long> roots;
};

LevelCounts level_counts(const RepSpec& spec, const Vec& tau);

bool check_Bprime(const RepSpec& spec, const Vec& tau);

struct Step2Stats {
    long input = 0;
    long bprime = 0;
    long output = 0;
};

// Candidates passing (B') and (C); order preserved. A nonnegative base_pid
// replaces the central rank in (C) (cones with empty interior).
std::vector<Vec> step2(const RepSpec& spec, const std::vector<Vec>& candidates, uint64_t seed,
                       Step2Stats* stats = nullptr, int base_pid = -1);

}  // namespace mcone

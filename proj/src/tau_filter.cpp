#include "mcone/tau_filter.hpp"

#include "mcone/isotropy.hpp"

namespace mcone {

LevelCounts level_counts(const RepSpec& spec, const Vec& tau) {
    LevelCounts c;
    for (const auto& w : weights(spec)) {
        long l = pairing(tau, w.coords);
        if (l > 0) ++c.weights[l];
    }
    for (const auto& b : positive_roots(spec)) {
        long l = root_level(spec, tau, b);
        if (l > 0) ++c.roots[l];
    }
    return c;
}

bool check_Bprime(const RepSpec& spec, const Vec& tau) {
    auto c = level_counts(spec, tau);
    for (const auto& [l, n] : c.weights) {
        auto it = c.roots.find(l);
        if (it == c.roots.end() || it->second < n) return false;
    }
    return true;
}

std::vector<Vec> step2(const RepSpec& spec, const std::vector<Vec>& candidates, uint64_t seed, Step2Stats* stats,
                       int base_pid) {
    if (base_pid < 0) base_pid = spec.central_rank();
    Step2Stats st;
    std::vector<Vec> out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const Vec& t = candidates[i];
        ++st.input;
        if (!check_Bprime(spec, t)) continue;
        ++st.bprime;
        if (!check_C_relative(spec, t, base_pid, seed + 7919 * i)) continue;
        out.push_back(t);
    }
    st.output = static_cast<long>(out.size());
    if (stats) *stats = st;
    return out;
}

}  // namespace mcone

#include "mcone/weyl_search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mcone {

namespace {

struct FactorWord {
    std::map<long, long> hist;
    Perm w;
};

// Groups of equal tau inside block k: (value, first position, size).
struct Group {
    long value;
    int start, size;
};

std::vector<Group> groups_of(const RepSpec& spec, const Vec& tau, int k) {
    std::vector<Group> g;
    int o = spec.offset(k);
    for (int i = 0; i < spec.dims[k]; ++i) {
        if (i > 0 && tau[o + i] == tau[o + i - 1]) {
            ++g.back().size;
        } else {
            g.push_back({tau[o + i], i, 1});
        }
    }
    return g;
}

std::vector<FactorWord> factor_words(const std::vector<Group>& g, const std::map<long, long>& budget) {
    std::vector<FactorWord> out;
    int p = static_cast<int>(g.size());
    int d = 0;
    for (auto& x : g) d += x.size;
    std::vector<int> placed(p, 0);
    Perm w(d, -1);
    std::map<long, long> hist;
    std::function<void(int)> rec = [&](int slot) {
        if (slot == d) {
            out.push_back({hist, w});
            return;
        }
        for (int a = 0; a < p; ++a) {
            if (placed[a] == g[a].size) continue;
            // groups b > a already placed now sit left of this element
            bool ok = true;
            std::vector<std::pair<long, long>> added;
            for (int b = a + 1; b < p && ok; ++b) {
                if (!placed[b]) continue;
                long l = g[a].value - g[b].value;
                auto it = budget.find(l);
                long have = hist.count(l) ? hist[l] : 0;
                if (it == budget.end() || have + placed[b] > it->second) ok = false;
                added.push_back({l, placed[b]});
            }
            if (!ok) continue;
            for (auto [l, c] : added) hist[l] += c;
            w[g[a].start + placed[a]] = slot;
            ++placed[a];
            rec(slot + 1);
            --placed[a];
            for (auto [l, c] : added)
                if ((hist[l] -= c) == 0) hist.erase(l);
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::map<long, long> required_level_counts(const RepSpec& spec, const Vec& tau) {
    std::map<long, long> out;
    for (const auto& w : weights(spec)) {
        long l = pairing(tau, w.coords);
        if (l > 0) ++out[l];
    }
    return out;
}

std::map<long, long> inversion_level_counts(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    std::map<long, long> out;
    for (const auto& b : inversion_set(w)) ++out[root_level(spec, tau, b)];
    return out;
}

bool in_WP(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    for (const auto& b : inversion_set(w))
        if (root_level(spec, tau, b) == 0) return false;
    return true;
}

bool is_admissible_inversion_set(const RepSpec& spec, const Vec& tau, const std::vector<Root>& phi) {
    std::set<Root> in(phi.begin(), phi.end());
    for (const auto& b : phi)
        if (b.i >= b.j || root_level(spec, tau, b) <= 0) return false;
    for (int k = 0; k < spec.s(); ++k) {
        int d = spec.dims[k], o = spec.offset(k);
        auto has = [&](int i, int j) { return in.count(Root{k, i, j}) > 0; };
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int m = j + 1; m < d; ++m) {
                    bool a = has(i, j), b = has(j, m), c = has(i, m);
                    if (a && b && !c) return false;
                    if (!a && !b && c) return false;
                }
        // alpha in phi, beta a negative root of the Levi: alpha + beta in phi
        for (const auto& r : phi) {
            if (r.k != k) continue;
            for (int x = 0; x < d; ++x) {
                if (x == r.i || x == r.j) continue;
                // beta = e_x - e_i with x > i, tau equal: sum e_x - e_j when x < j
                if (x > r.i && tau[o + x] == tau[o + r.i] && x < r.j && !has(x, r.j)) return false;
                // beta = e_j - e_x with x < j, tau equal: sum e_i - e_x when i < x
                if (x < r.j && tau[o + x] == tau[o + r.j] && r.i < x && !has(r.i, x)) return false;
            }
        }
    }
    return true;
}

std::vector<BlockPerm> enumerate_weyl(const RepSpec& spec, const Vec& tau) {
    auto req = required_level_counts(spec, tau);
    int s = spec.s();
    std::vector<std::vector<FactorWord>> words(s);
    for (int k = 0; k < s; ++k) words[k] = factor_words(groups_of(spec, tau, k), req);
    std::vector<BlockPerm> out;
    BlockPerm cur(s);
    std::map<long, long> acc;
    std::function<void(int)> rec = [&](int k) {
        if (k == s) {
            if (acc == req) out.push_back(cur);
            return;
        }
        for (const auto& fw : words[k]) {
            bool ok = true;
            for (auto [l, c] : fw.hist)
                if (acc[l] + c > req.at(l)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (auto [l, c] : fw.hist) acc[l] += c;
            cur[k] = fw.w;
            rec(k + 1);
            for (auto [l, c] : fw.hist) acc[l] -= c;
        }
    };
    // levels never reached in acc must still compare equal to req
    for (auto& [l, c] : req) acc[l] = 0;
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BlockPerm> brute_force_weyl(const RepSpec& spec, const Vec& tau) {
    auto req = required_level_counts(spec, tau);
    std::vector<BlockPerm> out;
    BlockPerm cur = identity_perm(spec);
    std::function<void(int)> rec = [&](int k) {
        if (k == spec.s()) {
            if (in_WP(spec, tau, cur) && inversion_level_counts(spec, tau, cur) == req) out.push_back(cur);
            return;
        }
        std::sort(cur[k].begin(), cur[k].end());
        do rec(k + 1);
        while (std::next_permutation(cur[k].begin(), cur[k].end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidatePair> step3(const RepSpec& spec, const std::vector<Vec>& taus, bool symmetry) {
    std::vector<CandidatePair> out;
    std::set<Vec> seen;
    for (const auto& t : taus)
        for (auto& w : enumerate_weyl(spec, t)) {
            Vec ineq = apply_w_to_tau(spec, w, t);
            if (!seen.insert(canonical_inequality(spec, ineq, symmetry)).second) continue;
            out.push_back({t, std::move(w), std::move(ineq)});
        }
    return out;
}

}  // namespace mcone

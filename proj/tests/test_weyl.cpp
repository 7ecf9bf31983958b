#include <doctest.h>

#include "mcone/weyl_search.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace mcone;

static Vec random_dominant(const RepSpec& spec, std::mt19937_64& rng, int range) {
    Vec t;
    for (int d : spec.dims) {
        Vec b(d);
        for (auto& x : b) x = static_cast<long>(rng() % (2 * range + 1)) - range;
        std::sort(b.begin(), b.end(), std::greater<long>());
        t.insert(t.end(), b.begin(), b.end());
    }
    return t;
}

TEST_CASE("single GL2 with regular tau") {
    auto spec = RepSpec::kronecker({2});
    Vec tau = {1, 0};
    auto ws = enumerate_weyl(spec, tau);
    REQUIRE(ws.size() == 1);
    CHECK(inversion_set(ws[0]) == std::vector<Root>{{0, 0, 1}});
}

TEST_CASE("coconvexity rejects the highest root alone") {
    auto spec = RepSpec::kronecker({3});
    Vec tau = {2, 1, 0};
    CHECK_FALSE(is_admissible_inversion_set(spec, tau, {{0, 0, 2}}));
    CHECK(is_admissible_inversion_set(spec, tau, {{0, 0, 1}, {0, 0, 2}}));
    CHECK_FALSE(is_admissible_inversion_set(spec, tau, {{0, 0, 1}, {0, 1, 2}}));
    // Levi closure: tau = (1,1,0) and the root e1 - e3 alone is not minimal
    CHECK_FALSE(is_admissible_inversion_set(spec, Vec{1, 1, 0}, {{0, 0, 2}}));
    CHECK(is_admissible_inversion_set(spec, Vec{1, 1, 0}, {{0, 1, 2}}));
}

TEST_CASE("admissible sets are exactly the inversion sets of W^P") {
    for (auto dims : std::vector<std::vector<int>>{{3}, {4}, {3, 2}}) {
        auto spec = RepSpec::kronecker(dims);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 12; ++trial) {
            Vec tau = random_dominant(spec, rng, 2);
            auto roots = positive_roots(spec);
            int admissible = 0, wp = 0;
            for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
                std::vector<Root> phi;
                for (size_t i = 0; i < roots.size(); ++i)
                    if (mask >> i & 1) phi.push_back(roots[i]);
                if (!is_admissible_inversion_set(spec, tau, phi)) continue;
                ++admissible;
                auto w = inversion_set_to_permutation(spec, phi);
                CHECK(inversion_set(w) == phi);
                CHECK(in_WP(spec, tau, w));
            }
            BlockPerm cur = identity_perm(spec);
            std::function<void(int)> rec = [&](int k) {
                if (k == spec.s()) {
                    if (in_WP(spec, tau, cur)) ++wp;
                    return;
                }
                std::sort(cur[k].begin(), cur[k].end());
                do rec(k + 1);
                while (std::next_permutation(cur[k].begin(), cur[k].end()));
            };
            rec(0);
            CHECK(admissible == wp);
        }
    }
}

TEST_CASE("tree search equals brute force over the Weyl group") {
    for (const char* name : {"kron 3", "kron 4", "kron 3 2 2", "kron 3 3", "fermion 5 2", "boson 3 3", "kron 2 2 2"}) {
        CAPTURE(name);
        auto spec = RepSpec::parse(name);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 25; ++trial) {
            Vec tau = random_dominant(spec, rng, 3);
            auto a = enumerate_weyl(spec, tau);
            CHECK(a == brute_force_weyl(spec, tau));
            auto req = required_level_counts(spec, tau);
            for (const auto& w : a) {
                CHECK(inversion_level_counts(spec, tau, w) == req);
                CHECK(is_admissible_inversion_set(spec, tau, inversion_set(w)));
                CHECK(inversion_set_to_permutation(spec, inversion_set(w)) == w);
            }
        }
    }
}

TEST_CASE("level requirements of the four-factor example") {
    auto spec = RepSpec::kronecker({3, 3, 3, 1});
    Vec tau = {2, 1, 0, 2, 1, 0, 3, 2, 0, -4};
    auto req = required_level_counts(spec, tau);
    CHECK(req[3] == 1);
    CHECK(req[1] == 5);
    long total = 0;
    for (auto [l, c] : req) total += c;
    long pos = 0;
    for (const auto& w : weights(spec))
        if (pairing(tau, w.coords) > 0) ++pos;
    CHECK(total == pos);
    BlockPerm w0 = {{2, 1, 0}, {2, 1, 0}, {2, 1, 0}, {0}};
    auto ws = enumerate_weyl(spec, tau);
    CHECK(std::find(ws.begin(), ws.end(), w0) != ws.end());
}

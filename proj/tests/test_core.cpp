#include <doctest.h>

#include "mcone/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace mcone;

TEST_CASE("weights of the three representations") {
    auto w = weights(RepSpec::kronecker({2, 2}));
    REQUIRE(w.size() == 4);
    CHECK(w[0].index == std::vector<int>{0, 0});
    CHECK(w[1].index == std::vector<int>{0, 1});
    CHECK(w[3].index == std::vector<int>{1, 1});
    CHECK(w[1].coords == Vec{1, 0, 0, 1});
    CHECK(weights(RepSpec::fermion(4, 2)).size() == 6);
    CHECK(weights(RepSpec::kronecker({4, 4, 4})).size() == 64);
    CHECK(weights(RepSpec::boson(3, 2)).size() == 6);
    CHECK(weights(RepSpec::boson(3, 2))[0].coords == Vec{2, 0, 0});
    CHECK(RepSpec::fermion(6, 3).dim_v() == 20);
}

TEST_CASE("spec validation") {
    CHECK_THROWS(RepSpec::kronecker({2, 3}));
    CHECK_THROWS(RepSpec::fermion(4, 3));
    CHECK_THROWS(RepSpec::boson(3, 1));
    CHECK(RepSpec::parse("kron 4 4 4") == RepSpec::kronecker({4, 4, 4}));
    CHECK(RepSpec::parse("fermion 6 3").r == 3);
}

TEST_CASE("pairing on the four-factor level table") {
    auto spec = RepSpec::kronecker({3, 3, 3, 1});
    Vec tau = {2, 1, 0, 2, 1, 0, 3, 2, 0, -4};
    auto ws = weights(spec);
    auto find = [&](std::vector<int> idx) {
        return *std::find_if(ws.begin(), ws.end(), [&](const Weight& w) { return w.index == idx; });
    };
    CHECK(pairing(tau, find({0, 0, 0, 0}).coords) == 3);
    CHECK(pairing(tau, find({2, 2, 2, 0}).coords) == -4);
    CHECK(pairing(Vec(10, 0), find({1, 2, 0, 0}).coords) == 0);
    CHECK_THROWS(pairing(Vec{1, 2}, Vec{1}));
}

TEST_CASE("normalization worked example") {
    auto spec = RepSpec::kronecker({5, 5, 5, 1});
    Vec tau = {3, 2, 2, -1, -1, 2, 2, -3, -3, -3, 3, -1, -1, -1, -2, 5};
    Vec want = {4, 3, 3, 0, 0, 5, 5, 0, 0, 0, 5, 1, 1, 1, 0, -1};
    CHECK(normalize(spec, tau) == want);
    CHECK(normalize(spec, want) == want);
    CHECK(is_normalized(spec, want));
    CHECK(is_indivisible(want));
}

TEST_CASE("normalizing a central element gives zero") {
    auto spec = RepSpec::kronecker({2, 1});
    CHECK(normalize(spec, Vec{3, 3, -3}) == Vec{0, 0, 0});
}

TEST_CASE("reduction to the face") {
    auto spec = RepSpec::kronecker({5, 5, 5, 1});
    Vec tau = {3, 2, 2, -1, -1, 2, 2, -3, -3, -3, 3, -1, -1, -1, -2, 5};
    auto f = reduce_to_face(spec, tau);
    CHECK(f.taubar == std::vector<Vec>{{3, 2, -1}, {2, -3}, {3, -1, -2}, {5}});
    CHECK(f.dbar == std::vector<int>{3, 2, 3, 1});
    CHECK(f.mult == std::vector<std::vector<int>>{{1, 2, 2}, {2, 3}, {1, 3, 1}, {1}});
    CHECK(extend_from_face(f) == tau);

    auto reg = reduce_to_face(RepSpec::kronecker({3}), Vec{2, 1, 0});
    CHECK(reg.dbar == std::vector<int>{3});
    CHECK(reg.mult[0] == std::vector<int>{1, 1, 1});
    CHECK(reduce_to_face(RepSpec::kronecker({2, 2}), Vec{0, 0, 0, 0}).dbar == std::vector<int>{1, 1});
    CHECK_THROWS(reduce_to_face(RepSpec::kronecker({2}), Vec{0, 1}));
}

TEST_CASE("face order on weights") {
    CHECK(weight_order(Kind::Kronecker, {1, 1}, {0, 0}) == Order::Less);
    CHECK(weight_order(Kind::Kronecker, {0, 0}, {1, 1}) == Order::Greater);
    CHECK(weight_order(Kind::Kronecker, {0, 1}, {1, 0}) == Order::Incomparable);
    CHECK(weight_order(Kind::Kronecker, {0, 1}, {0, 1}) == Order::Equal);
    // count vectors: (0,1,1) has indices {1,2}, (1,1,0) has {0,1}
    CHECK(weight_order(Kind::Fermion, {0, 1, 1}, {1, 1, 0}) == Order::Less);
    CHECK(weight_order(Kind::Fermion, {1, 0, 1, 0}, {0, 2, 0, 0}) == Order::Incomparable);
}

TEST_CASE("order is compatible with pairing on the face interior") {
    std::mt19937 rng(3);
    auto spec = RepSpec::kronecker({3, 3, 2});
    auto ws = weights(spec);
    for (int trial = 0; trial < 20; ++trial) {
        Vec tau;
        for (int d : spec.dims) {
            std::vector<long> b(d);
            for (auto& x : b) x = static_cast<long>(rng() % 100);
            std::sort(b.begin(), b.end(), std::greater<long>());
            for (int i = 0; i + 1 < d; ++i)
                if (b[i] == b[i + 1]) b[i] += 1000;
            std::sort(b.begin(), b.end(), std::greater<long>());
            tau.insert(tau.end(), b.begin(), b.end());
        }
        for (auto& a : ws)
            for (auto& b : ws)
                if (weight_order(Kind::Kronecker, a.index, b.index) == Order::Less)
                    CHECK(pairing(tau, a.coords) < pairing(tau, b.coords));
    }
}

TEST_CASE("inversion sets round-trip exhaustively") {
    for (int m = 1; m <= 5; ++m) {
        Perm w(m);
        std::iota(w.begin(), w.end(), 0);
        do {
            CHECK(permutation_from_inversions(m, inversions(w)) == w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    auto spec = RepSpec::kronecker({3, 2});
    CHECK(inversion_set_to_permutation(spec, {}) == identity_perm(spec));
    BlockPerm w0 = {{2, 1, 0}, {1, 0}};
    CHECK(inversion_set_to_permutation(spec, positive_roots(spec)) == w0);
    CHECK(inversion_set_to_permutation(RepSpec::kronecker({2}), {{0, 0, 1}}) == BlockPerm{{1, 0}});
    CHECK_THROWS(permutation_from_inversions(3, {{0, 2}}));
}

TEST_CASE("action of w on tau") {
    auto spec = RepSpec::kronecker({3, 2});
    Vec tau = {5, 3, 1, 2, 0};
    CHECK(apply_w_to_tau(spec, identity_perm(spec), tau) == tau);
    CHECK(apply_w_to_tau(spec, {{2, 1, 0}, {1, 0}}, tau) == Vec{1, 3, 5, 0, 2});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BlockPerm w = identity_perm(spec);
        for (auto& p : w) std::shuffle(p.begin(), p.end(), rng);
        Vec lambda(5);
        for (auto& x : lambda) x = static_cast<long>(rng() % 21) - 10;
        BlockPerm wi;
        for (auto& p : w) wi.push_back(inverse(p));
        CHECK(pairing(apply_w_to_tau(spec, w, tau), lambda) == pairing(tau, apply_perm(spec, wi, lambda)));
    }
}

TEST_CASE("canonical inequality modulo symmetry") {
    auto spec = RepSpec::kronecker({2, 2, 2});
    Vec a = {1, 0, 0, 1, 0, -1};
    Vec b = {0, 1, 1, 0, 0, -1};
    CHECK(canonical_inequality(spec, a, true) == canonical_inequality(spec, b, true));
    Vec shifted = {2, 1, 1, 2, -2, -3};
    CHECK(canonical_inequality(spec, a, false) == canonical_inequality(spec, shifted, false));
    CHECK(canonical_inequality(spec, a, false) != canonical_inequality(spec, b, false));
}

#include <doctest.h>

#include "mcone/semigroup.hpp"

#include <algorithm>

using namespace mcone;

TEST_CASE("Kronecker semigroup membership") {
    auto spec = RepSpec::kronecker({2, 2, 2});
    CHECK(semigroup_points(spec, 1) == std::vector<Vec>{{1, 0, 1, 0, 1, 0}});
    auto pts = semigroup_points(spec, 2);
    auto has = [&](const Vec& v) { return std::binary_search(pts.begin(), pts.end(), v); };
    CHECK(has({1, 1, 1, 1, 2, 0}));
    CHECK(has({2, 0, 1, 1, 1, 1}));
    CHECK_FALSE(has({2, 0, 2, 0, 1, 1}));
    CHECK(in_semigroup(spec, {2, 0, 1, 1, 1, 1}));
    CHECK_FALSE(in_semigroup(spec, {2, 0, 2, 0, 1, 1}));
    CHECK_FALSE(in_semigroup(spec, {2, 0, 1, 0, 1, 0}));
    CHECK_FALSE(in_semigroup(spec, {0, 1, 1, 0, 1, 0}));
    CHECK(semigroup_degree(spec, {3, 1, 2, 2, 4, 0}) == 4);
    CHECK(semigroup_degree(spec, {3, 1, 2, 2, 4, 1}) == -1);
    CHECK_THROWS_AS(semigroup_points(RepSpec::kronecker({5, 5, 5}), 2), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_points(spec, 11), std::invalid_argument);
}

TEST_CASE("symmetric and exterior powers") {
    // S^N(L^2 C^4): the columns of lambda have even length
    auto f = RepSpec::fermion(4, 2);
    for (const auto& p : semigroup_points(f, 4)) CHECK((p[0] == p[1] && p[2] == p[3]));
    CHECK(semigroup_points(f, 4).size() == 1 + 2 + 2 + 3);
    // S^N(S^2 C^3): even parts
    auto b = RepSpec::boson(3, 2);
    auto pts = semigroup_points(b, 4);
    for (const auto& p : pts)
        for (long x : p) CHECK(x % 2 == 0);
    CHECK(pts.size() == 1 + 2 + 3 + 4);
    CHECK(in_semigroup(b, {4, 2, 0}));
    CHECK_FALSE(in_semigroup(b, {3, 3, 0}));
}

TEST_CASE("random points are sums of occurring weights") {
    auto spec = RepSpec::kronecker({3, 3, 3});
    auto pts = random_semigroup_points(spec, 60, 3, 5);
    CHECK(pts.size() == 60);
    for (const auto& p : pts) {
        CHECK(semigroup_degree(spec, p) > 0);
        if (semigroup_degree(spec, p) <= 8) CHECK(in_semigroup(spec, p));
    }
    CHECK(random_semigroup_points(spec, 10, 3, 5) == random_semigroup_points(spec, 10, 3, 5));
}

TEST_CASE("hull of small cones") {
    auto q = hull_facets({{1, 0}, {0, 1}, {1, 1}, {3, 2}}, 2);
    CHECK(q.facets.size() == 2);
    CHECK(q.is_facet({-1, 0}));
    CHECK(q.is_facet({0, -2}));
    CHECK_THROWS_AS(hull_facets({{1, 1}, {2, 2}}, 2), std::invalid_argument);
    CHECK(hull_facets({{1, 1}, {2, 2}}).facets.size() == 1);
    // cone over a square with an interior ray, inside a hyperplane of R^4
    std::vector<Vec> sq = {{1, 1, 1, 3}, {-1, 1, 1, 1}, {1, -1, 1, 1}, {-1, -1, 1, -1}, {0, 0, 1, 1}};
    auto h = hull_facets(sq, 3);
    CHECK(h.facets.size() == 4);
    CHECK(h.is_facet({1, 0, -1, 0}));
    CHECK(h.is_facet({0, 0, -1, 1}) == false);
    for (const auto& f : h.facets) {
        Vec a = h.ambient_form(f);
        int tight = 0;
        for (const auto& p : sq) {
            long s = 0;
            for (size_t i = 0; i < p.size(); ++i) s += a[i] * p[i];
            CHECK(s <= 0);
            if (s == 0) ++tight;
        }
        CHECK(tight == 2);
    }
}

TEST_CASE("Kronecker cones at degree eight") {
    auto k2 = hull_facets(semigroup_points(RepSpec::kronecker({2, 2, 2}), 8), 4);
    CHECK(k2.facets.size() == 6);
    for (const auto& d : dominance_inequalities(RepSpec::kronecker({2, 2, 2}))) CHECK(k2.is_facet(d));
    // lambda^3_2 <= lambda^1_2 + lambda^2_2
    CHECK(k2.is_facet({1, 0, 1, 0, -2, -1}));
    auto k3 = hull_facets(semigroup_points(RepSpec::kronecker({3, 2, 2}), 8), 5);
    CHECK(k3.facets.size() == 12);
    // lambda^1_3 >= 0 modulo the central directions
    CHECK(k3.is_facet({1, 1, 0, 0, 0, -1, -1}));
    CHECK(k3.restrict({1, 1, 1, -1, -1, 0, 0}).empty());
}

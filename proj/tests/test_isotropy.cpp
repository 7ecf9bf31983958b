#include <doctest.h>

#include "mcone/isotropy.hpp"

#include <random>

using namespace mcone;

static LieActionContext torus(long weight) {
    // u(1) acting on C with the given weight, as a real 2x2 rotation generator
    LieActionContext c;
    c.dim = 2;
    c.gens.push_back({{Rat(0), Rat(-weight)}, {Rat(weight), Rat(0)}});
    return c;
}

// Stabilizer dimension at a random point by direct kernel computation.
static int stabilizer_at_random_point(const LieActionContext& ctx, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> v(ctx.dim);
    for (auto& x : v) x = Rat(static_cast<long>(rng() % 2001) - 1000);
    Mat<Rat> M(ctx.dim, std::vector<Rat>(ctx.gens.size(), Rat(0)));
    for (size_t t = 0; t < ctx.gens.size(); ++t)
        for (size_t i = 0; i < ctx.dim; ++i)
            for (size_t j = 0; j < ctx.dim; ++j) M[i][t] += ctx.gens[t][i][j] * v[j];
    return static_cast<int>(ctx.gens.size() - rank_field(M));
}

TEST_CASE("principal isotropy of a circle") {
    CHECK(pid(torus(1), 1) == 0);
    CHECK(pid(torus(0), 1) == 1);
    CHECK(pid_checked(torus(3), 5) == 0);
}

TEST_CASE("principal isotropy of the full group") {
    CHECK(pid_full(RepSpec::kronecker({2, 2, 2}), 1) == 2);
    CHECK(pid_full(RepSpec::kronecker({2, 2}), 1) == 2);
    CHECK(pid_full(RepSpec::kronecker({2}), 1) == 1);
    CHECK(pid_full(RepSpec::kronecker({3, 3, 3}), 1) == 2);
    CHECK(pid_full(RepSpec::boson(2, 2), 1) == 0);
    CHECK(pid_full(RepSpec::boson(3, 2), 1) == 0);
}

TEST_CASE("slicing agrees with the stabilizer of a random point when the orbit is open") {
    WeightIndex wi(RepSpec::kronecker({2, 2, 2}));
    std::vector<int> all(wi.size());
    for (int i = 0; i < wi.size(); ++i) all[i] = i;
    auto ctx = compact_context(wi, all, {});
    int direct = stabilizer_at_random_point(ctx, 9);
    CHECK(direct >= pid_checked(ctx, 2));
    WeightIndex wb(RepSpec::boson(2, 2));
    std::vector<int> allb = {0, 1, 2};
    auto cb = compact_context(wb, allb, {});
    CHECK(stabilizer_at_random_point(cb, 3) == pid(cb, 4));
}

TEST_CASE("conditions C0 and C") {
    CHECK(check_C0(RepSpec::kronecker({2, 2, 2}), 1));
    CHECK(check_C0(RepSpec::kronecker({3, 3, 3}), 1));
    CHECK(check_C0(RepSpec::boson(2, 2), 1));
    CHECK_FALSE(check_C0(RepSpec::kronecker({4, 2}), 1));
    // qubit facet lambda1_2 <= lambda2_2 + lambda3_2
    auto spec = RepSpec::kronecker({2, 2, 2});
    CHECK(check_C(spec, normalize(spec, Vec{1, 0, 1, 0, -1, -2}), 1));
    CHECK_FALSE(check_C(spec, Vec{1, 0, 0, 0, 0, 0}, 1));
}

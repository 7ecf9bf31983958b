#include <doctest.h>

#include "mcone/birationality.hpp"
#include "mcone/lintri.hpp"
#include "mcone/tau_filter.hpp"
#include "mcone/tau_search.hpp"
#include "mcone/weyl_search.hpp"

using namespace mcone;

namespace {

Mat<Int> mul(const Mat<Int>& a, const Mat<Int>& b) {
    size_t n = a.size();
    Mat<Int> c(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (!is_zero(a[i][k]))
                for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool nilpotent_zero(const Mat<Int>& m) {
    for (auto& r : m)
        for (auto& x : r)
            if (!is_zero(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("no weights of positive level and no roots") {
    auto spec = RepSpec::kronecker({2, 2});
    Vec tau = {0, 0, 0, -1};
    LinTriTrace tr;
    CHECK(lin_tri_verdict(spec, tau, identity_perm(spec), &tr) == LinTriVerdict::Birational);
    CHECK(tr.rounds == 0);
    CHECK(tr.remaining.empty());
}

TEST_CASE("a single linear equation") {
    // x_1 is moved to the positive weight by the only root
    auto spec = RepSpec::kronecker({2, 1});
    Vec tau = {1, 0, 0};
    CHECK(lin_tri_verdict(spec, tau, {{1, 0}, {0}}) == LinTriVerdict::Birational);
}

TEST_CASE("level graphs count paths of length at least two") {
    auto spec = RepSpec::kronecker({3, 3, 3});
    WeightIndex wi(spec);
    auto pairs = step3(spec, step2(spec, enumerate_tau_plus(spec), 1), true);
    for (auto& p : pairs) {
        auto g = level_graph(wi, p.tau, inversion_set(p.w));
        size_t n = g.vertex.size();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b <= a; ++b) CHECK(is_zero(g.G[a][b]));
        for (size_t a = 0; a + 1 < n; ++a) CHECK(g.level[a] <= g.level[a + 1]);
        Mat<Int> sum(n, std::vector<Int>(n, Int(0)));
        Mat<Int> pw = mul(g.G, g.G);
        while (!nilpotent_zero(pw)) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) sum[i][j] += pw[i][j];
            pw = mul(pw, g.G);
        }
        CHECK(g.M == sum);
        for (auto& r : g.M)
            for (auto& x : r) CHECK(sgn(x) >= 0);
    }
}

TEST_CASE("linear triangular pairs are birational on Kron(3,3,3)") {
    auto spec = RepSpec::kronecker({3, 3, 3});
    auto pairs = step3(spec, step2(spec, enumerate_tau_plus(spec), 1), true);
    int selected = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (!is_dominant_symbolic(spec, pairs[i].tau, pairs[i].w)) continue;
        LinTriTrace tr;
        if (lin_tri_verdict(spec, pairs[i].tau, pairs[i].w, &tr) != LinTriVerdict::Birational) {
            CHECK(tr.rounds >= 1);
            continue;
        }
        ++selected;
        CHECK(tr.remaining.empty());
        CHECK(is_birational(spec, pairs[i].tau, pairs[i].w, 21 + i));
    }
    CHECK(selected == 6);
}

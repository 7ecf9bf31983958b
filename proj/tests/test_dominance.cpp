#include <doctest.h>

#include "mcone/dominance.hpp"
#include "mcone/tau_filter.hpp"
#include "mcone/tau_search.hpp"
#include "mcone/weyl_search.hpp"

#include <algorithm>
#include <random>

using namespace mcone;

static const RepSpec kron3331 = RepSpec::kronecker({3, 3, 3, 1});
static const Vec tau3331 = {2, 1, 0, 2, 1, 0, 3, 2, 0, -4};
static const BlockPerm w0_3331 = {{2, 1, 0}, {2, 1, 0}, {2, 1, 0}, {0}};

static std::vector<std::string> names(const WeightIndex& wi, const TangentMap& tm) {
    std::vector<std::string> out;
    for (int i : tm.zero_weights) {
        std::string s = "v";
        for (int k = 0; k < 3; ++k) s += char('0' + wi.weights()[i].index[k]);
        out.push_back(s);
    }
    return out;
}

TEST_CASE("Jacobian of the Kron(3,3,3,1) example") {
    WeightIndex wi(kron3331);
    auto tm = tangent_map(wi, tau3331, w0_3331);
    CHECK(tm.square_levels());
    CHECK(tm.roots.size() == 9);
    CHECK(tm.zero_weights.size() == 6);
    CHECK(tm.neg_weights.size() == 12);
    auto J = jacobian_J(tm);
    auto nm = names(wi, tm);
    CHECK(J.str(nm) == "3*v002^2*v021*v111*v120^2*v201*v210^2");
    CHECK(squarefree_part(J).str(nm) == "v002*v021*v111*v120*v201*v210");
}

// The whole differential at a point of V^{tau<=0}, built directly from the
// Lie action: columns Phi(w) then V^{tau<=0}.
static Mat<Int> dense_differential(const WeightIndex& wi, const Vec& tau, const BlockPerm& w, const std::vector<Int>& x) {
    int n = wi.size();
    Mat<Int> M(n, std::vector<Int>(n, Int(0)));
    int c = 0;
    for (auto& beta : inversion_set(w)) {
        for (int src = 0; src < n; ++src) {
            auto t = wi.apply_root(beta, src);
            if (t.coef) M[t.target][c] += t.coef * x[src];
        }
        ++c;
    }
    for (int i = 0; i < n; ++i)
        if (pairing(tau, wi.weights()[i].coords) <= 0) M[i][c++] = 1;
    REQUIRE(c == n);
    return M;
}

TEST_CASE("level blocks carry the whole determinant") {
    std::mt19937_64 rng(5);
    auto spec = RepSpec::kronecker({3, 3, 3});
    WeightIndex wi(spec);
    auto pairs = step3(spec, step2(spec, enumerate_tau_plus(spec), 1), true);
    for (auto& p : pairs) {
        auto tm = tangent_map(wi, p.tau, p.w);
        REQUIRE(tm.square_levels());
        std::vector<Int> x0(tm.zero_weights.size()), full(wi.size(), Int(0)), mixed(wi.size(), Int(0));
        for (size_t v = 0; v < x0.size(); ++v) {
            x0[v] = static_cast<long>(rng() % 41) - 20;
            full[tm.zero_weights[v]] = x0[v];
            mixed[tm.zero_weights[v]] = x0[v];
        }
        for (int i : tm.neg_weights) mixed[i] = static_cast<long>(rng() % 41) - 20;
        Int prod = 1;
        for (auto& B : tangent_blocks(tm, x0)) prod *= det_bareiss(B);
        Int d0 = det_bareiss(dense_differential(wi, p.tau, p.w, full));
        Int d1 = det_bareiss(dense_differential(wi, p.tau, p.w, mixed));
        CHECK(abs(d0) == abs(prod));
        CHECK(d0 == d1);
        // positive rows of the assembled matrix agree with the dense one
        auto A = positive_matrix<Int>(tm, mixed, Int(0));
        auto M = dense_differential(wi, p.tau, p.w, mixed);
        auto phi = inversion_set(p.w);
        for (size_t c = 0; c < tm.roots.size(); ++c) {
            size_t dc = std::find(phi.begin(), phi.end(), tm.roots[c]) - phi.begin();
            for (size_t r = 0; r < tm.pos_weights.size(); ++r) CHECK(A[r][c] == M[tm.pos_weights[r]][dc]);
        }
    }
}

TEST_CASE("probabilistic and symbolic dominance agree on Kron(3,3,3)") {
    auto spec = RepSpec::kronecker({3, 3, 3});
    auto pairs = step3(spec, step2(spec, enumerate_tau_plus(spec), 1), true);
    REQUIRE(pairs.size() == 32);
    int dominant = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        bool p = is_dominant_probabilistic(spec, pairs[i].tau, pairs[i].w, 100 + i);
        bool s = is_dominant_symbolic(spec, pairs[i].tau, pairs[i].w);
        CHECK(p == s);
        dominant += s;
        auto r = decide_dominance(spec, pairs[i].tau, pairs[i].w, 7 + i, SymbolicPolicy::OnReject);
        CHECK(r.dominant == s);
        CHECK(r.symbolic_used == !p);
        auto a = decide_dominance(spec, pairs[i].tau, pairs[i].w, 7 + i, SymbolicPolicy::Always);
        CHECK(a.J.has_value() == s);
    }
    CHECK(dominant == 24);
}

TEST_CASE("trivial dominance cases") {
    // no positive weight and no inversion: pi is the identity of V
    auto spec = RepSpec::kronecker({2, 2});
    Vec tau = {0, 0, 0, -1};
    BlockPerm id = identity_perm(spec);
    CHECK(is_dominant_probabilistic(spec, tau, id, 1));
    CHECK(is_dominant_symbolic(spec, tau, id));
    // a single diagonal entry x_1
    auto k2 = RepSpec::kronecker({2, 1});
    Vec t2 = {1, 0, 0};
    BlockPerm s = {{1, 0}, {0}};
    WeightIndex wi(k2);
    auto tm = tangent_map(wi, t2, s);
    CHECK(jacobian_J(tm).str() == "x0");
    CHECK(is_dominant_symbolic(k2, t2, s));
    // wrong level counts: not square
    CHECK_FALSE(is_dominant_symbolic(k2, t2, id));
}

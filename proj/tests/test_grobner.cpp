#include <doctest.h>

#include "mcone/birationality.hpp"
#include "mcone/grobner.hpp"
#include "mcone/isotropy.hpp"
#include "mcone/tau_filter.hpp"
#include "mcone/tau_search.hpp"
#include "mcone/weyl_search.hpp"

#include <random>

using namespace mcone;

namespace {

MPoly v(size_t n, size_t i) { return MPoly::var(n, i); }

struct Decided {
    RepSpec spec;
    std::vector<CandidatePair> pairs;
    std::vector<char> birational;
    explicit Decided(RepSpec s) : spec(std::move(s)) {
        int base = pid_full(spec, 1);
        auto all = step3(spec, step2(spec, enumerate_tau_plus(spec), 1, nullptr, base), true);
        for (size_t i = 0; i < all.size(); ++i) {
            if (!is_dominant_symbolic(spec, all[i].tau, all[i].w)) continue;
            pairs.push_back(all[i]);
            birational.push_back(is_birational(spec, all[i].tau, all[i].w, 11 + i));
        }
    }
};

const Decided& k333() {
    static Decided d(RepSpec::kronecker({3, 3, 3}));
    return d;
}

}  // namespace

TEST_CASE("coordinate and non-reduced ideals") {
    CHECK(maximal_at_origin({v(2, 0), v(2, 1)}, 2, 1.0) == GrobnerVerdict::Birational);
    CHECK(maximal_at_origin({v(2, 0) * v(2, 0), v(2, 0) * v(2, 1)}, 2, 1.0) == GrobnerVerdict::NotBirational);
    // v1 + v0^2, v0 v1 vanishes to order two along v0
    CHECK(maximal_at_origin({v(2, 1) + v(2, 0) * v(2, 0), v(2, 0) * v(2, 1)}, 2, 1.0) ==
          GrobnerVerdict::NotBirational);
    // v0 - v1^2, v1 - v0^2: the coordinate ideal locally, but the fiber has four points
    CHECK(maximal_at_origin({v(2, 0) - v(2, 1) * v(2, 1), v(2, 1) - v(2, 0) * v(2, 0)}, 2, 1.0) ==
          GrobnerVerdict::NotBirational);
    CHECK(maximal_at_origin({}, 0, 1.0) == GrobnerVerdict::Birational);
}

TEST_CASE("ideals over a parameter field") {
    // variables v0 v1, parameter x (index 2)
    auto x = v(3, 2);
    CHECK(maximal_at_origin_generic({x * v(3, 0) + v(3, 1), x * v(3, 1)}, 2, 1.0) == GrobnerVerdict::Birational);
    CHECK(maximal_at_origin_generic({x * v(3, 0) * v(3, 0), v(3, 1) - x * v(3, 0) * v(3, 0)}, 2, 1.0) ==
          GrobnerVerdict::NotBirational);
    // x v0 - v1^2 and v1: generically the coordinate ideal
    CHECK(maximal_at_origin_generic({x * v(3, 0) - v(3, 1) * v(3, 1), v(3, 1)}, 2, 1.0) ==
          GrobnerVerdict::Birational);
}

TEST_CASE("deadline turns into an inconclusive verdict") {
    auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    {
        ScopedDeadline d(past);
        CHECK_THROWS_AS(check_deadline(), DeadlineExceeded);
    }
    CHECK_NOTHROW(check_deadline());
    // a dense system of quartics on six variables cannot finish instantly
    std::mt19937_64 rng(3);
    std::vector<MPoly> f;
    for (int k = 0; k < 6; ++k) {
        MPoly p(6);
        for (int t = 0; t < 12; ++t) {
            MPoly m = MPoly::constant(6, static_cast<long>(rng() % 19) - 9);
            for (int e = 0; e < 4; ++e) m = m * v(6, rng() % 6);
            p = p + m;
        }
        f.push_back(p);
    }
    GrobnerStats st;
    CHECK(maximal_at_origin(f, 6, 0.0, &st) == GrobnerVerdict::Inconclusive);
    CHECK(st.timed_out);
}

TEST_CASE("fiber systems vanish at the origin") {
    const auto& d = k333();
    WeightIndex wi(d.spec);
    std::mt19937_64 rng(9);
    for (auto& p : d.pairs) {
        auto fs = fiber_system(d.spec, p.tau, p.w);
        CHECK(fs.nv() == inversion_set(p.w).size());
        CHECK(fs.equations.size() == fs.eq_weights.size());
        for (int chi : fs.eq_weights) CHECK(pairing(p.tau, wi.weights()[chi].coords) > 0);
        for (int psi : fs.x_weights) CHECK(pairing(p.tau, wi.weights()[psi].coords) <= 0);
        for (auto& f : fs.equations)
            for (auto& t : f.terms()) {
                int dv = 0, dx = 0;
                for (size_t i = 0; i < fs.nv(); ++i) dv += t.e[i];
                for (size_t i = 0; i < fs.nx(); ++i) dx += t.e[fs.nv() + i];
                CHECK(dv > 0);
                CHECK(dx == 1);
            }
        // the linear part in v is the positive block of the differential
        std::vector<Int> x(fs.nx());
        for (auto& c : x) c = static_cast<long>(rng() % 2001) - 1000;
        auto sp = specialize(fs, x);
        REQUIRE(sp.size() == fs.equations.size());
        for (auto& f : sp) CHECK(f.nvars() == fs.nv());
        auto slice = torus_slice(d.spec, fs);
        Echelon e(d.spec.n());
        for (size_t q : slice) CHECK(e.add(wi.weights()[fs.x_weights[q]].coords));
    }
}

TEST_CASE("random-mode verdicts agree with the birationality decision on Kron(3,3,3)") {
    const auto& d = k333();
    REQUIRE(d.pairs.size() == 24);
    int decided = 0;
    for (size_t i = 0; i < d.pairs.size(); ++i) {
        GrobnerOptions o;
        o.seed = 40 + i;
        o.confirm_negative = true;
        auto g = grobner_verdict(d.spec, d.pairs[i].tau, d.pairs[i].w, o);
        if (g == GrobnerVerdict::Inconclusive) continue;
        ++decided;
        CHECK((g == GrobnerVerdict::Birational) == static_cast<bool>(d.birational[i]));
    }
    CHECK(decided >= 20);
}

TEST_CASE("generic-mode verdicts agree where they terminate") {
    const auto& d = k333();
    int bir = 0;
    for (size_t i = 0; i < d.pairs.size(); ++i) {
        GrobnerOptions o;
        o.mode = GrobnerMode::Generic;
        o.budget_s = 0.5;
        auto g = grobner_verdict(d.spec, d.pairs[i].tau, d.pairs[i].w, o);
        if (d.birational[i]) {
            CHECK(g == GrobnerVerdict::Birational);
            ++bir;
        } else {
            CHECK(g != GrobnerVerdict::Birational);
        }
        // deterministic
        if (g != GrobnerVerdict::Inconclusive) CHECK(grobner_verdict(d.spec, d.pairs[i].tau, d.pairs[i].w, o) == g);
    }
    CHECK(bir == 8);
}

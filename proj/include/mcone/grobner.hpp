// Fiber of pi over a point x of V^{tau<=0} as a polynomial system in the
// coordinates v_beta of w^-1 U^- w cap U, decided by a Groebner basis.
#pragma once

#include "mcone/core.hpp"
#include "mcone/mpoly.hpp"

#include <cstdint>
#include <vector>

namespace mcone {

// Equations f_chi(v, x) = xi_chi(phi(v) x) for chi of positive level, as
// polynomials in the variables v_beta (first) and x_psi for psi of level
// <= 0 (after).
struct FiberSystem {
    std::vector<Root> roots;
    std::vector<int> x_weights;
    std::vector<int> eq_weights;
    std::vector<MPoly> equations;
    size_t nv() const { return roots.size(); }
    size_t nx() const { return x_weights.size(); }
};

FiberSystem fiber_system(const RepSpec& spec, const Vec& tau, const BlockPerm& w);

// Positions of x_weights with linearly independent weights: the torus moves
// a generic x to one with these coordinates equal to 1.
std::vector<size_t> torus_slice(const RepSpec& spec, const FiberSystem& fs);
// Equations over the remaining parameters after setting the slice to 1;
// unused parameters are dropped.
std::vector<MPoly> generic_slice_equations(const RepSpec& spec, const FiberSystem& fs);

// Equations in the v variables only at the integer point x (indexed like
// x_weights).
std::vector<MPoly> specialize(const FiberSystem& fs, const std::vector<Int>& x);

enum class GrobnerVerdict { Birational, NotBirational, Inconclusive };

struct GrobnerStats {
    long pairs = 0;
    long reductions = 0;
    size_t basis = 0;
    bool timed_out = false;
};

// The ideal is the maximal ideal at 0 iff its basis has the nvars single
// variables as leading monomials. Buchberger with sugar, grevlex, over Q.
GrobnerVerdict maximal_at_origin(const std::vector<MPoly>& f, size_t nvars, double budget_s,
                                 GrobnerStats* stats = nullptr);
// Same over Q(x): variables 0..nv-1 are v, the rest are parameters.
GrobnerVerdict maximal_at_origin_generic(const std::vector<MPoly>& f, size_t nv, double budget_s,
                                         GrobnerStats* stats = nullptr);

enum class GrobnerMode { Random, Generic };

struct GrobnerOptions {
    GrobnerMode mode = GrobnerMode::Random;
    uint64_t seed = 1;
    double budget_s = 1.0;
    // Random mode: retry a NotBirational answer once at a fresh point.
    bool confirm_negative = false;
};

GrobnerVerdict grobner_verdict(const RepSpec& spec, const Vec& tau, const BlockPerm& w, const GrobnerOptions& opt,
                               GrobnerStats* stats = nullptr);

}  // namespace mcone

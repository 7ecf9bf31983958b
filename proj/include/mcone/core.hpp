// Root data, weights and cocharacters for products of general linear groups
// acting on tensor products (Kronecker), exterior powers (fermion) and
// symmetric powers (boson).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mcone {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<long>;

enum class Kind { Kronecker, Fermion, Boson };

struct RepSpec {
    Kind kind = Kind::Kronecker;
    std::vector<int> dims;
    int r = 0;

    static RepSpec kronecker(std::vector<int> dims);
    static RepSpec fermion(int d, int r);
    static RepSpec boson(int d, int r);
    // "kron 4 4 4", "fermion 6 3", "boson 3 2"
    static RepSpec parse(const std::string& text);

    int s() const { return static_cast<int>(dims.size()); }
    int n() const;
    int offset(int k) const;
    int central_rank() const { return kind == Kind::Kronecker ? s() - 1 : 0; }
    long dim_v() const;
    std::string name() const;
    bool operator==(const RepSpec&) const = default;
};

// index: Kronecker a_k per block (0-based); fermion/boson sorted indices.
struct Weight {
    std::vector<int> index;
    Vec coords;
};

std::vector<Weight> weights(const RepSpec& spec);

long pairing(const Vec& tau, const Vec& chi);

// Positive root e^k_i - e^k_j with i < j (local indices in block k).
struct Root {
    int k = 0, i = 0, j = 0;
    auto operator<=>(const Root&) const = default;
};

std::vector<Root> positive_roots(const RepSpec& spec);
Vec root_coords(const RepSpec& spec, const Root& b);
long root_level(const RepSpec& spec, const Vec& tau, const Root& b);

bool is_dominant(const RepSpec& spec, const Vec& tau);
bool is_normalized(const RepSpec& spec, const Vec& tau);
bool is_indivisible(const Vec& tau);
// Kronecker: shift by the central torus so blocks k < s end in 0, then
// divide by the gcd. Fermion/boson: divide by the gcd.
Vec normalize(const RepSpec& spec, const Vec& tau);

struct FaceData {
    std::vector<int> dbar;
    std::vector<Vec> taubar;
    std::vector<std::vector<int>> mult;
};

FaceData reduce_to_face(const RepSpec& spec, const Vec& tau);
Vec extend_from_face(const FaceData& face);

enum class Order { Less, Greater, Equal, Incomparable };

// Kronecker: index tuples compared entrywise, larger indices are smaller.
// Fermion/boson on count vectors: smaller partial sums are smaller.
Order weight_order(Kind kind, const std::vector<int>& a, const std::vector<int>& b);

using Perm = std::vector<int>;
using BlockPerm = std::vector<Perm>;

std::vector<std::pair<int, int>> inversions(const Perm& w);
Perm permutation_from_inversions(int m, const std::vector<std::pair<int, int>>& inv);
std::vector<Root> inversion_set(const BlockPerm& w);
BlockPerm inversion_set_to_permutation(const RepSpec& spec, const std::vector<Root>& phi);
BlockPerm identity_perm(const RepSpec& spec);
Perm inverse(const Perm& w);
int length(const BlockPerm& w);

// (w tau)[w(i)] = tau[i] per block.
Vec apply_w_to_tau(const RepSpec& spec, const BlockPerm& w, const Vec& tau);
Vec apply_perm(const RepSpec& spec, const BlockPerm& w, const Vec& lambda);

// Representative of an inequality modulo central shifts (Kronecker) and
// permutations of equal-size blocks.
Vec canonical_inequality(const RepSpec& spec, const Vec& ineq, bool symmetry);

// Inequalities <v, lambda> <= 0 expressing lambda_{k,i} >= lambda_{k,i+1}.
std::vector<Vec> dominance_inequalities(const RepSpec& spec);

std::string to_string(const Vec& v, const RepSpec& spec);
std::string to_string(const BlockPerm& w);

long gcd_vec(const Vec& v);
long binomial(long n, long k);

}  // namespace mcone

// Highest weights occurring in the coordinate ring, and the rational cone they
// generate. Brute force, for small representations only.
#pragma once

#include "mcone/core.hpp"

#include <cstdint>
#include <vector>

namespace mcone {

// Degree of a weight tuple in C[V] (|lambda_k| for Kronecker, |lambda|/r
// otherwise); -1 if the blocks disagree or r does not divide.
int semigroup_degree(const RepSpec& spec, const Vec& lambda);

// Whether the irreducible module of highest weight lambda occurs in C[V].
bool in_semigroup(const RepSpec& spec, const Vec& lambda);

// All nonzero highest weights of degree at most N, sorted.
std::vector<Vec> semigroup_points(const RepSpec& spec, int N);

// Sums of one to three occurring weights of degree at most base_degree,
// drawn uniformly; every result lies in the semigroup.
std::vector<Vec> random_semigroup_points(const RepSpec& spec, size_t count, int base_degree, uint64_t seed);

// Polyhedral cone spanned by integer points, described inside its linear span.
struct ConeHull {
    size_t ambient = 0;
    std::vector<size_t> pivots;          // coordinates identifying the span
    std::vector<std::vector<Rat>> basis;  // reduced echelon basis of the span
    // Facet normals a with <a, x> <= 0, as primitive integer vectors of the
    // values on the basis.
    std::vector<std::vector<Int>> facets;

    size_t dim() const { return basis.size(); }
    // Restriction of the linear form v to the span, primitive (positive
    // scaling removed); empty when v vanishes on the span.
    std::vector<Int> restrict(const Vec& v) const;
    bool is_facet(const Vec& v) const;
    // The facet as an ambient form supported on the pivot coordinates.
    Vec ambient_form(const std::vector<Int>& facet) const;
};

// Double description over the integers. Throws std::invalid_argument when the
// points span less than expected_dim dimensions (if expected_dim >= 0).
ConeHull hull_facets(const std::vector<Vec>& points, int expected_dim = -1);

}  // namespace mcone

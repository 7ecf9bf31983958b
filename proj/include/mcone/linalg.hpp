// Exact dense linear algebra over Q, Z and generic fields.
#pragma once

#include "mcone/core.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mcone {

template <class F>
using Mat = std::vector<std::vector<F>>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline Rat reciprocal(const Rat& x) { return Rat(1) / x; }

// Gauss-Jordan to reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
    std::vector<size_t> piv;
    if (m.empty()) return piv;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = F(m[r][c]);
        inv = reciprocal(inv);
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

// Row echelon only (cheaper than rref); returns rank.
template <class F>
size_t rank_field(Mat<F> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = reciprocal(F(m[r][c]));
        for (size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            F f = m[i][c] * inv;
            for (size_t j = c; j < cols; ++j)
                if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Kernel basis of m (cols known even when m has no rows).
template <class F>
Mat<F> kernel_field(Mat<F> m, size_t cols, const F& one) {
    F zero = one - one;
    auto piv = rref(m);
    std::vector<char> is_piv(cols, 0);
    for (size_t c : piv) is_piv[c] = 1;
    Mat<F> out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(cols, zero);
        v[f] = one;
        for (size_t r = 0; r < piv.size(); ++r)
            if (!is_zero(m[r][f])) v[piv[r]] = zero - m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

struct RatMatrix {
    size_t rows = 0, cols = 0;
    Mat<Rat> a;

    RatMatrix() = default;
    RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}
    explicit RatMatrix(Mat<Rat> m) : rows(m.size()), cols(m.empty() ? 0 : m[0].size()), a(std::move(m)) {}
    static RatMatrix identity(size_t n);
    Rat& operator()(size_t i, size_t j) { return a[i][j]; }
    const Rat& operator()(size_t i, size_t j) const { return a[i][j]; }
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
};

size_t rank(const RatMatrix& m);
std::vector<std::vector<Rat>> kernel(const RatMatrix& m);
Rat det(const RatMatrix& m);

// Fraction-free elimination on integer matrices.
size_t rank_bareiss(Mat<Int> m);
Int det_bareiss(Mat<Int> m);

// Scale a rational vector to a primitive integer vector.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

// Incrementally maintained echelon basis of a lattice span over Q, with
// small-integer vectors (overflow is detected and reported).
class Echelon {
public:
    explicit Echelon(size_t dim) : dim_(dim) {}
    // Returns true if v was independent of the current span (and adds it).
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    // Integer basis of the orthogonal complement of the span.
    std::vector<Vec> orthogonal() const;

private:
    Vec reduce(Vec v) const;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> piv_;
};

}  // namespace mcone

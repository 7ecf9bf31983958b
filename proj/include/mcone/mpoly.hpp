// Sparse multivariate polynomials with integer coefficients.
#pragma once

#include "mcone/core.hpp"
#include "mcone/upoly.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcone {

using Mono = std::vector<uint16_t>;

// Degree reverse lexicographic comparison: <0, 0, >0.
int grevlex_cmp(const Mono& a, const Mono& b);

class MPoly {
public:
    struct Term {
        Mono e;
        Int c;
    };

    explicit MPoly(size_t nvars = 0) : n_(nvars) {}
    static MPoly constant(size_t nvars, const Int& c);
    static MPoly var(size_t nvars, size_t i, const Int& c = 1);
    static MPoly from_terms(size_t nvars, std::vector<Term> terms);

    size_t nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && total(t_[0].e) == 0); }
    const Term& lead() const { return t_.front(); }
    int total_degree() const;
    int degree_in(size_t v) const;
    std::vector<char> support() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Int& c, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly derivative(size_t v) const;
    Int content() const;
    // Primitive with positive leading coefficient.
    MPoly primitive() const;

    Rat eval(const std::vector<Rat>& pt) const;
    // Restriction to the line x = a z + b.
    UPoly on_line(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    // Coefficients as a polynomial in variable v (v-exponent removed).
    std::vector<MPoly> coeffs_in(size_t v) const;
    static MPoly from_coeffs_in(size_t nvars, size_t v, const std::vector<MPoly>& c);

    std::string str(const std::vector<std::string>& names = {}) const;

    static int total(const Mono& e);

private:
    void canonicalize();
    size_t n_;
    std::vector<Term> t_;  // decreasing grevlex, no zero coefficients
};

// Cooperative time limit for the long-running polynomial routines of this
// thread (gcd, exact division): they throw DeadlineExceeded once it passes.
struct DeadlineExceeded : std::runtime_error {
    DeadlineExceeded() : std::runtime_error("polynomial computation exceeded its time limit") {}
};
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::steady_clock::time_point t);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::chrono::steady_clock::time_point prev_;
    bool had_prev_;
};
void check_deadline();

bool divide_exact(const MPoly& a, const MPoly& b, MPoly& q);
MPoly exact_quotient(const MPoly& a, const MPoly& b);
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly squarefree_part(const MPoly& f);
MPoly det(std::vector<std::vector<MPoly>> m);

}  // namespace mcone

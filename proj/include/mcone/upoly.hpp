// Dense univariate polynomials over Q, factorization over Q and the
// quotient fields Q[z]/(delta).
#pragma once

#include "mcone/core.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mcone {

class UPoly {
public:
    UPoly() = default;
    UPoly(const Rat& c);  // NOLINT: constants convert implicitly
    explicit UPoly(std::vector<Rat> coeffs);
    static UPoly z();
    static UPoly monomial(const Rat& c, int degree);
    static UPoly from_ints(const std::vector<long>& coeffs);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& lc() const { return c_.back(); }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& d, const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic
// s*a + t*b = g (monic gcd)
void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t);
UPoly pow(const UPoly& a, unsigned e);
// Interpolation through (x_i, y_i), distinct x_i.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

UPoly squarefree_part(const UPoly& f);
// Yun: f = c * prod a_i^i with a_i squarefree, pairwise coprime, monic.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
// Irreducible monic factors with multiplicities.
std::vector<std::pair<UPoly, int>> factor(const UPoly& f);

// Integer-coefficient polynomials used by the factorization routines.
using ZPoly = std::vector<Int>;
ZPoly primitive_part(const UPoly& f);
// Factor a squarefree primitive integer polynomial of positive degree with
// positive leading coefficient into irreducible primitive factors.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

// Algebraic number field K = Q[z]/(m), m monic irreducible.
struct NumberField {
    UPoly modulus;
    explicit NumberField(UPoly m) : modulus(std::move(m)) {}
    int degree() const { return modulus.deg(); }
};

class NFElem {
public:
    NFElem() = default;
    NFElem(std::shared_ptr<const NumberField> K, UPoly v);
    NFElem(std::shared_ptr<const NumberField> K, const Rat& c) : NFElem(std::move(K), UPoly(c)) {}

    const UPoly& value() const { return v_; }
    const std::shared_ptr<const NumberField>& field() const { return K_; }
    bool zero() const { return v_.is_zero(); }

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem reciprocal(const NFElem& a);
    friend bool is_zero(const NFElem& a) { return a.v_.is_zero(); }
    friend bool operator==(const NFElem& a, const NFElem& b) { return a.v_ == b.v_; }

private:
    std::shared_ptr<const NumberField> K_;
    UPoly v_;
};

// Q[z]/(delta) = prod K_j for squarefree delta.
struct CrtSplit {
    UPoly delta;
    std::vector<std::shared_ptr<const NumberField>> fields;
    std::vector<UPoly> idempotents;  // e_j = 1 mod delta_j, 0 mod delta_i
    std::vector<NFElem> split(const UPoly& f) const;
    UPoly reconstruct(const std::vector<NFElem>& parts) const;
};

CrtSplit crt_split(const UPoly& delta);

// Matrices over Q[z].
using UMat = std::vector<std::vector<UPoly>>;
UPoly det_fraction_free(UMat m);
// Monic gcd of all size x size minors.
UPoly gcd_of_minors(const UMat& m, int size);
// Diagonal of the Smith normal form (monic), computed by elementary
// operations over the Euclidean ring Q[z].
std::vector<UPoly> smith_diagonal(UMat m);

}  // namespace mcone

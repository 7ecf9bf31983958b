#include "mcone/linalg.hpp"

#include <numeric>

namespace mcone {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rat> out(rows, Rat(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!is_zero(a[i][j]) && !is_zero(v[j])) out[i] += a[i][j] * v[j];
    return out;
}

static Mat<Int> clear_denominators(const RatMatrix& m) {
    Mat<Int> out(m.rows, std::vector<Int>(m.cols));
    for (size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (auto& x : m.a[i]) l = lcm(l, Int(x.get_den()));
        for (size_t j = 0; j < m.cols; ++j) out[i][j] = m.a[i][j].get_num() * (l / m.a[i][j].get_den());
    }
    return out;
}

size_t rank(const RatMatrix& m) { return rank_bareiss(clear_denominators(m)); }

std::vector<std::vector<Rat>> kernel(const RatMatrix& m) {
    return kernel_field<Rat>(m.a, m.cols, Rat(1));
}

Rat det(const RatMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    Rat scale = 1;
    for (size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (auto& x : m.a[i]) l = lcm(l, Int(x.get_den()));
        scale *= Rat(l);
    }
    return Rat(det_bareiss(clear_denominators(m))) / scale;
}

size_t rank_bareiss(Mat<Int> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    Int prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Int det_bareiss(Mat<Int> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && sgn(m[p][k]) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int l = 1;
    for (auto& x : v) l = lcm(l, Int(x.get_den()));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

static long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Echelon: integer overflow");
    return r;
}

static void make_primitive(Vec& v) {
    long g = gcd_vec(v);
    if (g > 1)
        for (long& x : v) x /= g;
}

Vec Echelon::reduce(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = piv_[i];
        if (v[p] == 0) continue;
        long a = rows_[i][p], b = v[p];
        long g = std::gcd(a, b);
        long fa = a / g, fb = b / g;
        for (size_t j = 0; j < dim_; ++j) {
            long t;
            if (__builtin_sub_overflow(checked_mul(fa, v[j]), checked_mul(fb, rows_[i][j]), &t))
                throw std::overflow_error("Echelon: integer overflow");
            v[j] = t;
        }
        make_primitive(v);
    }
    return v;
}

bool Echelon::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (long x : r)
        if (x) return false;
    return true;
}

bool Echelon::add(const Vec& v) {
    Vec r = reduce(v);
    size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    if (r[p] < 0)
        for (long& x : r) x = -x;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][p] == 0) continue;
        long a = r[p], b = rows_[i][p];
        long g = std::gcd(a, b);
        long fa = a / g, fb = b / g;
        for (size_t j = 0; j < dim_; ++j) rows_[i][j] = checked_mul(fa, rows_[i][j]) - checked_mul(fb, r[j]);
        make_primitive(rows_[i]);
        if (rows_[i][piv_[i]] < 0)
            for (long& x : rows_[i]) x = -x;
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
}

std::vector<Vec> Echelon::orthogonal() const {
    std::vector<char> is_piv(dim_, 0);
    for (size_t p : piv_) is_piv[p] = 1;
    long l = 1;
    for (size_t i = 0; i < rows_.size(); ++i) l = std::lcm(l, rows_[i][piv_[i]]);
    std::vector<Vec> out;
    for (size_t f = 0; f < dim_; ++f) {
        if (is_piv[f]) continue;
        Vec x(dim_, 0);
        x[f] = l;
        for (size_t i = 0; i < rows_.size(); ++i)
            x[piv_[i]] = -checked_mul(rows_[i][f], l / rows_[i][piv_[i]]);
        make_primitive(x);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace mcone

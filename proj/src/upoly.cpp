#include "mcone/upoly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mcone {

UPoly::UPoly(const Rat& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::z() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UPoly UPoly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> v;
    for (long x : coeffs) v.push_back(Rat(x));
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (int i = deg(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    if (deg() < 1) return UPoly();
    std::vector<Rat> v(deg());
    for (int i = 1; i <= deg(); ++i) v[i - 1] = c_[i] * i;
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rat l = lc();
    for (auto& x : r.c_) x /= l;
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream o;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) o << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) o << "-";
        Rat a = abs(c_[i]);
        if (a != 1 || i == 0) o << a.get_str();
        if (i > 0) o << (a != 1 ? "*" : "") << "z";
        if (i > 1) o << "^" << i;
        first = false;
    }
    return o.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.deg() < b.deg()) return {UPoly(), a};
    std::vector<Rat> r = a.coeffs();
    std::vector<Rat> q(a.deg() - b.deg() + 1, Rat(0));
    Rat inv = Rat(1) / b.lc();
    for (int i = a.deg(); i >= b.deg(); --i) {
        if (sgn(r[i]) == 0) continue;
        Rat c = r[i] * inv;
        q[i - b.deg()] = c;
        for (int j = 0; j <= b.deg(); ++j) r[i - b.deg() + j] -= c * b.coeffs()[j];
    }
    r.resize(b.deg());
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: not divisible");
    return q;
}

bool divides(const UPoly& d, const UPoly& a) { return (a % d).is_zero(); }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

void xgcd(const UPoly& a, const UPoly& b, UPoly& g, UPoly& s, UPoly& t) {
    UPoly r0 = a, r1 = b, s0 = Rat(1), s1, t0, t1 = Rat(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    Rat l = r0.lc();
    g = r0.monic();
    s = s0 * UPoly(Rat(1) / l);
    t = t0 * UPoly(Rat(1) / l);
}

UPoly pow(const UPoly& a, unsigned e) {
    UPoly r = Rat(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly r;
    for (size_t k = n; k-- > 0;) r = r * (UPoly::z() - UPoly(xs[k])) + UPoly(dd[k]);
    return r;
}

UPoly squarefree_part(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part of zero");
    if (f.deg() == 0) return Rat(1);
    return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    if (f.deg() == 0) return out;
    UPoly fm = f.monic();
    UPoly d1 = fm.derivative();
    UPoly a0 = gcd(fm, d1);
    UPoly b = exact_div(fm, a0), c = exact_div(d1, a0);
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        UPoly a = gcd(b, d);
        if (a.deg() > 0) out.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

static void ztrim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

static ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

static Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (auto& x : f) g = gcd(g, x);
    return g;
}

static ZPoly zprimitive(ZPoly f) {
    Int g = zcontent(f);
    if (g == 0) return f;
    if (sgn(f.back()) < 0) g = -g;
    for (auto& x : f) x /= g;
    return f;
}

// Exact division over Z; returns false if g does not divide f.
static bool zdivide(const ZPoly& f, const ZPoly& g, ZPoly& q) {
    if (g.empty()) return false;
    if (f.size() < g.size()) {
        q.clear();
        return f.empty();
    }
    ZPoly r = f;
    q.assign(f.size() - g.size() + 1, Int(0));
    for (size_t i = f.size(); i-- >= g.size();) {
        if (sgn(r[i]) != 0) {
            if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) return false;
            Int c = r[i] / g.back();
            q[i - g.size() + 1] = c;
            for (size_t j = 0; j < g.size(); ++j) r[i - g.size() + 1 + j] -= c * g[j];
        }
        if (i == g.size() - 1) break;
    }
    for (auto& x : r)
        if (sgn(x) != 0) return false;
    ztrim(q);
    return true;
}

ZPoly primitive_part(const UPoly& f) {
    Int l = 1;
    for (auto& x : f.coeffs()) l = lcm(l, Int(x.get_den()));
    ZPoly z;
    for (auto& x : f.coeffs()) z.push_back(x.get_num() * (l / x.get_den()));
    return zprimitive(z);
}

static UPoly to_upoly(const ZPoly& f) {
    std::vector<Rat> v;
    for (auto& x : f) v.push_back(Rat(x));
    return UPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Polynomials modulo a small prime p (p < 2^31)

using PP = std::vector<uint64_t>;

namespace {

struct ModP {
    uint64_t p;

    void trim(PP& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    uint64_t inv(uint64_t a) const {
        uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    PP sub(const PP& a, const PP& b) const {
        PP r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
        trim(r);
        return r;
    }
    PP mul(const PP& a, const PP& b) const {
        if (a.empty() || b.empty()) return {};
        PP r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    void divmod(const PP& a, const PP& b, PP& q, PP& r) const {
        r = a;
        trim(r);
        if (r.size() < b.size()) {
            q.clear();
            return;
        }
        q.assign(r.size() - b.size() + 1, 0);
        uint64_t il = inv(b.back());
        for (size_t i = r.size(); i-- >= b.size();) {
            uint64_t c = r[i] * il % p;
            q[i - b.size() + 1] = c;
            if (c)
                for (size_t j = 0; j < b.size(); ++j)
                    r[i - b.size() + 1 + j] = (r[i - b.size() + 1 + j] + p - c * b[j] % p) % p;
            if (i == b.size() - 1) break;
        }
        r.resize(b.size() - 1);
        trim(r);
        trim(q);
    }
    PP mod(const PP& a, const PP& b) const {
        PP q, r;
        divmod(a, b, q, r);
        return r;
    }
    PP div(const PP& a, const PP& b) const {
        PP q, r;
        divmod(a, b, q, r);
        return q;
    }
    PP monic(PP a) const {
        trim(a);
        if (a.empty()) return a;
        uint64_t il = inv(a.back());
        for (auto& x : a) x = x * il % p;
        return a;
    }
    PP gcd(PP a, PP b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            PP r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1 assuming coprime.
    void xgcd(const PP& a, const PP& b, PP& s, PP& t) const {
        PP r0 = a, r1 = b, s0 = {1}, s1, t0, t1 = {1};
        trim(r0);
        trim(r1);
        while (!r1.empty()) {
            PP q, r;
            divmod(r0, r1, q, r);
            r0 = std::move(r1);
            r1 = std::move(r);
            PP s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        uint64_t il = inv(r0.back());
        for (auto& x : s0) x = x * il % p;
        for (auto& x : t0) x = x * il % p;
        s = s0;
        t = t0;
    }
    PP powmod(PP b, const Int& e, const PP& f) const {
        PP r = {1};
        b = mod(b, f);
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), f);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b), f);
        }
        return r;
    }
    PP deriv(const PP& a) const {
        if (a.size() < 2) return {};
        PP r(a.size() - 1);
        for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
        trim(r);
        return r;
    }
};

std::vector<std::pair<PP, int>> distinct_degree(const ModP& F, PP f) {
    std::vector<std::pair<PP, int>> out;
    PP x = {0, 1};
    PP h = x;
    int d = 1;
    while (static_cast<int>(f.size()) - 1 >= 2 * d) {
        h = F.powmod(h, Int(static_cast<unsigned long>(F.p)), f);
        PP g = F.gcd(f, F.sub(h, x));
        if (g.size() > 1) {
            out.push_back({g, d});
            f = F.div(f, g);
            h = F.mod(h, f);
        }
        ++d;
    }
    if (f.size() > 1) out.push_back({F.monic(f), static_cast<int>(f.size()) - 1});
    return out;
}

void equal_degree(const ModP& F, const PP& g, int d, std::mt19937_64& rng, std::vector<PP>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
    e = (e - 1) / 2;
    while (true) {
        PP a(n);
        for (auto& x : a) x = rng() % F.p;
        F.trim(a);
        if (a.size() < 2) continue;
        PP b = F.powmod(a, e, g);
        b = F.sub(b, PP{1});
        PP h = F.gcd(g, b);
        int dh = static_cast<int>(h.size()) - 1;
        if (dh > 0 && dh < n) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, F.monic(F.div(g, h)), d, rng, out);
            return;
        }
    }
}

std::vector<PP> factor_mod_p(const ModP& F, const PP& f) {
    std::mt19937_64 rng(0x5eed + F.p);
    std::vector<PP> out;
    for (auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
    return out;
}

uint64_t mod_int(const Int& x, uint64_t p) {
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

PP reduce(const ZPoly& f, uint64_t p) {
    PP r;
    for (auto& x : f) r.push_back(mod_int(x, p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly lift_pp(const PP& a) {
    ZPoly r;
    for (auto x : a) r.push_back(Int(static_cast<unsigned long>(x)));
    return r;
}

void zmod(ZPoly& f, const Int& m) {
    for (auto& x : f) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    ztrim(f);
}

ZPoly zadd_scaled(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += m * b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

// Lift f = g*h (mod p), g monic, to modulus >= M.
void hensel_pair(const ZPoly& f, const PP& g0, const PP& h0, uint64_t p, const Int& M, ZPoly& g, ZPoly& h) {
    ModP F{p};
    PP s, t;
    F.xgcd(g0, h0, s, t);
    g = lift_pp(g0);
    h = lift_pp(h0);
    Int m = static_cast<unsigned long>(p);
    while (m < M) {
        ZPoly e = zsub(f, zmul(g, h));
        for (auto& x : e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        PP ep = reduce(e, p);
        PP q, r;
        F.divmod(F.mul(t, ep), g0, q, r);
        PP hp = reduce(h, p);
        PP X = F.mul(s, ep);
        PP qh = F.mul(q, hp);
        PP Xs(std::max(X.size(), qh.size()), 0);
        for (size_t i = 0; i < X.size(); ++i) Xs[i] = X[i];
        for (size_t i = 0; i < qh.size(); ++i) Xs[i] = (Xs[i] + qh[i]) % p;
        F.trim(Xs);
        g = zadd_scaled(g, lift_pp(r), m);
        h = zadd_scaled(h, lift_pp(Xs), m);
        m *= static_cast<unsigned long>(p);
        zmod(g, m);
        zmod(h, m);
    }
}

// Lift the monic modular factors of f to modulus M (monic lifts).
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<PP>& us, uint64_t p, const Int& M) {
    ModP F{p};
    if (us.size() == 1) {
        Int inv;
        ZPoly g = f;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
        for (auto& x : g) x *= inv;
        zmod(g, M);
        return {g};
    }
    PP rest = {mod_int(f.back(), p)};
    for (size_t i = 1; i < us.size(); ++i) rest = F.mul(rest, us[i]);
    ZPoly G, H;
    hensel_pair(f, us[0], rest, p, M, G, H);
    std::vector<PP> tail(us.begin() + 1, us.end());
    auto lifted = hensel_multi(H, tail, p, M);
    lifted.insert(lifted.begin(), G);
    return lifted;
}

void symmetric_mod(ZPoly& f, const Int& M) {
    Int half = M / 2;
    for (auto& x : f) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        if (x > half) x -= M;
    }
    ztrim(f);
}

std::vector<uint64_t> small_primes(uint64_t limit) {
    std::vector<char> comp(limit + 1, 0);
    std::vector<uint64_t> out;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
    }
    return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0) {
    ZPoly f = zprimitive(f0);
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) throw std::invalid_argument("factor_squarefree_z: degree must be positive");
    if (n == 1) return {f};
    static const std::vector<uint64_t> primes = small_primes(20000);
    uint64_t best_p = 0;
    std::vector<PP> best;
    int good = 0;
    for (uint64_t p : primes) {
        if (p < 3) continue;
        if (mod_int(f.back(), p) == 0) continue;
        ModP F{p};
        PP fp = reduce(f, p);
        if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
        auto fs = factor_mod_p(F, fp);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = fs;
        }
        if (best.size() == 1 || ++good >= 6) break;
    }
    if (best_p == 0) throw std::runtime_error("factor: no suitable prime");
    if (best.size() == 1) return {f};

    Int norm2 = 0;
    for (auto& x : f) norm2 += x * x;
    Int norm = sqrt(norm2) + 1;
    Int bound = abs(f.back()) * norm * 2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    Int M = static_cast<unsigned long>(best_p);
    while (M <= bound) M *= static_cast<unsigned long>(best_p);

    auto lifted = hensel_multi(f, best, best_p, M);
    std::vector<ZPoly> result;
    ZPoly F = f;
    size_t d = 1;
    while (2 * d <= lifted.size()) {
        bool found = false;
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            ZPoly g = {F.back()};
            for (size_t i : idx) {
                g = zmul(g, lifted[i]);
                zmod(g, M);
            }
            symmetric_mod(g, M);
            g = zprimitive(g);
            ZPoly q;
            if (!g.empty() && zdivide(F, g, q)) {
                result.push_back(g);
                F = zprimitive(q);
                for (size_t i = d; i-- > 0;) lifted.erase(lifted.begin() + idx[i]);
                found = true;
                break;
            }
            size_t k = d;
            while (k > 0 && idx[k - 1] == lifted.size() - d + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    if (F.size() > 1) result.push_back(zprimitive(F));
    return result;
}

std::vector<std::pair<UPoly, int>> factor(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor of zero");
    std::vector<std::pair<UPoly, int>> out;
    for (auto& [a, m] : squarefree_decomposition(f)) {
        if (a.deg() == 1) {
            out.push_back({a, m});
            continue;
        }
        for (auto& g : factor_squarefree_z(primitive_part(a))) out.push_back({to_upoly(g).monic(), m});
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        if (x.first.deg() != y.first.deg()) return x.first.deg() < y.first.deg();
        return x.first.str() < y.first.str();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Number fields and CRT

NFElem::NFElem(std::shared_ptr<const NumberField> K, UPoly v) : K_(std::move(K)) {
    v_ = v.deg() >= K_->degree() ? v % K_->modulus : std::move(v);
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem r;
    r.K_ = a.K_ ? a.K_ : b.K_;
    r.v_ = a.v_ + b.v_;
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem r;
    r.K_ = a.K_ ? a.K_ : b.K_;
    r.v_ = a.v_ - b.v_;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    const auto& K = a.K_ ? a.K_ : b.K_;
    if (a.v_.is_zero() || b.v_.is_zero()) return NFElem(K, UPoly());
    return NFElem(K, a.v_ * b.v_);
}

NFElem reciprocal(const NFElem& a) {
    if (a.v_.is_zero()) throw std::domain_error("inverse of zero in number field");
    UPoly g, s, t;
    xgcd(a.v_, a.K_->modulus, g, s, t);
    if (g.deg() != 0) throw std::domain_error("modulus not irreducible");
    return NFElem(a.K_, s);
}

std::vector<NFElem> CrtSplit::split(const UPoly& f) const {
    std::vector<NFElem> out;
    for (auto& K : fields) out.emplace_back(K, f);
    return out;
}

UPoly CrtSplit::reconstruct(const std::vector<NFElem>& parts) const {
    UPoly r;
    for (size_t j = 0; j < parts.size(); ++j) r += idempotents[j] * parts[j].value();
    return r % delta;
}

CrtSplit crt_split(const UPoly& delta) {
    if (delta.deg() < 1) throw std::invalid_argument("crt_split: constant modulus");
    CrtSplit c;
    c.delta = delta.monic();
    for (auto& [g, m] : factor(c.delta)) {
        if (m != 1) throw std::invalid_argument("crt_split: modulus not squarefree");
        c.fields.push_back(std::make_shared<NumberField>(g));
    }
    for (auto& K : c.fields) {
        UPoly co = exact_div(c.delta, K->modulus);
        NFElem inv = reciprocal(NFElem(K, co));
        c.idempotents.push_back((co * inv.value()) % c.delta);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Matrices over Q[z]

UPoly det_fraction_free(UMat m) {
    size_t n = m.size();
    if (n == 0) return Rat(1);
    UPoly prev = Rat(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return UPoly();
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = UPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

UPoly gcd_of_minors(const UMat& m, int size) {
    int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (size < 0 || size > std::min(rows, cols)) throw std::invalid_argument("gcd_of_minors: size out of range");
    if (size == 0) return Rat(1);
    UPoly g;
    std::vector<int> ri(size), ci(size);
    std::function<void(int, int)> rec_c;
    std::function<void(int, int)> rec_r = [&](int pos, int start) {
        if (pos == size) {
            rec_c(0, 0);
            return;
        }
        for (int i = start; i <= rows - (size - pos); ++i) {
            ri[pos] = i;
            rec_r(pos + 1, i + 1);
        }
    };
    rec_c = [&](int pos, int start) {
        if (pos == size) {
            UMat sub(size, std::vector<UPoly>(size));
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b) sub[a][b] = m[ri[a]][ci[b]];
            g = gcd(g, det_fraction_free(sub));
            return;
        }
        for (int j = start; j <= cols - (size - pos); ++j) {
            ci[pos] = j;
            rec_c(pos + 1, j + 1);
        }
    };
    rec_r(0, 0);
    return g;
}

std::vector<UPoly> smith_diagonal(UMat m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t n = std::min(rows, cols);
    std::vector<UPoly> diag;
    for (size_t t = 0; t < n; ++t) {
        while (true) {
            int best = -1;
            size_t bi = 0, bj = 0;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (!m[i][j].is_zero() && (best < 0 || m[i][j].deg() < best)) {
                        best = m[i][j].deg();
                        bi = i;
                        bj = j;
                    }
            if (best < 0) break;
            std::swap(m[t], m[bi]);
            for (auto& row : m) std::swap(row[t], row[bj]);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                UPoly q = divmod(m[i][t], m[t][t]).first;
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (!m[i][t].is_zero()) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                UPoly q = divmod(m[t][j], m[t][t]).first;
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (!m[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            bool divisible = true;
            for (size_t i = t + 1; i < rows && divisible; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (!m[i][j].is_zero() && !divides(m[t][t], m[i][j])) {
                        for (size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        diag.push_back(m[t][t].monic());
    }
    return diag;
}

}  // namespace mcone

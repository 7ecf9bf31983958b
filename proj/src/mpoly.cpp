#include "mcone/mpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mcone {

int MPoly::total(const Mono& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
}

int grevlex_cmp(const Mono& a, const Mono& b) {
    int da = MPoly::total(a), db = MPoly::total(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

namespace {
thread_local bool deadline_set = false;
thread_local std::chrono::steady_clock::time_point deadline_at;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::time_point t) : prev_(deadline_at), had_prev_(deadline_set) {
    deadline_set = true;
    deadline_at = had_prev_ ? std::min(prev_, t) : t;
}

ScopedDeadline::~ScopedDeadline() {
    deadline_set = had_prev_;
    deadline_at = prev_;
}

void check_deadline() {
    if (deadline_set && std::chrono::steady_clock::now() > deadline_at) throw DeadlineExceeded();
}

namespace {
struct Desc {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};
}  // namespace

MPoly MPoly::constant(size_t nvars, const Int& c) {
    MPoly p(nvars);
    if (sgn(c) != 0) p.t_.push_back({Mono(nvars, 0), c});
    return p;
}

MPoly MPoly::var(size_t nvars, size_t i, const Int& c) {
    MPoly p(nvars);
    Mono e(nvars, 0);
    e[i] = 1;
    if (sgn(c) != 0) p.t_.push_back({e, c});
    return p;
}

MPoly MPoly::from_terms(size_t nvars, std::vector<Term> terms) {
    MPoly p(nvars);
    p.t_ = std::move(terms);
    p.canonicalize();
    return p;
}

void MPoly::canonicalize() {
    std::map<Mono, Int, Desc> acc;
    for (auto& t : t_) acc[t.e] += t.c;
    t_.clear();
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) t_.push_back({e, c});
}

int MPoly::total_degree() const {
    int d = 0;
    for (auto& t : t_) d = std::max(d, total(t.e));
    return d;
}

int MPoly::degree_in(size_t v) const {
    int d = 0;
    for (auto& t : t_) d = std::max(d, static_cast<int>(t.e[v]));
    return d;
}

std::vector<char> MPoly::support() const {
    std::vector<char> s(n_, 0);
    for (auto& t : t_)
        for (size_t i = 0; i < n_; ++i)
            if (t.e[i]) s[i] = 1;
    return s;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    std::vector<MPoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    auto& ta = a.terms();
    auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        int c = i == ta.size() ? -1 : j == tb.size() ? 1 : grevlex_cmp(ta[i].e, tb[j].e);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back({tb[j].e, subtract ? Int(-tb[j].c) : tb[j].c});
            ++j;
        } else {
            Int s = subtract ? Int(ta[i].c - tb[j].c) : Int(ta[i].c + tb[j].c);
            if (sgn(s) != 0) out.push_back({ta[i].e, s});
            ++i;
            ++j;
        }
    }
    MPoly r(std::max(a.nvars(), b.nvars()));
    return MPoly::from_terms(r.nvars(), std::move(out));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return merge(a, b, true);
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    size_t n = std::max(a.n_, b.n_);
    if (a.is_zero() || b.is_zero()) return MPoly(n);
    std::map<Mono, Int, Desc> acc;
    Mono e(n);
    for (auto& x : a.t_) {
        check_deadline();
        for (auto& y : b.t_) {
            for (size_t i = 0; i < n; ++i) e[i] = x.e[i] + y.e[i];
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, x.c * y.c);
            else it->second += x.c * y.c;
        }
    }
    MPoly r(n);
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) r.t_.push_back({m, c});
    return r;
}

MPoly operator*(const Int& c, const MPoly& a) {
    if (sgn(c) == 0) return MPoly(a.n_);
    MPoly r = a;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

MPoly MPoly::derivative(size_t v) const {
    std::vector<Term> out;
    for (auto& t : t_) {
        if (t.e[v] == 0) continue;
        Term u = t;
        u.c *= t.e[v];
        --u.e[v];
        out.push_back(std::move(u));
    }
    return from_terms(n_, std::move(out));
}

Int MPoly::content() const {
    Int g = 0;
    for (auto& t : t_) {
        g = gcd(g, t.c);
        if (g == 1) break;
    }
    return g;
}

MPoly MPoly::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    if (sgn(t_.front().c) < 0) g = -g;
    MPoly r = *this;
    for (auto& t : r.t_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& pt) const {
    Rat s = 0;
    for (auto& t : t_) {
        Rat m = Rat(t.c);
        for (size_t i = 0; i < n_; ++i)
            for (int k = 0; k < t.e[i]; ++k) m *= pt[i];
        s += m;
    }
    return s;
}

UPoly MPoly::on_line(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    std::vector<std::vector<UPoly>> pw(n_);
    UPoly r;
    for (auto& t : t_) {
        UPoly m = Rat(t.c);
        for (size_t i = 0; i < n_; ++i) {
            if (!t.e[i]) continue;
            auto& p = pw[i];
            if (p.empty()) p.push_back(Rat(1));
            while (p.size() <= t.e[i]) p.push_back(p.back() * UPoly(std::vector<Rat>{b[i], a[i]}));
            m *= p[t.e[i]];
        }
        r += m;
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(size_t v) const {
    std::vector<MPoly> c(degree_in(v) + 1, MPoly(n_));
    std::vector<std::vector<Term>> parts(c.size());
    for (auto& t : t_) {
        Term u = t;
        u.e[v] = 0;
        parts[t.e[v]].push_back(std::move(u));
    }
    for (size_t d = 0; d < c.size(); ++d) c[d] = from_terms(n_, std::move(parts[d]));
    return c;
}

MPoly MPoly::from_coeffs_in(size_t nvars, size_t v, const std::vector<MPoly>& c) {
    std::vector<Term> out;
    for (size_t d = 0; d < c.size(); ++d)
        for (auto t : c[d].terms()) {
            t.e[v] = static_cast<uint16_t>(d);
            out.push_back(std::move(t));
        }
    return from_terms(nvars, std::move(out));
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (auto& t : t_) {
        if (!first) o << (sgn(t.c) > 0 ? " + " : " - ");
        else if (sgn(t.c) < 0) o << "-";
        first = false;
        Int a = abs(t.c);
        bool unit = total(t.e) > 0 && a == 1;
        if (!unit) o << a.get_str();
        bool star = !unit;
        for (size_t i = 0; i < n_; ++i) {
            if (!t.e[i]) continue;
            if (star) o << "*";
            o << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (t.e[i] > 1) o << "^" << t.e[i];
            star = true;
        }
    }
    return o.str();
}

bool divide_exact(const MPoly& a, const MPoly& b, MPoly& q) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    size_t n = a.nvars();
    q = MPoly(n);
    if (a.is_zero()) return true;
    std::map<Mono, Int, Desc> rem;
    for (auto& t : a.terms()) rem.emplace(t.e, t.c);
    const auto& lb = b.lead();
    std::vector<MPoly::Term> qt;
    Mono e(n);
    while (!rem.empty()) {
        check_deadline();
        auto it = rem.begin();
        for (size_t i = 0; i < n; ++i) {
            if (it->first[i] < lb.e[i]) return false;
            e[i] = it->first[i] - lb.e[i];
        }
        if (!mpz_divisible_p(it->second.get_mpz_t(), lb.c.get_mpz_t())) return false;
        Int c = it->second / lb.c;
        qt.push_back({e, c});
        Mono m(n);
        for (auto& t : b.terms()) {
            for (size_t i = 0; i < n; ++i) m[i] = e[i] + t.e[i];
            auto jt = rem.find(m);
            if (jt == rem.end()) {
                rem.emplace(m, -c * t.c);
            } else {
                jt->second -= c * t.c;
                if (sgn(jt->second) == 0) rem.erase(jt);
            }
        }
    }
    q = MPoly::from_terms(n, std::move(qt));
    return true;
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!divide_exact(a, b, q)) throw std::domain_error("exact_quotient: not divisible");
    return q;
}

namespace {

MPoly normalize_sign(const MPoly& p) {
    if (!p.is_zero() && sgn(p.lead().c) < 0) return -p;
    return p;
}

MPoly content_in(const MPoly& a, size_t v);

// Pseudo-remainder of a by b as polynomials in v.
MPoly prem(const MPoly& a, const MPoly& b, size_t v) {
    auto bc = b.coeffs_in(v);
    int db = static_cast<int>(bc.size()) - 1;
    const MPoly& lb = bc.back();
    MPoly r = a;
    size_t n = a.nvars();
    while (!r.is_zero() && r.degree_in(v) >= db) {
        check_deadline();
        auto rc = r.coeffs_in(v);
        int dr = static_cast<int>(rc.size()) - 1;
        MPoly shift = rc.back();
        std::vector<MPoly::Term> st;
        for (auto t : shift.terms()) {
            t.e[v] = static_cast<uint16_t>(dr - db);
            st.push_back(std::move(t));
        }
        MPoly s = MPoly::from_terms(n, std::move(st));
        r = lb * r - s * b;
    }
    return r;
}

MPoly primitive_in(const MPoly& a, size_t v) {
    MPoly c = content_in(a, v);
    if (c.is_constant()) return a.primitive();
    return exact_quotient(a, c).primitive();
}

// Univariate images used to detect v-free gcds cheaply.
bool gcd_free_of(const MPoly& a, const MPoly& b, size_t v) {
    size_t n = a.nvars();
    auto la = a.coeffs_in(v).back();
    auto lb = b.coeffs_in(v).back();
    std::mt19937_64 rng(0xC0FFEE ^ (a.size() * 131 + b.size()));
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Rat> pt(n);
        for (auto& x : pt) x = Rat(static_cast<long>(rng() % 2001) - 1000);
        if (sgn(la.eval(pt)) == 0 || sgn(lb.eval(pt)) == 0) continue;
        auto uni = [&](const MPoly& p) {
            std::vector<Rat> c;
            for (auto& q : p.coeffs_in(v)) c.push_back(q.eval(pt));
            return UPoly(c);
        };
        return gcd(uni(a), uni(b)).deg() == 0;
    }
    return false;
}

// gcd with a single term: common monomial factor and integer content.
MPoly gcd_with_term(const MPoly& term, const MPoly& b) {
    size_t n = term.nvars();
    Mono e = term.lead().e;
    Int c = abs(term.lead().c);
    for (auto& t : b.terms()) {
        for (size_t i = 0; i < n; ++i) e[i] = std::min(e[i], t.e[i]);
        c = gcd(c, t.c);
    }
    return MPoly::from_terms(n, {{e, c}});
}

MPoly gcd_rec(MPoly a, MPoly b) {
    check_deadline();
    size_t n = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(n, gcd(a.content(), b.content()));
    if (a.size() == 1) return gcd_with_term(a, b);
    if (b.size() == 1) return gcd_with_term(b, a);
    auto sa = a.support(), sb = b.support();
    for (size_t v = 0; v < n; ++v) {
        if (sa[v] && !sb[v]) return gcd_rec(content_in(a, v), b);
        if (sb[v] && !sa[v]) return gcd_rec(a, content_in(b, v));
    }
    bool coprime = true;
    for (size_t v = 0; v < n && coprime; ++v)
        if (sa[v] && !gcd_free_of(a, b, v)) coprime = false;
    if (coprime) return MPoly::constant(n, gcd(a.content(), b.content()));
    size_t v = n;
    int best = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!sa[i]) continue;
        int d = std::max(a.degree_in(i), b.degree_in(i));
        if (v == n || d < best) {
            v = i;
            best = d;
        }
    }
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly c = gcd_rec(ca, cb);
    if (gcd_free_of(a, b, v)) return normalize_sign(c);
    MPoly pa = ca.is_constant() ? a.primitive() : exact_quotient(a, ca).primitive();
    MPoly pb = cb.is_constant() ? b.primitive() : exact_quotient(b, cb).primitive();
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        MPoly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = MPoly::constant(n, 1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    MPoly g = pb.is_constant() ? MPoly::constant(n, 1) : primitive_in(pb, v);
    return normalize_sign(c * g);
}

MPoly content_in(const MPoly& a, size_t v) {
    auto cs = a.coeffs_in(v);
    std::sort(cs.begin(), cs.end(), [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
    MPoly g(a.nvars());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant() && g.content() == 1) return g;
    }
    return g;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return gcd_rec(a, b); }

MPoly squarefree_part(const MPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part of zero");
    if (f.is_constant()) return MPoly::constant(f.nvars(), 1);
    auto sup = f.support();
    MPoly g = f.primitive();
    MPoly fp = g;
    for (size_t v = 0; v < f.nvars(); ++v) {
        if (!sup[v]) continue;
        g = gcd(g, fp.derivative(v));
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return fp;
    return exact_quotient(fp, g).primitive();
}

MPoly det(std::vector<std::vector<MPoly>> m) {
    size_t n = m.size();
    size_t nv = 0;
    for (auto& row : m)
        for (auto& x : row) nv = std::max(nv, x.nvars());
    if (n == 0) return MPoly::constant(nv, 1);
    MPoly prev = MPoly::constant(nv, 1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = n;
        for (size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (p == n || m[i][k].size() < m[p][k].size())) p = i;
        if (p == n) return MPoly(nv);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() && prev.lead().c == 1 ? t : exact_quotient(t, prev);
            }
            m[i][k] = MPoly(nv);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace mcone

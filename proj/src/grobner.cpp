#include "mcone/grobner.hpp"

#include "mcone/lie_action.hpp"
#include "mcone/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace mcone {

namespace {

using Clock = std::chrono::steady_clock;

struct Choice {
    int index;
    int root;  // -1 for the identity part
};

int perm_sign(std::vector<int> a) {
    int s = 1;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) s = -s;
    return s;
}

}  // namespace

FiberSystem fiber_system(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    WeightIndex wi(spec);
    FiberSystem fs;
    fs.roots = inversion_set(w);
    int n = wi.size();
    std::vector<long> lev(n);
    std::vector<int> eq_of(n, -1);
    for (int i = 0; i < n; ++i) {
        lev[i] = pairing(tau, wi.weights()[i].coords);
        if (lev[i] <= 0) {
            fs.x_weights.push_back(i);
        } else {
            eq_of[i] = static_cast<int>(fs.eq_weights.size());
            fs.eq_weights.push_back(i);
        }
    }
    size_t nv = fs.nv(), nvar = nv + fs.nx();
    // choices[k][a]: image of e_a under the block-k factor of phi(v)
    std::vector<std::vector<std::vector<Choice>>> choices(spec.s());
    for (int k = 0; k < spec.s(); ++k) {
        choices[k].resize(spec.dims[k]);
        for (int a = 0; a < spec.dims[k]; ++a) choices[k][a].push_back({a, -1});
    }
    for (int r = 0; r < static_cast<int>(nv); ++r) {
        auto& b = fs.roots[r];
        choices[b.k][b.j].push_back({b.i, r});
    }
    std::vector<std::vector<MPoly::Term>> terms(fs.eq_weights.size());
    auto emit = [&](const std::vector<int>& target, long coef, const std::vector<int>& used, size_t xpos) {
        int t = wi.find(target);
        if (t < 0 || eq_of[t] < 0) return;
        Mono e(nvar, 0);
        for (int r : used)
            if (r >= 0) ++e[r];
        ++e[nv + xpos];
        terms[eq_of[t]].push_back({e, Int(coef)});
    };
    for (size_t p = 0; p < fs.x_weights.size(); ++p) {
        const auto& idx = wi.weights()[fs.x_weights[p]].index;
        size_t slots = idx.size();
        std::vector<int> pick(slots), used(slots);
        auto block_of = [&](size_t t) { return spec.kind == Kind::Kronecker ? static_cast<int>(t) : 0; };
        auto rec = [&](auto&& self, size_t t) -> void {
            if (t == slots) {
                if (spec.kind == Kind::Kronecker) {
                    emit(pick, 1, used, p);
                    return;
                }
                std::vector<int> sorted = pick;
                std::sort(sorted.begin(), sorted.end());
                long coef = 1;
                if (spec.kind == Kind::Fermion) {
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
                    coef = perm_sign(pick);
                }
                emit(sorted, coef, used, p);
                return;
            }
            for (auto& c : choices[block_of(t)][idx[t]]) {
                pick[t] = c.index;
                used[t] = c.root;
                self(self, t + 1);
            }
        };
        rec(rec, 0);
    }
    for (auto& t : terms) fs.equations.push_back(MPoly::from_terms(nvar, std::move(t)));
    return fs;
}

std::vector<MPoly> specialize(const FiberSystem& fs, const std::vector<Int>& x) {
    size_t nv = fs.nv();
    std::vector<MPoly> out;
    for (auto& f : fs.equations) {
        std::vector<MPoly::Term> t;
        for (auto& term : f.terms()) {
            Int c = term.c;
            for (size_t q = 0; q < fs.nx(); ++q)
                for (int e = 0; e < term.e[nv + q]; ++e) c *= x[q];
            t.push_back({Mono(term.e.begin(), term.e.begin() + nv), c});
        }
        out.push_back(MPoly::from_terms(nv, std::move(t)));
    }
    return out;
}

std::vector<size_t> torus_slice(const RepSpec& spec, const FiberSystem& fs) {
    WeightIndex wi(spec);
    std::vector<char> used(fs.nx(), 0);
    for (auto& f : fs.equations)
        for (auto& t : f.terms())
            for (size_t q = 0; q < fs.nx(); ++q)
                if (t.e[fs.nv() + q]) used[q] = 1;
    Echelon span(spec.n());
    std::vector<size_t> out;
    for (size_t q = 0; q < fs.nx(); ++q)
        if (used[q] && span.add(wi.weights()[fs.x_weights[q]].coords)) out.push_back(q);
    return out;
}

std::vector<MPoly> generic_slice_equations(const RepSpec& spec, const FiberSystem& fs) {
    auto slice = torus_slice(spec, fs);
    size_t nv = fs.nv();
    std::vector<int> param(fs.nx(), -1);
    std::vector<char> fixed(fs.nx(), 0), used(fs.nx(), 0);
    for (size_t q : slice) fixed[q] = 1;
    for (auto& f : fs.equations)
        for (auto& t : f.terms())
            for (size_t q = 0; q < fs.nx(); ++q)
                if (t.e[nv + q]) used[q] = 1;
    size_t np = 0;
    for (size_t q = 0; q < fs.nx(); ++q)
        if (used[q] && !fixed[q]) param[q] = static_cast<int>(np++);
    std::vector<MPoly> out;
    for (auto& f : fs.equations) {
        std::vector<MPoly::Term> ts;
        for (auto& t : f.terms()) {
            Mono e(nv + np, 0);
            std::copy(t.e.begin(), t.e.begin() + nv, e.begin());
            for (size_t q = 0; q < fs.nx(); ++q)
                if (param[q] >= 0) e[nv + param[q]] = t.e[nv + q];
            ts.push_back({e, t.c});
        }
        out.push_back(MPoly::from_terms(nv + np, std::move(ts)));
    }
    return out;
}

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}
bool coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

struct RatField {
    using C = Rat;
    static bool zero(const C& c) { return sgn(c) == 0; }
    static void cofactors(const C& lead, const C& c, C& a, C& b) {
        a = 1;
        b = c / lead;
    }
    template <class P>
    static void normalize(P& p) {
        if (p.t.empty()) return;
        C inv = Rat(1) / p.t.front().second;
        for (auto& t : p.t) t.second *= inv;
    }
};

// Q(x) through fraction-free arithmetic over Z[x].
struct ParamRing {
    using C = MPoly;
    static bool zero(const C& c) { return c.is_zero(); }
    static void cofactors(const C& lead, const C& c, C& a, C& b) {
        C h = gcd(lead, c);
        a = exact_quotient(lead, h);
        b = exact_quotient(c, h);
    }
    template <class P>
    static void normalize(P& p) {
        if (p.t.empty()) return;
        C g = p.t.front().second;
        for (size_t i = 1; i < p.t.size() && !(g.is_constant() && abs(g.lead().c) == 1); ++i)
            g = gcd(g, p.t[i].second);
        if (!(g.is_constant() && abs(g.lead().c) == 1))
            for (auto& t : p.t) t.second = exact_quotient(t.second, g);
        if (sgn(p.t.front().second.lead().c) < 0)
            for (auto& t : p.t) t.second = -t.second;
    }
};

template <class R>
struct GPoly {
    std::vector<std::pair<Mono, typename R::C>> t;  // decreasing grevlex
    int sugar = 0;
};

template <class R>
class Buchberger {
public:
    using C = typename R::C;
    using P = GPoly<R>;

    Buchberger(size_t nvars, Clock::time_point deadline, GrobnerStats* st)
        : n_(nvars), deadline_(deadline), st_(st), have_(nvars, 0) {}

    GrobnerVerdict run(std::vector<P> input) {
        ScopedDeadline guard(deadline_);
        try {
            if (n_ == 0) return GrobnerVerdict::Birational;
            for (auto& f : input) {
                if (f.t.empty()) continue;
                if (add(reduce(std::move(f)))) return GrobnerVerdict::Birational;
            }
            while (!pending_.empty()) {
                auto it = std::min_element(pending_.begin(), pending_.end(), [](const Pair& a, const Pair& b) {
                    if (a.sugar != b.sugar) return a.sugar < b.sugar;
                    return grevlex_cmp(a.lcm, b.lcm) < 0;
                });
                Pair pr = *it;
                pending_.erase(it);
                pending_set_.erase({pr.i, pr.j});
                if (st_) ++st_->pairs;
                tick();
                if (coprime(G_[pr.i].t.front().first, G_[pr.j].t.front().first)) continue;
                if (chain(pr)) continue;
                if (add(reduce(spoly(pr)))) return GrobnerVerdict::Birational;
            }
        } catch (const DeadlineExceeded&) {
            if (st_) st_->timed_out = true;
            return GrobnerVerdict::Inconclusive;
        }
        return covered_ == n_ ? GrobnerVerdict::Birational : GrobnerVerdict::NotBirational;
    }

private:
    struct Pair {
        int i, j;
        Mono lcm;
        int sugar;
    };

    void tick() { check_deadline(); }

    // a f - b (m g)
    P axpy(const P& f, const C& a, const C& b, const Mono& m, const P& g) const {
        P r;
        r.t.reserve(f.t.size() + g.t.size());
        size_t i = 0, j = 0;
        while (i < f.t.size() || j < g.t.size()) {
            if (j == g.t.size()) {
                r.t.push_back({f.t[i].first, a * f.t[i].second});
                ++i;
                continue;
            }
            Mono gm = mono_mul(g.t[j].first, m);
            int c = i == f.t.size() ? -1 : grevlex_cmp(f.t[i].first, gm);
            if (c > 0) {
                r.t.push_back({f.t[i].first, a * f.t[i].second});
                ++i;
            } else if (c < 0) {
                r.t.push_back({std::move(gm), -(b * g.t[j].second)});
                ++j;
            } else {
                C v = a * f.t[i].second - b * g.t[j].second;
                if (!R::zero(v)) r.t.push_back({std::move(gm), std::move(v)});
                ++i;
                ++j;
            }
        }
        r.sugar = std::max(f.sugar, g.sugar + MPoly::total(m));
        return r;
    }

    // Head reduction only: the verdict reads leading monomials.
    P reduce(P f) {
        const size_t p = 0;
        long steps = 0;
        while (p < f.t.size()) {
            const Mono& m = f.t[p].first;
            const P* div = nullptr;
            for (auto& g : G_)
                if (mono_divides(g.t.front().first, m)) {
                    div = &g;
                    break;
                }
            if (!div) break;
            C a, b;
            R::cofactors(div->t.front().second, f.t[p].second, a, b);
            f = axpy(f, a, b, mono_div(m, div->t.front().first), *div);
            if (st_) ++st_->reductions;
            if ((++steps & 15) == 0) {
                tick();
                if constexpr (std::is_same_v<R, ParamRing>) R::normalize(f);
            }
        }
        R::normalize(f);
        return f;
    }

    P spoly(const Pair& pr) const {
        const P& f = G_[pr.i];
        const P& g = G_[pr.j];
        C a, b;
        R::cofactors(f.t.front().second, g.t.front().second, a, b);
        P fl;
        Mono mf = mono_div(pr.lcm, f.t.front().first), mg = mono_div(pr.lcm, g.t.front().first);
        for (auto& t : f.t) fl.t.push_back({mono_mul(t.first, mf), t.second});
        fl.sugar = f.sugar + MPoly::total(mf);
        return axpy(fl, b, a, mg, g);
    }

    bool chain(const Pair& pr) const {
        for (size_t k = 0; k < G_.size(); ++k) {
            int kk = static_cast<int>(k);
            if (kk == pr.i || kk == pr.j) continue;
            if (!mono_divides(G_[k].t.front().first, pr.lcm)) continue;
            auto key = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            if (!pending_set_.count(key(pr.i, kk)) && !pending_set_.count(key(pr.j, kk))) return true;
        }
        return false;
    }

    // True once every variable is a leading monomial.
    bool add(P h) {
        if (h.t.empty()) return false;
        const Mono& lm = h.t.front().first;
        int deg = MPoly::total(lm);
        if (deg == 0) throw std::logic_error("fiber ideal contains a unit");
        if (deg == 1)
            for (size_t v = 0; v < n_; ++v)
                if (lm[v] && !have_[v]) {
                    have_[v] = 1;
                    ++covered_;
                }
        int idx = static_cast<int>(G_.size());
        G_.push_back(std::move(h));
        if (st_) st_->basis = G_.size();
        if (covered_ == n_) return true;
        for (int i = 0; i < idx; ++i) {
            Mono L = mono_lcm(G_[i].t.front().first, G_[idx].t.front().first);
            int s = std::max(G_[i].sugar + MPoly::total(mono_div(L, G_[i].t.front().first)),
                             G_[idx].sugar + MPoly::total(mono_div(L, G_[idx].t.front().first)));
            pending_.push_back({i, idx, L, s});
            pending_set_.insert({i, idx});
        }
        return false;
    }

    size_t n_;
    Clock::time_point deadline_;
    GrobnerStats* st_;
    std::vector<P> G_;
    std::vector<Pair> pending_;
    std::set<std::pair<int, int>> pending_set_;
    std::vector<char> have_;
    size_t covered_ = 0;
};

Clock::time_point deadline_after(double s) {
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
}

}  // namespace

GrobnerVerdict maximal_at_origin(const std::vector<MPoly>& f, size_t nvars, double budget_s, GrobnerStats* stats) {
    std::vector<GPoly<RatField>> in;
    for (auto& p : f) {
        GPoly<RatField> g;
        for (auto& t : p.terms()) g.t.push_back({Mono(t.e.begin(), t.e.begin() + nvars), Rat(t.c)});
        g.sugar = p.total_degree();
        RatField::normalize(g);
        in.push_back(std::move(g));
    }
    Buchberger<RatField> b(nvars, deadline_after(budget_s), stats);
    return b.run(std::move(in));
}

GrobnerVerdict maximal_at_origin_generic(const std::vector<MPoly>& f, size_t nv, double budget_s,
                                         GrobnerStats* stats) {
    auto deadline = deadline_after(budget_s);
    ScopedDeadline guard(deadline);
    std::vector<GPoly<ParamRing>> in;
    for (auto& p : f) {
        size_t nx = p.nvars() - nv;
        std::map<Mono, std::vector<MPoly::Term>, std::function<bool(const Mono&, const Mono&)>> acc(
            [](const Mono& a, const Mono& b) { return grevlex_cmp(a, b) > 0; });
        for (auto& t : p.terms())
            acc[Mono(t.e.begin(), t.e.begin() + nv)].push_back({Mono(t.e.begin() + nv, t.e.end()), t.c});
        GPoly<ParamRing> g;
        for (auto& [m, ts] : acc) g.t.push_back({m, MPoly::from_terms(nx, ts)});
        int sugar = 0;
        for (auto& [m, c] : g.t) sugar = std::max(sugar, MPoly::total(m));
        g.sugar = sugar;
        try {
            ParamRing::normalize(g);
        } catch (const DeadlineExceeded&) {
            if (stats) stats->timed_out = true;
            return GrobnerVerdict::Inconclusive;
        }
        in.push_back(std::move(g));
    }
    Buchberger<ParamRing> b(nv, deadline, stats);
    return b.run(std::move(in));
}

GrobnerVerdict grobner_verdict(const RepSpec& spec, const Vec& tau, const BlockPerm& w, const GrobnerOptions& opt,
                               GrobnerStats* stats) {
    auto fs = fiber_system(spec, tau, w);
    if (opt.mode == GrobnerMode::Generic)
        return maximal_at_origin_generic(generic_slice_equations(spec, fs), fs.nv(), opt.budget_s, stats);
    std::mt19937_64 rng(opt.seed);
    int attempts = opt.confirm_negative ? 2 : 1;
    GrobnerVerdict v = GrobnerVerdict::Inconclusive;
    for (int a = 0; a < attempts; ++a) {
        std::vector<Int> x(fs.nx());
        for (auto& c : x) c = static_cast<long>(rng() % 2001) - 1000;
        v = maximal_at_origin(specialize(fs, x), fs.nv(), opt.budget_s, stats);
        if (v != GrobnerVerdict::NotBirational) return v;
    }
    return v;
}

}  // namespace mcone

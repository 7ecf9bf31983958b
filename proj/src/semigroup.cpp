#include "mcone/semigroup.hpp"

#include "mcone/linalg.hpp"
#include "mcone/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace mcone {

namespace {

Partition block_partition(const Vec& lambda, int off, int len) {
    Partition p;
    for (int i = 0; i < len; ++i) {
        long x = lambda[off + i];
        if (x < 0 || x > 1000000) return {-1};
        if (i > 0 && x > lambda[off + i - 1]) return {-1};
        if (x > 0) p.push_back(static_cast<int>(x));
    }
    return p;
}

bool valid(const Partition& p) { return p.empty() || p[0] >= 0; }

Partition theta_of(const RepSpec& spec) {
    if (spec.kind == Kind::Fermion) return Partition(spec.r, 1);
    return Partition{spec.r};
}

Vec pad(const Partition& p, int len) {
    Vec v(len, 0);
    for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
    return v;
}

void check_size(const RepSpec& spec, int N) {
    if (N < 0 || N > 10) throw std::invalid_argument("semigroup_points: degree bound outside 0..10");
    bool ok = spec.kind == Kind::Kronecker ? std::all_of(spec.dims.begin(), spec.dims.end(), [](int d) { return d <= 4; })
                                           : spec.dims[0] <= 6;
    if (!ok) throw std::invalid_argument("semigroup_points: representation too large for " + spec.name());
}

}  // namespace

int semigroup_degree(const RepSpec& spec, const Vec& lambda) {
    if (static_cast<int>(lambda.size()) != spec.n()) return -1;
    if (spec.kind == Kind::Kronecker) {
        long deg = -1;
        for (int k = 0; k < spec.s(); ++k) {
            long t = 0;
            for (int i = 0; i < spec.dims[k]; ++i) t += lambda[spec.offset(k) + i];
            if (deg >= 0 && t != deg) return -1;
            deg = t;
        }
        return static_cast<int>(deg);
    }
    long t = 0;
    for (long x : lambda) t += x;
    if (t < 0 || t % spec.r) return -1;
    return static_cast<int>(t / spec.r);
}

bool in_semigroup(const RepSpec& spec, const Vec& lambda) {
    int N = semigroup_degree(spec, lambda);
    if (N < 0) return false;
    if (spec.kind == Kind::Kronecker) {
        std::vector<Partition> ls;
        for (int k = 0; k < spec.s(); ++k) {
            auto p = block_partition(lambda, spec.offset(k), spec.dims[k]);
            if (!valid(p)) return false;
            ls.push_back(std::move(p));
        }
        if (N == 0) return true;
        return kronecker_coefficient(ls) != 0;
    }
    auto p = block_partition(lambda, 0, spec.n());
    if (!valid(p)) return false;
    return plethysm_coefficient(Partition{N}, theta_of(spec), p) != 0;
}

std::vector<Vec> semigroup_points(const RepSpec& spec, int N) {
    check_size(spec, N);
    std::vector<Vec> out;
    for (int deg = 1; deg <= N; ++deg) {
        if (spec.kind == Kind::Kronecker) {
            std::vector<std::vector<Partition>> ps;
            for (int d : spec.dims) ps.push_back(partitions(deg, d));
            std::vector<Partition> cur;
            std::function<void(int)> rec = [&](int k) {
                if (k == spec.s()) {
                    if (kronecker_coefficient(cur) == 0) return;
                    Vec v;
                    for (int q = 0; q < spec.s(); ++q) {
                        Vec b = pad(cur[q], spec.dims[q]);
                        v.insert(v.end(), b.begin(), b.end());
                    }
                    out.push_back(std::move(v));
                    return;
                }
                for (const auto& p : ps[k]) {
                    cur.push_back(p);
                    rec(k + 1);
                    cur.pop_back();
                }
            };
            rec(0);
        } else {
            int max_part = spec.kind == Kind::Fermion ? deg : -1;
            for (const auto& p : partitions(deg * spec.r, spec.n(), max_part))
                if (plethysm_coefficient(Partition{deg}, theta_of(spec), p) != 0) out.push_back(pad(p, spec.n()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vec> random_semigroup_points(const RepSpec& spec, size_t count, int base_degree, uint64_t seed) {
    auto base = semigroup_points(spec, base_degree);
    if (base.empty()) throw std::invalid_argument("random_semigroup_points: no points");
    std::mt19937_64 rng(seed);
    std::vector<Vec> out;
    out.reserve(count);
    for (size_t c = 0; c < count; ++c) {
        int terms = 1 + static_cast<int>(rng() % 3);
        Vec v(spec.n(), 0);
        for (int t = 0; t < terms; ++t) {
            const Vec& b = base[rng() % base.size()];
            for (int i = 0; i < spec.n(); ++i) v[i] += b[i];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Int> ConeHull::restrict(const Vec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("ConeHull::restrict: dimension mismatch");
    std::vector<Rat> vals(basis.size());
    bool nonzero = false;
    for (size_t i = 0; i < basis.size(); ++i) {
        Rat s = 0;
        for (size_t j = 0; j < ambient; ++j) s += basis[i][j] * v[j];
        vals[i] = s;
        if (sgn(s)) nonzero = true;
    }
    if (!nonzero) return {};
    return primitive_integer(vals);
}

bool ConeHull::is_facet(const Vec& v) const {
    auto r = restrict(v);
    return !r.empty() && std::binary_search(facets.begin(), facets.end(), r);
}

Vec ConeHull::ambient_form(const std::vector<Int>& facet) const {
    Vec v(ambient, 0);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = facet[i].get_si();
    return v;
}

ConeHull hull_facets(const std::vector<Vec>& points, int expected_dim) {
    if (points.empty()) throw std::invalid_argument("hull_facets: no points");
    ConeHull h;
    h.ambient = points[0].size();
    Mat<Rat> m;
    for (const auto& p : points) {
        if (p.size() != h.ambient) throw std::invalid_argument("hull_facets: dimension mismatch");
        std::vector<Rat> row(p.begin(), p.end());
        m.push_back(std::move(row));
    }
    auto piv = rref(m);
    h.pivots = piv;
    for (size_t i = 0; i < piv.size(); ++i) h.basis.push_back(m[i]);
    size_t dim = piv.size();
    if (dim == 0) throw std::invalid_argument("hull_facets: points span the zero space");
    if (expected_dim >= 0 && static_cast<int>(dim) != expected_dim)
        throw std::invalid_argument("hull_facets: points span " + std::to_string(dim) + " dimensions, expected " +
                                    std::to_string(expected_dim));

    // coordinates in the basis are the pivot entries
    std::set<std::vector<Int>> uniq;
    for (const auto& p : points) {
        std::vector<Rat> q(dim);
        bool nz = false;
        for (size_t i = 0; i < dim; ++i) {
            q[i] = p[piv[i]];
            if (p[piv[i]]) nz = true;
        }
        if (nz) uniq.insert(primitive_integer(q));
    }
    std::vector<std::vector<Int>> cons(uniq.begin(), uniq.end());

    auto dot = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (size_t i = 0; i < dim; ++i) s += a[i] * b[i];
        return s;
    };

    // start from dim independent constraints: rays r_j with <q_i, r_j> = -delta_ij
    std::vector<size_t> order, rest;
    {
        Mat<Rat> acc;
        for (size_t c = 0; c < cons.size(); ++c) {
            std::vector<Rat> row(cons[c].begin(), cons[c].end());
            acc.push_back(row);
            if (order.size() < dim && rank_field(acc) == order.size() + 1)
                order.push_back(c);
            else {
                acc.pop_back();
                rest.push_back(c);
            }
        }
    }
    RatMatrix q0(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) q0(i, j) = Rat(cons[order[i]][j]);

    struct Ray {
        std::vector<Int> v;
        std::vector<char> tight;
    };
    std::vector<Ray> rays;
    for (size_t j = 0; j < dim; ++j) {
        // solve q0 r = -e_j
        Mat<Rat> aug(dim, std::vector<Rat>(dim + 1));
        for (size_t i = 0; i < dim; ++i) {
            for (size_t k = 0; k < dim; ++k) aug[i][k] = q0(i, k);
            aug[i][dim] = i == j ? Rat(-1) : Rat(0);
        }
        rref(aug);
        std::vector<Rat> r(dim);
        for (size_t i = 0; i < dim; ++i) r[i] = aug[i][dim];
        Ray ray{primitive_integer(r), std::vector<char>(cons.size(), 0)};
        for (size_t i = 0; i < dim; ++i)
            if (i != j) ray.tight[order[i]] = 1;
        rays.push_back(std::move(ray));
    }

    for (size_t c : rest) {
        std::vector<Int> val(rays.size());
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(cons[c], rays[i].v);
            int sg = sgn(val[i]);
            if (sg > 0) pos.push_back(i);
            else if (sg < 0) neg.push_back(i);
            else rays[i].tight[c] = 1;
        }
        if (pos.empty()) continue;
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (sgn(val[i]) <= 0) next.push_back(rays[i]);
        for (size_t a : pos)
            for (size_t b : neg) {
                std::vector<char> z(cons.size(), 0);
                size_t nz = 0;
                for (size_t k = 0; k < cons.size(); ++k)
                    if (rays[a].tight[k] && rays[b].tight[k]) {
                        z[k] = 1;
                        ++nz;
                    }
                if (nz + 2 < dim) continue;
                bool adjacent = true;
                for (size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == a || o == b) continue;
                    bool sup = true;
                    for (size_t k = 0; k < cons.size() && sup; ++k)
                        if (z[k] && !rays[o].tight[k]) sup = false;
                    if (sup) adjacent = false;
                }
                if (!adjacent) continue;
                // combination vanishing on constraint c
                std::vector<Rat> w(dim);
                Int pa = val[a], nb = -val[b];
                for (size_t i = 0; i < dim; ++i) w[i] = Rat(nb * rays[a].v[i] + pa * rays[b].v[i]);
                Ray ray{primitive_integer(w), z};
                ray.tight[c] = 1;
                next.push_back(std::move(ray));
            }
        rays = std::move(next);
    }
    for (auto& r : rays) h.facets.push_back(r.v);
    std::sort(h.facets.begin(), h.facets.end());
    h.facets.erase(std::unique(h.facets.begin(), h.facets.end()), h.facets.end());
    return h;
}

}  // namespace mcone

#include "mcone/birationality.hpp"

#include "mcone/weyl_search.hpp"

#include <memory>
#include <random>

namespace mcone {

std::vector<BoundaryDivisor> boundary_betas(const RepSpec& spec, const Vec& tau, const BlockPerm& w) {
    std::vector<BoundaryDivisor> out;
    int lw = length(w);
    for (int k = 0; k < spec.s(); ++k) {
        int d = spec.dims[k];
        for (int a = 0; a < d; ++a)
            for (int b = a + 2; b < d; ++b) {
                BlockPerm v = w;
                for (auto& x : v[k])
                    if (x == a)
                        x = b;
                    else if (x == b)
                        x = a;
                if (length(v) != lw - 1 || !in_WP(spec, tau, v)) continue;
                out.push_back({Root{k, a, b}, std::move(v), false});
            }
    }
    return out;
}

namespace {

long draw(std::mt19937_64& rng, long bound) { return static_cast<long>(rng() % (2 * bound + 1)) - bound; }

}  // namespace

bool boundary_contracted(const RepSpec& spec, const Vec& tau, const BlockPerm& w, const Root& beta, uint64_t seed,
                         int samples) {
    WeightIndex wi(spec);
    BlockPerm v = w;
    for (auto& x : v[beta.k])
        if (x == beta.i)
            x = beta.j;
        else if (x == beta.j)
            x = beta.i;
    auto tm = tangent_map(wi, tau, v);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Int> m0(wi.size(), Int(0));
        for (int i = 0; i < wi.size(); ++i)
            if (pairing(tau, wi.weights()[i].coords) <= 0) m0[i] = draw(rng, 10000);
        if (rank_bareiss(positive_matrix<Int>(tm, m0, Int(0))) == tm.roots.size()) return false;
    }
    return true;
}

RamificationInstance ram0_on_line(const TangentMap& tm, const MPoly& J, uint64_t seed) {
    RamificationInstance inst;
    inst.J = J;
    size_t nv = tm.zero_weights.size();
    size_t n = tm.var_of.size();
    std::mt19937_64 rng(seed);
    inst.a.assign(n, Int(0));
    inst.b.assign(n, Int(0));
    bool nonzero = false;
    auto fill = [&](int i) {
        inst.a[i] = draw(rng, 1000);
        inst.b[i] = draw(rng, 1000);
        nonzero = nonzero || !is_zero(inst.a[i]);
    };
    for (int i : tm.zero_weights) fill(i);
    for (int i : tm.neg_weights) fill(i);
    if (!nonzero) throw DegenerateLine("zero direction");

    if (J.is_constant()) {
        inst.Jbar = MPoly::constant(nv, 1);
        inst.J_line = UPoly(Rat(J.is_zero() ? 0 : 1));
        inst.contracted = !J.is_zero();
        return inst;
    }
    std::vector<Rat> la(nv), lb(nv);
    for (size_t v = 0; v < nv; ++v) {
        la[v] = Rat(inst.a[tm.zero_weights[v]]);
        lb[v] = Rat(inst.b[tm.zero_weights[v]]);
    }
    inst.Jbar = squarefree_part(J);
    inst.J_line = J.on_line(la, lb);
    if (inst.J_line.deg() != J.total_degree()) throw DegenerateLine("J drops degree on the line");
    UPoly sf = squarefree_part(inst.J_line);
    if (sf.deg() != inst.Jbar.total_degree()) throw DegenerateLine("line is tangent to the ramification locus");

    std::vector<UPoly> grad(nv);
    for (size_t v = 0; v < nv; ++v) grad[v] = inst.Jbar.derivative(v).on_line(la, lb);

    inst.contracted = true;
    for (auto& [delta, mult] : factor(sf)) {
        (void)mult;
        FactorData fd;
        fd.delta = delta;
        auto K = std::make_shared<const NumberField>(delta);
        NFElem zero(K, Rat(0)), one(K, Rat(1));
        std::vector<NFElem> x(n, zero);
        for (size_t i = 0; i < n; ++i)
            if (!is_zero(inst.a[i]) || !is_zero(inst.b[i]))
                x[i] = NFElem(K, UPoly(std::vector<Rat>{Rat(inst.b[i]), Rat(inst.a[i])}));
        auto A = positive_matrix<NFElem>(tm, x, zero);
        auto ker = kernel_field<NFElem>(A, tm.roots.size(), one);
        fd.corank = static_cast<int>(ker.size());
        if (fd.corank == 0) throw DegenerateLine("factor of J o phi with invertible A");
        if (fd.corank == 1) {
            auto B = zero_level_matrix<NFElem>(tm, x, zero);
            NFElem acc = zero;
            for (size_t v = 0; v < nv; ++v) {
                if (grad[v].is_zero()) continue;
                NFElem bu = zero;
                for (size_t c = 0; c < ker[0].size(); ++c)
                    if (!B[v][c].zero() && !ker[0][c].zero()) bu = bu + B[v][c] * ker[0][c];
                if (!bu.zero()) acc = acc - NFElem(K, grad[v]) * bu;
            }
            fd.passes = acc.zero();
        }
        inst.contracted = inst.contracted && fd.passes;
        inst.factors.push_back(std::move(fd));
    }
    return inst;
}

bool ram0_contracted(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                     const std::optional<MPoly>& J, int retries) {
    WeightIndex wi(spec);
    auto tm = tangent_map(wi, tau, w);
    MPoly j = J ? *J : jacobian_J(tm);
    if (j.is_zero()) throw std::invalid_argument("ram0_contracted: pi is not dominant");
    for (int r = 0; r < retries; ++r) {
        try {
            return ram0_on_line(tm, j, seed + 1000003ULL * r).contracted;
        } catch (const DegenerateLine&) {
        }
    }
    throw DegenerateLine("no generic line found");
}

BirationalityResult decide_birationality(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed,
                                         const std::optional<MPoly>& J) {
    BirationalityResult res;
    res.boundary = boundary_betas(spec, tau, w);
    for (size_t i = 0; i < res.boundary.size(); ++i) {
        auto& bd = res.boundary[i];
        bd.contracted = boundary_contracted(spec, tau, w, bd.beta, seed + 31 * i);
        if (!bd.contracted) {
            res.boundary_rejected = true;
            return res;
        }
    }
    res.birational = ram0_contracted(spec, tau, w, seed, J);
    return res;
}

bool is_birational(const RepSpec& spec, const Vec& tau, const BlockPerm& w, uint64_t seed) {
    return decide_birationality(spec, tau, w, seed).birational;
}

}  // namespace mcone

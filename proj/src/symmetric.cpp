#include "mcone/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mcone {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

namespace {

void gen_partitions(int n, int max_len, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, max_len - 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    gen_partitions(n, max_len < 0 ? n : max_len, max_part < 0 ? n : max_part, cur, out);
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream o;
    o << "(";
    for (size_t i = 0; i < p.size(); ++i) o << (i ? "," : "") << p[i];
    o << ")";
    return o.str();
}

namespace {

// Fills nu/lambda in reading order (rows top to bottom, right to left).
struct LRCounter {
    const Partition& nu;
    const Partition& lambda;
    const Partition& mu;
    std::vector<std::vector<int>> T;
    std::vector<int> used;
    long count = 0;

    LRCounter(const Partition& n, const Partition& l, const Partition& m) : nu(n), lambda(l), mu(m) {
        T.resize(nu.size());
        for (size_t r = 0; r < nu.size(); ++r) T[r].assign(nu[r], 0);
        used.assign(mu.size() + 1, 0);
    }
    int lam(size_t r) const { return r < lambda.size() ? lambda[r] : 0; }

    void fill(size_t r, int c) {
        if (r == nu.size()) {
            ++count;
            return;
        }
        if (c < lam(r)) {
            fill(r + 1, r + 1 < nu.size() ? nu[r + 1] - 1 : 0);
            return;
        }
        int hi = static_cast<int>(mu.size());
        if (c + 1 < nu[r]) hi = std::min(hi, T[r][c + 1]);
        int lo = 1;
        if (r > 0 && c < nu[r - 1] && c >= lam(r - 1)) lo = T[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= mu[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            T[r][c] = v;
            ++used[v];
            if (c == 0)
                fill(r + 1, r + 1 < nu.size() ? nu[r + 1] - 1 : 0);
            else
                fill(r, c - 1);
            --used[v];
        }
        T[r][c] = 0;
    }
};

using PKey = std::pair<Partition, Partition>;

}  // namespace

Int lr_coefficient(const Partition& nu0, const Partition& lambda0, const Partition& mu0) {
    Partition nu = trim(nu0), lambda = trim(lambda0), mu = trim(mu0);
    if (size(nu) != size(lambda) + size(mu)) return 0;
    if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
    if (mu.empty()) return nu == lambda ? 1 : 0;
    if (lambda.empty()) return nu == mu ? 1 : 0;
    if (size(lambda) < size(mu)) std::swap(lambda, mu);
    thread_local std::map<std::tuple<Partition, Partition, Partition>, Int> memo;
    auto key = std::make_tuple(nu, lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LRCounter lr(nu, lambda, mu);
    if (!nu.empty()) lr.fill(0, nu[0] - 1);
    Int c = lr.count;
    memo.emplace(std::move(key), c);
    return c;
}

Int lr_coefficient(const Partition& nu0, const std::vector<Partition>& lambdas0) {
    Partition nu = trim(nu0);
    std::vector<Partition> lambdas;
    int total = 0;
    for (auto& l : lambdas0) {
        auto t = trim(l);
        total += size(t);
        if (!t.empty()) lambdas.push_back(std::move(t));
    }
    if (total != size(nu)) return 0;
    for (auto& l : lambdas)
        if (!contains(nu, l)) return 0;
    if (lambdas.empty()) return nu.empty() ? 1 : 0;
    if (lambdas.size() == 1) return nu == lambdas[0] ? 1 : 0;
    if (lambdas.size() == 2) return lr_coefficient(nu, lambdas[0], lambdas[1]);
    std::sort(lambdas.begin(), lambdas.end(), [](const Partition& a, const Partition& b) { return size(a) > size(b); });
    // c^nu_{l1 l2 rest} = sum_rho c^rho_{l1 l2} c^nu_{rho rest}
    Partition last = lambdas.back();
    lambdas.pop_back();
    Int sum = 0;
    int rs = total - size(last);
    for (auto& rho : partitions(rs, static_cast<int>(nu.size()), nu.empty() ? 0 : nu[0])) {
        if (!contains(nu, rho)) continue;
        Int c = lr_coefficient(nu, rho, last);
        if (c == 0) continue;
        sum += c * lr_coefficient(rho, lambdas);
    }
    return sum;
}

namespace {

Int character_rec(const Partition& lambda, const Partition& mu, size_t idx) {
    if (idx == mu.size()) return lambda.empty() ? 1 : 0;
    thread_local std::map<PKey, Int> memo;
    PKey key{lambda, Partition(mu.begin() + idx, mu.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = mu[idx];
    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
    Int sum = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[i] - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int j = 0; j < L; ++j)
            if (beta[j] > nb && beta[j] < beta[i]) ++between;
        std::vector<int> b2 = beta;
        b2[i] = nb;
        std::sort(b2.rbegin(), b2.rend());
        Partition nl(L);
        for (int j = 0; j < L; ++j) nl[j] = b2[j] - (L - 1 - j);
        Int c = character_rec(trim(nl), mu, idx + 1);
        if (between % 2) sum -= c;
        else sum += c;
    }
    memo.emplace(std::move(key), sum);
    return sum;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    Partition l = trim(lambda), m = trim(mu);
    if (size(l) != size(m)) return 0;
    std::sort(m.rbegin(), m.rend());
    return character_rec(l, m, 0);
}

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    for (auto [p, m] : mult) {
        for (int i = 0; i < m; ++i) z *= p;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

Int kronecker_coefficient(const std::vector<Partition>& lambdas0) {
    if (lambdas0.empty()) return 1;
    int n = size(trim(lambdas0[0]));
    std::vector<Partition> lambdas;
    for (auto& l : lambdas0) {
        auto t = trim(l);
        if (size(t) != n) return 0;
        if (t.size() <= 1) continue;  // trivial module
        lambdas.push_back(std::move(t));
    }
    if (lambdas.empty()) return 1;
    if (lambdas.size() == 1) return 0;
    if (lambdas.size() == 2) return lambdas[0] == lambdas[1] ? 1 : 0;
    std::sort(lambdas.begin(), lambdas.end());
    thread_local std::map<std::vector<Partition>, Int> memo;
    auto it = memo.find(lambdas);
    if (it != memo.end()) return it->second;
    Rat sum = 0;
    for (auto& mu : partitions(n)) {
        Int prod = 1;
        for (auto& l : lambdas) {
            prod *= character(l, mu);
            if (prod == 0) break;
        }
        if (prod != 0) sum += Rat(prod) / Rat(centralizer_order(mu));
    }
    sum.canonicalize();
    if (sum.get_den() != 1) throw std::logic_error("kronecker_coefficient: non-integral class sum");
    Int g = sum.get_num();
    memo.emplace(lambdas, g);
    return g;
}

namespace {

// Monomial expansion of s_theta in m variables: content -> Kostka number.
std::map<std::vector<int>, long> schur_monomials(const Partition& theta, int m) {
    std::map<std::vector<int>, long> out;
    std::vector<std::vector<int>> T(theta.size());
    for (size_t r = 0; r < theta.size(); ++r) T[r].assign(theta[r], 0);
    std::vector<int> content(m, 0);
    std::function<void(size_t, int)> rec = [&](size_t r, int c) {
        if (r == theta.size()) {
            ++out[content];
            return;
        }
        if (c == theta[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, T[r][c - 1]);
        if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            T[r][c] = v;
            ++content[v - 1];
            rec(r, c + 1);
            --content[v - 1];
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

Int plethysm_coefficient(const Partition& lambda0, const Partition& theta0, const Partition& mu0) {
    Partition lambda = trim(lambda0), theta = trim(theta0), mu = trim(mu0);
    if (size(mu) != size(lambda) * size(theta)) return 0;
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (theta.empty()) return lambda.size() <= 1 ? 1 : 0;
    int m = static_cast<int>(mu.size());
    if (m < static_cast<int>(theta.size())) return 0;
    thread_local std::map<std::tuple<Partition, Partition, Partition>, Int> memo;
    auto key = std::make_tuple(lambda, theta, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<std::pair<std::vector<int>, long>> terms;
    for (auto& [c, k] : schur_monomials(theta, m)) terms.push_back({c, k});
    // [x^target] prod_i p_{rho_i}[s_theta]
    std::map<std::pair<std::vector<int>, Partition>, Int> coef_memo;
    std::function<Int(const std::vector<int>&, const Partition&, size_t)> coef =
        [&](const std::vector<int>& target, const Partition& rho, size_t idx) -> Int {
        if (idx == rho.size()) {
            for (int x : target)
                if (x) return 0;
            return 1;
        }
        auto ck = std::make_pair(target, Partition(rho.begin() + idx, rho.end()));
        auto ci = coef_memo.find(ck);
        if (ci != coef_memo.end()) return ci->second;
        Int s = 0;
        int k = rho[idx];
        for (auto& [c, mult] : terms) {
            std::vector<int> t2 = target;
            bool ok = true;
            for (int q = 0; q < m && ok; ++q) {
                t2[q] -= k * c[q];
                if (t2[q] < 0) ok = false;
            }
            if (ok) s += Int(mult) * coef(t2, rho, idx + 1);
        }
        coef_memo.emplace(std::move(ck), s);
        return s;
    };

    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> targets;
    do {
        std::vector<int> t(m);
        bool ok = true;
        int sign = 1;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (perm[a] > perm[b]) sign = -sign;
        for (int q = 0; q < m && ok; ++q) {
            t[q] = mu[q] + (m - 1 - q) - (m - 1 - perm[q]);
            if (t[q] < 0) ok = false;
        }
        if (ok) targets.push_back({t, sign});
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rat sum = 0;
    for (auto& rho : partitions(size(lambda))) {
        Int chi = character(lambda, rho);
        if (chi == 0) continue;
        Int inner = 0;
        for (auto& [t, sign] : targets) inner += sign * coef(t, rho, 0);
        if (inner != 0) sum += Rat(chi * inner) / Rat(centralizer_order(rho));
    }
    sum.canonicalize();
    if (sum.get_den() != 1) throw std::logic_error("plethysm_coefficient: non-integral class sum");
    Int a = sum.get_num();
    memo.emplace(std::move(key), a);
    return a;
}

}  // namespace mcone

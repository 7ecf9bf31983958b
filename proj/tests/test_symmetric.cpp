#include <doctest.h>

#include "mcone/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

using namespace mcone;

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int hook_dimension(const Partition& l) {
    Int h = 1;
    for (size_t r = 0; r < l.size(); ++r)
        for (int c = 0; c < l[r]; ++c) {
            int arm = l[r] - c - 1, leg = 0;
            for (size_t q = r + 1; q < l.size() && l[q] > c; ++q) ++leg;
            h *= arm + leg + 1;
        }
    return factorial(size(l)) / h;
}

// dim S^lambda(C^m) by the hook-content formula
Int schur_dimension(const Partition& l, int m) {
    Rat d = 1;
    for (size_t r = 0; r < l.size(); ++r)
        for (int c = 0; c < l[r]; ++c) {
            int arm = l[r] - c - 1, leg = 0;
            for (size_t q = r + 1; q < l.size() && l[q] > c; ++q) ++leg;
            d *= Rat(m + c - static_cast<int>(r)) / Rat(arm + leg + 1);
        }
    d.canonicalize();
    return d.get_num();
}

// Number of tabloids of content alpha fixed by the permutation p.
Int fixed_tabloids(const std::vector<int>& alpha, const std::vector<int>& p) {
    for (int a : alpha)
        if (a < 0) return 0;
    int n = static_cast<int>(p.size());
    std::vector<int> cycles;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        cycles.push_back(len);
    }
    // distribute whole cycles into rows of sizes alpha
    std::map<std::pair<size_t, std::vector<int>>, Int> memo;
    std::function<Int(size_t, std::vector<int>&)> rec = [&](size_t c, std::vector<int>& left) -> Int {
        if (c == cycles.size()) return 1;
        auto key = std::make_pair(c, left);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int s = 0;
        for (auto& l : left)
            if (l >= cycles[c]) {
                l -= cycles[c];
                s += rec(c + 1, left);
                l += cycles[c];
            }
        memo[key] = s;
        return s;
    };
    std::vector<int> left = alpha;
    return rec(0, left);
}

// chi^lambda(p) by the determinantal formula over permutation characters.
Int brute_character(const Partition& l, const std::vector<int>& p) {
    int L = static_cast<int>(l.size());
    std::vector<int> s(L);
    std::iota(s.begin(), s.end(), 0);
    Int chi = 0;
    do {
        int sign = 1;
        for (int a = 0; a < L; ++a)
            for (int b = a + 1; b < L; ++b)
                if (s[a] > s[b]) sign = -sign;
        std::vector<int> alpha(L);
        for (int i = 0; i < L; ++i) alpha[i] = l[i] - i + s[i];
        chi += sign * fixed_tabloids(alpha, p);
    } while (std::next_permutation(s.begin(), s.end()));
    return chi;
}

Int brute_kronecker(const std::vector<Partition>& ls) {
    int n = size(ls[0]);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Int sum = 0;
    do {
        Int prod = 1;
        for (auto& l : ls) prod *= brute_character(l, p);
        sum += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum / factorial(n);
}

Partition random_partition(std::mt19937_64& rng, int n) {
    auto all = partitions(n);
    return all[rng() % all.size()];
}

// c^nu_{lambda mu} through induction of characters
Int lr_by_characters(const Partition& nu, const Partition& l, const Partition& m) {
    Rat s = 0;
    for (auto& a : partitions(size(l)))
        for (auto& b : partitions(size(m))) {
            Partition ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            std::sort(ab.rbegin(), ab.rend());
            s += Rat(character(l, a) * character(m, b) * character(nu, ab)) /
                 Rat(centralizer_order(a) * centralizer_order(b));
        }
    s.canonicalize();
    return s.get_num();
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(12).size() == 77);
    CHECK(partitions(6, 2).size() == 4);
    CHECK(partitions(6, 3, 2).size() == 1);
    CHECK(partitions(0).size() == 1);
    CHECK(trim({3, 1, 0, 0}) == Partition{3, 1});
    CHECK(contains({3, 2}, {2, 2}));
    CHECK_FALSE(contains({3, 2}, {1, 1, 1}));
}

TEST_CASE("character values") {
    for (int n = 1; n <= 7; ++n) {
        Int sq = 0;
        for (auto& l : partitions(n)) {
            Int d = character(l, Partition(n, 1));
            CHECK(d == hook_dimension(l));
            sq += d * d;
        }
        CHECK(sq == factorial(n));
        // orthogonality of the rows
        auto ps = partitions(n);
        for (auto& a : ps)
            for (auto& b : ps) {
                Rat s = 0;
                for (auto& mu : ps) s += Rat(character(a, mu) * character(b, mu)) / Rat(centralizer_order(mu));
                CHECK(s == Rat(a == b ? 1 : 0));
            }
    }
    CHECK(character({2, 1}, {3}) == -1);
    CHECK(character({2, 2}, {2, 2}) == 2);
    CHECK(character({3, 1, 1}, {5}) == 1);
}

TEST_CASE("Littlewood-Richardson coefficients") {
    CHECK(lr_coefficient({2}, {1}, {1}) == 1);
    CHECK(lr_coefficient({1, 1}, {1}, {1}) == 1);
    CHECK(lr_coefficient({2, 1}, std::vector<Partition>{{2, 1}}) == 1);
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_coefficient({4, 2}, {2}, {2}) == 0);
    CHECK(lr_coefficient({2, 1}, {1}, {1}) == 0);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        int a = 1 + rng() % 4, b = 1 + rng() % 3;
        auto l = random_partition(rng, a);
        auto m = random_partition(rng, b);
        auto nu = random_partition(rng, a + b);
        CHECK(lr_coefficient(nu, l, m) == lr_by_characters(nu, l, m));
        CHECK(lr_coefficient(nu, l, m) == lr_coefficient(nu, m, l));
    }
    // associativity: s_1^4 contains s_nu with multiplicity f^nu
    for (auto& nu : partitions(4))
        CHECK(lr_coefficient(nu, std::vector<Partition>{{1}, {1}, {1}, {1}}) == hook_dimension(nu));
    CHECK(lr_coefficient({}, std::vector<Partition>{}) == 1);
    CHECK(lr_coefficient({1}, std::vector<Partition>{}) == 0);
}

TEST_CASE("Kronecker coefficients") {
    for (int n = 1; n <= 6; ++n) CHECK(kronecker_coefficient({{n}, {n}, {n}}) == 1);
    CHECK(kronecker_coefficient({{1, 1}, {1, 1}, {2}}) == 1);
    CHECK(kronecker_coefficient({{2, 1}, {2, 1}, {2, 1}}) == 1);
    CHECK(kronecker_coefficient({{2, 2}, {2, 2}, {2, 2}}) == 1);
    CHECK(kronecker_coefficient({{3, 2, 1}, {3, 2, 1}, {3, 2, 1}}) == 5);
    CHECK(kronecker_coefficient({{2}, {1, 1}}) == 0);
    CHECK(kronecker_coefficient({{2}, {2}, {1}}) == 0);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + rng() % 4;
        std::vector<Partition> ls;
        int s = 3 + rng() % 2;
        for (int k = 0; k < s; ++k) ls.push_back(random_partition(rng, n));
        CHECK(kronecker_coefficient(ls) == brute_kronecker(ls));
    }
}

TEST_CASE("plethysm coefficients") {
    // h2[h2] = s4 + s22
    CHECK(plethysm_coefficient({2}, {2}, {4}) == 1);
    CHECK(plethysm_coefficient({2}, {2}, {2, 2}) == 1);
    CHECK(plethysm_coefficient({2}, {2}, {3, 1}) == 0);
    // e2[h2] = s31
    CHECK(plethysm_coefficient({1, 1}, {2}, {3, 1}) == 1);
    // h3[h2] = s6 + s42 + s222
    CHECK(plethysm_coefficient({3}, {2}, {4, 2}) == 1);
    CHECK(plethysm_coefficient({3}, {2}, {2, 2, 2}) == 1);
    CHECK(plethysm_coefficient({3}, {2}, {3, 3}) == 0);
    // h2[e2] = s1111 + s22, e2[e2] = s211
    CHECK(plethysm_coefficient({2}, {1, 1}, {1, 1, 1, 1}) == 1);
    CHECK(plethysm_coefficient({1, 1}, {1, 1}, {2, 1, 1}) == 1);
    CHECK(plethysm_coefficient({2}, {}, {}) == 1);
    CHECK(plethysm_coefficient({1, 1}, {}, {}) == 0);
    // dimensions: sum_mu a(l, theta, mu) dim S^mu C^m = dim S^l(S^theta C^m)
    int m = 3;
    for (auto theta : std::vector<Partition>{{2}, {1, 1}, {2, 1}})
        for (int n = 1; n <= 3; ++n)
            for (auto& l : partitions(n)) {
                Int lhs = 0;
                for (auto& mu : partitions(n * size(theta), m)) lhs += plethysm_coefficient(l, theta, mu) * schur_dimension(mu, m);
                Int dw = schur_dimension(theta, m);
                CHECK(lhs == schur_dimension(l, static_cast<int>(dw.get_si())));
            }
}

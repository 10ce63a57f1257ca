#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "oracle.hpp"
#include "zeon/combinat.hpp"

using namespace zeon;

namespace {

// Count set partitions of {0..n-1} into exactly k blocks via restricted growth strings.
std::int64_t count_partitions(int n, int k) {
    if (n == 0) return k == 0;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::int64_t count = 0;
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == n) {
            if (maxv + 1 == k) ++count;
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            a[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, std::max(maxv, v));
        }
    };
    a[0] = 0;
    rec(1, 0);
    return count;
}

Complex matching_sum(const Matrix& a, bool signed_sum) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0;
    // Each perfect matching appears (n/2)! 2^{n/2} times among the permutations.
    double reps = 1;
    for (std::size_t k = 1; k <= n / 2; ++k) reps *= 2.0 * static_cast<double>(k);
    do {
        Complex term = 1;
        for (std::size_t k = 0; k < n; k += 2) term *= a(perm[k], perm[k + 1]);
        if (signed_sum) {
            int inv = 0;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y) inv += perm[x] > perm[y];
            if (inv % 2) term = -term;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / reps;
}

}  // namespace

TEST(Permanent, Examples) {
    EXPECT_NEAR(std::abs(permanent_ryser(Matrix::identity(4)) - 1.0), 0, 1e-12);
    for (std::size_t n = 1; n <= 6; ++n) {
        Matrix ones(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) ones(r, c) = 1.0;
        double fact = 1;
        for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<double>(k);
        EXPECT_NEAR(permanent_ryser(ones).real(), fact, 1e-9);
    }
    EXPECT_NEAR(std::abs(permanent_ryser(Matrix{{1.0, 2.0}, {3.0, 4.0}}) - 10.0), 0, 1e-12);
}

TEST(Permanent, RandomAgainstPermutationSum) {
    std::mt19937_64 rng(31);
    for (std::size_t n = 1; n <= 7; ++n) {
        const Matrix m = oracle::rand_matrix(rng, n);
        EXPECT_LT(std::abs(permanent_ryser(m) - oracle::permanent(m)), 1e-9);
    }
}

TEST(Matchings, Examples) {
    const Complex a(2.5, -1);
    EXPECT_NEAR(std::abs(pfaffian(Matrix{{0.0, a}, {-a, 0.0}}) - a), 0, 1e-15);
    EXPECT_NEAR(std::abs(hafnian(Matrix{{0.0, 1.0}, {1.0, 0.0}}) - 1.0), 0, 1e-15);
    EXPECT_THROW((void)pfaffian(Matrix::identity(2)), Error);
    EXPECT_THROW((void)hafnian(Matrix{{0.0, 1.0}, {2.0, 0.0}}), Error);
}

TEST(Matchings, RandomAgainstOracles) {
    std::mt19937_64 rng(32);
    for (std::size_t n : {2u, 4u, 6u}) {
        for (int rep = 0; rep < 5; ++rep) {
            Matrix s(n, n), k(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = r + 1; c < n; ++c) {
                    s(r, c) = s(c, r) = oracle::rand_complex(rng);
                    k(r, c) = oracle::rand_complex(rng);
                    k(c, r) = -k(r, c);
                }
            EXPECT_LT(std::abs(hafnian(s) - matching_sum(s, false)), 1e-10);
            EXPECT_LT(std::abs(pfaffian(k) - matching_sum(k, true)), 1e-10);
            const Complex pf = pfaffian(k);
            EXPECT_LT(std::abs(pf * pf - determinant(k)), 1e-9);
        }
    }
    EXPECT_THROW((void)pfaffian(Matrix(3, 3)), Error);
}

TEST(Numbers, Examples) {
    EXPECT_EQ(bell(4), 15);
    EXPECT_EQ(ordered_bell(3), 13);
    EXPECT_EQ(stirling2(3, 2), 3);
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_THROW((void)bell(-1), Error);
}

TEST(Numbers, StirlingAgainstEnumeration) {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), count_partitions(n, k)) << n << "," << k;
}

TEST(Numbers, BellSumsStirling) {
    for (int n = 0; n <= 8; ++n) {
        std::int64_t b = 0, ob = 0, fact = 1;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) fact *= k;
            b += stirling2(n, k);
            ob += fact * stirling2(n, k);
        }
        EXPECT_EQ(bell(n), b);
        EXPECT_EQ(ordered_bell(n), ob);
    }
}

TEST(SymmetricPolys, Identities) {
    const auto s2 = symmetric_polys(Context(2));
    EXPECT_LT(oracle::max_diff(s2.e[1] * s2.e[1], s2.e[2] * 2.0), 1e-14);
    EXPECT_LT(oracle::max_diff(s2.h[2], s2.e[1] * s2.e[1] - s2.e[2]), 1e-14);
    EXPECT_LT(oracle::max_diff(s2.h[2], s2.e[2]), 1e-14);
    for (int n = 1; n <= 5; ++n) {
        const auto s = symmetric_polys(Context(n));
        Zeon fact_ek = Zeon::constant(s.ctx, 1.0);
        for (int k = 1; k <= n; ++k) {
            fact_ek = fact_ek * s.e[1];
            double f = 1;
            for (int j = 2; j <= k; ++j) f *= j;
            EXPECT_LT(oracle::max_diff(fact_ek, s.e[static_cast<std::size_t>(k)] * f), 1e-10);
        }
    }
}

TEST(SymmetricPolys, GeneratingFunctionsInverse) {
    const double t = 0.7;
    const auto s = symmetric_polys(Context(3));
    Zeon ep(s.ctx), hp(s.ctx);
    for (std::size_t k = 0; k < s.e.size(); ++k) {
        ep += s.e[k] * std::pow(-t, static_cast<double>(k));
        hp += s.h[k] * std::pow(t, static_cast<double>(k));
    }
    EXPECT_LT(oracle::max_diff(ep * hp, Zeon::constant(s.ctx, 1.0)), 1e-12);
}

TEST(EulerOperator, ScalesByDegree) {
    std::mt19937_64 rng(2);
    const Zeon f = oracle::rand_zeon(rng, 4);
    const Zeon g = euler_operator(f);
    for (Mask m = 0; m < 16; ++m) EXPECT_LT(std::abs(g[m] - f[m] * static_cast<double>(std::popcount(m))), 1e-14);
}

TEST(Vandermonde, SmallCase) {
    const Context c3(3);
    const std::vector<Zeon> xs{Zeon::constant(c3, 1.0), Zeon::constant(c3, 2.0), Zeon::constant(c3, 4.0)};
    EXPECT_NEAR(vandermonde(xs).body().real(), (2 - 1) * (4 - 1) * (4 - 2), 1e-12);
    const std::vector<Zeon> ys{Zeon::variable(c3, 1), Zeon::variable(c3, 2)};
    EXPECT_LT(oracle::max_diff(vandermonde(ys), Zeon::variable(c3, 2) - Zeon::variable(c3, 1)), 1e-15);
}

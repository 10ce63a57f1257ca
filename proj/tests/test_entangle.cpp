#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zeon/calculus.hpp"
#include "zeon/entangle.hpp"
#include "zeon/hilbert.hpp"
#include "zeon/states.hpp"

using namespace zeon;

namespace {

void expect_near(const Zeon& a, const Zeon& b, double tol = 1e-12) { EXPECT_LT(oracle::max_diff(a, b), tol); }
Zeon mono(Context ctx, std::initializer_list<int> vars, Complex c = 1.0) { return Zeon::monomial(ctx, Subset(vars), c); }

// Product of random factors on the two blocks of a split.
Zeon separable(std::mt19937_64& rng, int n, Mask left) {
    const Context ctx(n);
    Zeon a(ctx), b(ctx);
    for (Mask m = 0; m < ctx.size(); ++m) {
        if ((m & ~left) == 0) a += Zeon::monomial(ctx, Subset::from_mask(m), oracle::rand_complex(rng));
        if ((m & left) == 0) b += Zeon::monomial(ctx, Subset::from_mask(m), oracle::rand_complex(rng));
    }
    return a * b;
}

}  // namespace

TEST(Wronskian, MatchesBruteForce) {
    std::mt19937_64 rng(60);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + rep % 4;
        const Zeon f = oracle::rand_zeon(rng, n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                EXPECT_LT(oracle::max_diff(oracle::coeffs(wronskian(f, i, j)), oracle::wronskian(oracle::coeffs(f), i, j)),
                          1e-12);
    }
}

TEST(Wronskian, TwoVariableExamples) {
    EXPECT_NEAR(wronskian_set(states::w(2)).at(1, 2).w.body().real(), -0.5, 1e-15);
    EXPECT_NEAR(wronskian_set(states::ghz(2)).at(1, 2).w.body().real(), 0.5, 1e-15);
    EXPECT_THROW((void)wronskian_set(states::ghz(5)), Error);
    EXPECT_THROW((void)wronskian_set(Zeon(Context(1))), Error);
}

TEST(Wronskian, ThreeVariableExpansion) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 100; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 3);
        const auto set = wronskian_set(f);
        ASSERT_EQ(set.entries.size(), 3u);
        for (const auto& e : set.entries) {
            const int k = 6 - e.i - e.j;
            EXPECT_LT(std::abs(e.closed_form - e.trace_form), 1e-10);
            EXPECT_LT(std::abs(e.expansion[1] - e.closed_form), 1e-10);
            EXPECT_LT(std::abs(e.expansion[0] - restricted_wronskian(f, k)), 1e-12);
            EXPECT_LT(std::abs(e.derivative_part - derivative_wronskian(f, k)), 1e-12);
            EXPECT_LT(std::abs(htilde(f, k) - e.closed_form), 1e-12);
        }
    }
}

TEST(Wronskian, FourVariableClosedForm) {
    std::mt19937_64 rng(62);
    for (int rep = 0; rep < 100; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 4);
        for (const auto& e : wronskian_set(f).entries) EXPECT_LT(std::abs(e.expansion[3] - e.closed_form), 1e-10);
    }
}

TEST(InvariantH, DualityAndExamples) {
    EXPECT_NEAR(invariant_h(states::ghz(4)).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(invariant_h(states::w(4))), 0, 1e-15);
    EXPECT_NEAR(invariant_h(states::ghz(2)).real(), 0.5, 1e-15);
    std::mt19937_64 rng(63);
    for (int rep = 0; rep < 20; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 2);
        EXPECT_LT(std::abs(invariant_h(f) - wronskian(f, 1, 2).body()), 1e-12);
    }
}

TEST(Hyperdet, Examples) {
    EXPECT_NEAR(hyperdet3(states::ghz(3)).real(), 0.25, 1e-15);
    EXPECT_NEAR(std::abs(hyperdet3(states::w(3))), 0, 1e-15);
    const Context c3(3);
    const Zeon e3 = (Zeon::constant(c3, 1.0) + mono(c3, {1, 2}) + mono(c3, {1, 3}) + mono(c3, {2, 3})) * 0.5;
    const auto p = hyperdet3_paths(e3);
    EXPECT_NEAR(p.direct.real(), 0.25, 1e-15);
    EXPECT_NEAR(p.symmetric.real(), 0.25, 1e-15);
    EXPECT_NEAR(p.single.real(), 0.25, 1e-15);
    EXPECT_THROW((void)hyperdet3(states::ghz(4)), Error);
}

TEST(Hyperdet, MatchesDiscriminant) {
    std::mt19937_64 rng(64);
    for (int rep = 0; rep < 200; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 3);
        EXPECT_LT(std::abs(hyperdet3(f) - oracle::cayley(oracle::coeffs(f))), 1e-10);
    }
}

TEST(Bipartition, ParseAndPrint) {
    const auto a = parse_bipartition("12|34", 4);
    EXPECT_EQ(a.left, 0b0011u);
    EXPECT_EQ(a.right, 0b1100u);
    EXPECT_EQ(to_string(a), "(12)(34)");
    const auto b = parse_bipartition("(1)(23)", 3);
    EXPECT_EQ(b.left, 0b001u);
    EXPECT_EQ(b.right, 0b110u);
    EXPECT_EQ(parse_bipartition("1,2|3", 3).left, 0b011u);
    EXPECT_THROW((void)parse_bipartition("12|23", 3), Error);
    EXPECT_THROW((void)parse_bipartition("12", 3), Error);
    EXPECT_THROW((void)parse_bipartition("1|5", 4), Error);
    EXPECT_EQ(all_bipartitions(3).size(), 3u);
    EXPECT_EQ(all_bipartitions(4).size(), 7u);
}

TEST(Factor, Examples) {
    const Context c2(2);
    const Zeon f = exp(Zeon::variable(c2, 1) * 2.0) * (Zeon::constant(c2, 3.0) + Zeon::variable(c2, 2));
    const auto r = factor_test(f, parse_bipartition("1|2", 2));
    ASSERT_TRUE(r.factorable);
    ASSERT_EQ(r.factors.size(), 2u);
    expect_near(r.factors[0] * r.factors[1], f);

    const Context c3(3);
    const Zeon e4 = (Zeon::constant(c3, 1.0) + mono(c3, {1, 3}) + mono(c3, {2, 3})) / std::sqrt(3.0);
    EXPECT_TRUE(factor_test(e4, parse_bipartition("1|2", 3), FactorMode::Weak).factorable);
    for (const char* split : {"1|23", "2|13", "3|12"})
        EXPECT_FALSE(factor_test(e4, parse_bipartition(split, 3)).factorable) << split;
    EXPECT_THROW((void)factor_test(e4, parse_bipartition("1|2", 3)), Error);

    const Zeon e6 = (Zeon::constant(c3, 1.0) + Zeon::variable(c3, 3) + mono(c3, {1, 2}) + mono(c3, {1, 2, 3})) * 0.5;
    const auto r6 = factor_test(e6, parse_bipartition("12|3", 3));
    ASSERT_TRUE(r6.factorable);
    expect_near(r6.factors[0] * r6.factors[1], e6);
    EXPECT_LT(r6.reassembly_error, 1e-12);
}

TEST(Factor, SoundOnRandomProducts) {
    std::mt19937_64 rng(65);
    for (int n = 2; n <= 5; ++n) {
        for (const auto& split : all_bipartitions(n)) {
            for (int rep = 0; rep < 10; ++rep) {
                const Zeon f = separable(rng, n, split.left);
                const auto r = factor_test(f, split);
                ASSERT_TRUE(r.factorable) << to_string(split);
                expect_near(r.factors[0] * r.factors[1], f, 1e-10);
                if (std::abs(f.body()) > 1e-3) EXPECT_TRUE(tanglemeter_separable(f, split));
            }
        }
    }
}

TEST(Factor, AgreesWithTanglemeter) {
    std::mt19937_64 rng(66);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + rep % 3;
        const Zeon f = oracle::rand_zeon(rng, n) + 1.0;
        for (const auto& split : all_bipartitions(n))
            EXPECT_EQ(factor_test(f, split).factorable, tanglemeter_separable(f, split));
    }
}

TEST(Factor, RejectsEntangledNamedStates) {
    for (int n : {3, 4})
        for (const Zeon& f : {states::w(n), states::ghz(n), states::cluster_w(n)})
            for (const auto& split : all_bipartitions(n)) EXPECT_FALSE(factor_test(f, split).factorable);
}

TEST(Tanglemeter, Examples) {
    const Zeon g = states::ghz(2) * std::sqrt(2.0);
    expect_near(tanglemeter(g), mono(Context(2), {1, 2}));
    const Context c2(2);
    const Zeon prod = exp(Zeon::variable(c2, 1)) * exp(Zeon::variable(c2, 2));
    expect_near(tanglemeter(prod), Zeon::variable(c2, 1) + Zeon::variable(c2, 2));
    EXPECT_TRUE(tanglemeter_separable(prod, parse_bipartition("1|2", 2)));
    try {
        (void)tanglemeter(states::w(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroBody);
    }
}

TEST(Invariants4, NamedStates) {
    const auto g = lmn_invariants(states::ghz(4));
    EXPECT_NEAR(g.h.real(), 0.5, 1e-15);
    for (Complex v : {g.l, g.m, g.n, g.w, g.sigma, g.pi}) EXPECT_NEAR(std::abs(v), 0, 1e-15);
    const auto c = lmn_invariants(states::cluster_w(4));
    EXPECT_NEAR(c.h.real(), 0.5, 1e-12);
    EXPECT_NEAR(c.w.real(), 1.0 / 72, 1e-12);
    EXPECT_NEAR(std::abs(c.sigma), 0, 1e-12);
    EXPECT_NEAR(std::abs(c.pi), 0, 1e-12);
    EXPECT_THROW((void)lmn_invariants(states::ghz(3)), Error);
}

TEST(Invariants4, MatchOracles) {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 100; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 4);
        const auto c = oracle::coeffs(f);
        const auto r = lmn_invariants(f);
        const auto o = oracle::lmn(c);
        EXPECT_LT(std::abs(r.l - o.l), 1e-10);
        EXPECT_LT(std::abs(r.m - o.m), 1e-10);
        EXPECT_LT(std::abs(r.n - o.n), 1e-10);
        EXPECT_LT(std::abs(oracle::contraction_d(c, 1) - 2.0 * r.dxy), 1e-10);
        EXPECT_LT(std::abs(oracle::contraction_d(c, 2) - 2.0 * r.dxz), 1e-10);
        EXPECT_LT(std::abs(oracle::contraction_d(c, 3) - 2.0 * r.dxt), 1e-10);
        EXPECT_LT(std::abs(r.w - (r.dxy + r.dxz + r.dxt)), 1e-12);
        EXPECT_LT(std::abs(r.l + r.m + r.n), 1e-10);
        EXPECT_LT(std::abs(determinant(body_l_matrix(f, 1, 2)) - r.n), 1e-10);
        EXPECT_LT(std::abs(determinant(body_l_matrix(f, 1, 4)) - r.m), 1e-10);
        EXPECT_LT(std::abs(determinant(body_l_matrix(f, 1, 3, true)) - r.l), 1e-10);
        EXPECT_LT(std::abs(determinant(b_matrix(f, 1, 2)) - r.dxy), 1e-10);
    }
}

TEST(WeakTest4, Examples) {
    for (int j = 2; j <= 4; ++j) {
        EXPECT_TRUE(weak_test_n4(states::ghz(4), 1, j).det.is_zero());
        EXPECT_TRUE(weak_test_n4(states::w(4), 1, j).det.is_zero());
    }
    const Context c4(4);
    const Zeon e3 = (Zeon::variable(c4, 3) + Zeon::variable(c4, 4) + mono(c4, {1, 2, 3}) + mono(c4, {1, 2, 4})) * 0.5;
    const Zeon d12 = weak_test_n4(e3, 1, 2).det;
    const Zeon d34 = weak_test_n4(e3, 3, 4).det;
    expect_near(d12, Zeon::constant(c4, 1.0 / 16));
    expect_near(d34, d12);
    EXPECT_TRUE(weak_test_n4(e3, 1, 3).det_pt.is_zero());
}

TEST(WeakTest4, BodyMatchesBodyMatrix) {
    std::mt19937_64 rng(68);
    for (int rep = 0; rep < 20; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 4);
        for (int j = 2; j <= 4; ++j) {
            const auto t = weak_test_n4(f, 1, j);
            EXPECT_LT(std::abs(t.det.body() - determinant(body_l_matrix(f, 1, j))), 1e-10);
            EXPECT_LT(std::abs(t.det_pt.body() - determinant(body_l_matrix(f, 1, j, true))), 1e-10);
        }
    }
}

TEST(ZeonDeterminant, MatchesScalarCase) {
    std::mt19937_64 rng(69);
    const Matrix m = oracle::rand_matrix(rng, 4);
    ZeonMatrix zm(4, std::vector<Zeon>(4, Zeon(Context(1))));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) zm[r][c] = Zeon::constant(Context(1), m(r, c));
    EXPECT_LT(std::abs(zeon_determinant(zm).body() - determinant(m)), 1e-10);
}

TEST(Monotones, TwoQubits) {
    const auto g = monotones(states::ghz(2));
    EXPECT_NEAR(g.concurrence, 1, 1e-12);
    EXPECT_NEAR(monotones(states::w(2)).concurrence, 1, 1e-12);
    std::mt19937_64 rng(70);
    for (int rep = 0; rep < 200; ++rep) {
        const Zeon f = oracle::rand_state(rng, 2);
        const auto r = monotones(f);
        EXPECT_NEAR(r.concurrence, std::abs(comb_concurrence(f)), 1e-12);
        for (std::size_t i = 0; i < 2; ++i)
            EXPECT_NEAR(r.concurrence * r.concurrence + r.v[i] * r.v[i] + r.p[i] * r.p[i], 1, 1e-10);
    }
    EXPECT_THROW((void)monotones(states::ghz(2) * 2.0), Error);
}

TEST(Monotones, ThreeQubits) {
    const auto w = monotones(states::w(3));
    EXPECT_NEAR(w.mu, 8.0 / 9, 1e-12);
    EXPECT_NEAR(w.mu_sigma, 8.0 / 9, 1e-12);
    EXPECT_NEAR(w.tau, 0, 1e-12);
    const auto g = monotones(states::ghz(3));
    EXPECT_NEAR(g.tau, 1, 1e-12);
    EXPECT_NEAR(g.mu, 1, 1e-12);
    EXPECT_NEAR(g.meyer_wallach, 1, 1e-12);
    EXPECT_NEAR(monotones(states::cluster_w(3)).mu, 8.0 / 9, 1e-12);
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 200; ++rep) {
        const auto r = monotones(oracle::rand_state(rng, 3));
        EXPECT_NEAR(r.mu, r.mu_sigma, 1e-10);
        EXPECT_GE(r.tau, 0);
        EXPECT_LE(r.tau, 1 + 1e-12);
    }
}

TEST(Monotones, FourQubits) {
    const auto g = monotones(states::ghz(4));
    EXPECT_NEAR(g.f2_prime, 3, 1e-12);
    EXPECT_NEAR(g.f3, 0.5, 1e-12);
    ASSERT_EQ(g.f.size(), 5u);
    const auto w = monotones(states::w(4));
    EXPECT_NEAR(w.f2_prime, 0, 1e-12);
    EXPECT_NEAR(w.f3, 0, 1e-12);
}

TEST(Deviations, ListedWithBothValues) {
    const auto devs = known_deviations();
    EXPECT_GE(devs.size(), 4u);
    bool e3 = false, e6 = false;
    for (const auto& d : devs) {
        EXPECT_FALSE(d.computed.empty());
        EXPECT_FALSE(d.tabulated.empty());
        if (d.quantity == "mu" && d.state == "(1+e1+e2+e3)/2") e3 = std::abs(std::stod(d.computed) - 0.5) < 1e-9;
        if (d.quantity == "mu" && d.state == "(1+e3+e1e2+e1e2e3)/2") e6 = std::abs(std::stod(d.computed) - 2.0 / 3) < 1e-9;
    }
    EXPECT_TRUE(e3);
    EXPECT_TRUE(e6);
}

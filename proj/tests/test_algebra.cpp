#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zeon/calculus.hpp"
#include "zeon/matrix.hpp"
#include "zeon/zeon.hpp"

using namespace zeon;

namespace {

Zeon mono(Context ctx, std::initializer_list<int> vars, Complex c = 1.0) { return Zeon::monomial(ctx, Subset(vars), c); }

void expect_near(const Zeon& a, const Zeon& b, double tol = 1e-12) { EXPECT_LT(oracle::max_diff(a, b), tol); }

}  // namespace

TEST(Construction, MakeZeonFromEntries) {
    const Context c2(2);
    const Zeon f = make_zeon(c2, {{Subset{}, 1.0}, {Subset{1, 2}, 1.0}});
    EXPECT_EQ(f.body(), Complex(1.0));
    EXPECT_EQ(f.coeff({1, 2}), Complex(1.0));
    EXPECT_EQ(f.coeff({1}), Complex(0.0));
    EXPECT_TRUE(make_zeon(Context(1), {}).is_zero());
    const double r = 1 / std::sqrt(3.0);
    const Zeon w = make_zeon(Context(3), {{Subset{1}, r}, {Subset{2}, r}, {Subset{3}, r}});
    EXPECT_NEAR(w.coeff({2}).real(), r, 1e-15);
}

TEST(Construction, RejectsBadInput) {
    EXPECT_THROW(Context(0), Error);
    EXPECT_THROW(Context(17), Error);
    EXPECT_THROW(Zeon::variable(Context(2), 3), Error);
    EXPECT_THROW(make_zeon(Context(2), {{Subset{1}, 1.0}, {Subset{1}, 2.0}}), Error);
    EXPECT_THROW((Subset{1, 1}), Error);
    try {
        (void)(Zeon::variable(Context(2), 1) + Zeon::variable(Context(3), 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ContextMismatch);
    }
}

TEST(Multiply, Examples) {
    const Context c2(2);
    const Zeon one = Zeon::constant(c2, 1.0);
    const Zeon e1 = Zeon::variable(c2, 1), e2 = Zeon::variable(c2, 2);
    expect_near((one + e1) * (one + e2), one + e1 + e2 + mono(c2, {1, 2}));
    EXPECT_TRUE((e1 * e1).is_zero());
    expect_near(power(one + mono(c2, {1, 2}), 2), one + mono(c2, {1, 2}, 2.0));
}

TEST(Multiply, KernelsMatchBruteForce) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 11; ++n) {
        const Zeon f = oracle::rand_zeon(rng, n), g = oracle::rand_zeon(rng, n);
        const auto ref = oracle::multiply(oracle::coeffs(f), oracle::coeffs(g));
        EXPECT_LT(oracle::max_diff(oracle::coeffs(multiply_submask(f, g)), ref), 1e-9) << n;
        EXPECT_LT(oracle::max_diff(oracle::coeffs(multiply_ranked(f, g)), ref), 1e-9) << n;
        EXPECT_LT(oracle::max_diff(oracle::coeffs(f * g), ref), 1e-9) << n;
    }
}

TEST(Power, Examples) {
    const Context c1(1);
    const Zeon f = Zeon::constant(c1, 2.0) + Zeon::variable(c1, 1);
    expect_near(power(f, 3), Zeon::constant(c1, 8.0) + Zeon::variable(c1, 1) * 12.0);
    expect_near(power(f, 3), f * f * f);
    expect_near(power(f, 0), Zeon::constant(c1, 1.0));
    const Context c3(3);
    const Zeon s = Zeon::variable(c3, 1) + Zeon::variable(c3, 2) + Zeon::variable(c3, 3);
    expect_near(power(s, 2), (mono(c3, {1, 2}) + mono(c3, {1, 3}) + mono(c3, {2, 3})) * 2.0);
    expect_near(power(s, 3), mono(c3, {1, 2, 3}, 6.0));
    expect_near(power(s, 4), Zeon(c3));
}

TEST(Invert, Examples) {
    const Context c1(1);
    expect_near(invert(Zeon::constant(c1, 1.0) + Zeon::variable(c1, 1)),
                Zeon::constant(c1, 1.0) - Zeon::variable(c1, 1));
    expect_near(invert(Zeon::constant(c1, 2.0)), Zeon::constant(c1, 0.5));
    // (1 - E_3)^{-1}, E_3 = exp(e1+e2+e3) - 1: ordered Bell numbers by degree
    const Context c3(3);
    const Zeon t = Zeon::variable(c3, 1) + Zeon::variable(c3, 2) + Zeon::variable(c3, 3);
    const Zeon inv = invert(2.0 - exp(t));
    EXPECT_NEAR(inv.body().real(), 1, 1e-12);
    EXPECT_NEAR(inv.coeff({2}).real(), 1, 1e-12);
    EXPECT_NEAR(inv.coeff({1, 3}).real(), 3, 1e-12);
    EXPECT_NEAR(inv.coeff({1, 2, 3}).real(), 13, 1e-12);
    try {
        (void)invert(Zeon::variable(c1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroBody);
    }
}

TEST(Invert, RandomRoundTrip) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + rep % 8;
        Zeon f = oracle::rand_zeon(rng, n);
        f = f + 3.0;
        const Zeon prod = f * invert(f);
        expect_near(prod, Zeon::constant(f.context(), 1.0), 1e-9);
    }
}

TEST(Series, ExpLogExamples) {
    const Context c2(2);
    const Zeon one = Zeon::constant(c2, 1.0);
    const Zeon e1 = Zeon::variable(c2, 1), e2 = Zeon::variable(c2, 2);
    expect_near(exp(e1 + e2), one + e1 + e2 + mono(c2, {1, 2}));
    expect_near(exp(Zeon(c2)), one);
    expect_near(log(one + e1 + e2 + mono(c2, {1, 2})), e1 + e2);
    expect_near(log(one), Zeon(c2));
    EXPECT_THROW((void)log(e1), Error);
}

TEST(Series, LogOfGeneralTwoVariableForm) {
    // log(1 + F_i eta_i + F_12 eta_1 eta_2) = F_i eta_i + (F_12 - F_1 F_2) eta_1 eta_2
    const Context c2(2);
    const Complex f1(0.3, 0.1), f2(-1.2, 0.5), f12(0.7, -0.4);
    const Zeon f = make_zeon(c2, {{Subset{}, 1.0}, {Subset{1}, f1}, {Subset{2}, f2}, {Subset{1, 2}, f12}});
    const Zeon expect = make_zeon(c2, {{Subset{1}, f1}, {Subset{2}, f2}, {Subset{1, 2}, f12 - f1 * f2}});
    expect_near(log(f), expect);
}

TEST(Series, TrigExamples) {
    const Context c2(2), c3(3);
    const Zeon s2 = Zeon::variable(c2, 1) + Zeon::variable(c2, 2);
    auto [cos2, sin2] = trig(s2);
    expect_near(cos2, Zeon::constant(c2, 1.0) - mono(c2, {1, 2}));
    expect_near(sin2, s2);
    const Zeon s3 = Zeon::variable(c3, 1) + Zeon::variable(c3, 2) + Zeon::variable(c3, 3);
    auto [cos3, sin3] = trig(s3);
    expect_near(cos3, Zeon::constant(c3, 1.0) - mono(c3, {1, 2}) - mono(c3, {1, 3}) - mono(c3, {2, 3}));
    expect_near(sin3, s3 - mono(c3, {1, 2, 3}));
    auto [c0, s0] = trig(Zeon(c3));
    expect_near(c0, Zeon::constant(c3, 1.0));
    expect_near(s0, Zeon(c3));
}

TEST(Series, TrigWithBody) {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        const Zeon f = oracle::rand_zeon(rng, 4, 0.5);
        const Zeon i_f = f * Complex(0, 1);
        // Euler: exp(i f) = cos f + i sin f
        expect_near(exp(i_f), cos(f) + sin(f) * Complex(0, 1), 1e-9);
    }
}

TEST(Involutions, Examples) {
    const Context c2(2), c3(3);
    expect_near(dual(Zeon::constant(c3, 1.0)), mono(c3, {1, 2, 3}));
    const Zeon s = sin(Zeon::variable(c2, 1) + Zeon::variable(c2, 2));
    expect_near(dual(s), s);
    std::mt19937_64 rng(9);
    const Zeon f = oracle::rand_zeon(rng, 4);
    expect_near(grade(grade(f)), f);
    expect_near(dual(dual(f)), f);
    for (int i = 1; i <= 4; ++i) expect_near(grade_at(grade_at(f, i), i), f);
    Zeon all = f;
    for (int i = 1; i <= 4; ++i) all = grade_at(all, i);
    expect_near(all, grade(f));
}

TEST(Projector, Examples) {
    const Context c2(2);
    const Zeon f = make_zeon(c2, {{Subset{}, 2.0}, {Subset{1}, 3.0}, {Subset{2}, 5.0}, {Subset{1, 2}, 7.0}});
    expect_near(projector(f, 1, Slot::With), make_zeon(c2, {{Subset{1}, 3.0}, {Subset{1, 2}, 7.0}}));
    expect_near(projector(projector(f, 1, Slot::With), 1, Slot::Without), Zeon(c2));
    expect_near(projector(projector(f, 2, Slot::With), 1, Slot::With), mono(c2, {1, 2}, 7.0));
    expect_near(projector(f, 2, Slot::With) + projector(f, 2, Slot::Without), f);
}

TEST(XiMap, TwoByTwo) {
    const Matrix b{{2.0, 0.5}, {0.5, 3.0}};
    const Zeon x = xi_map(b);
    EXPECT_NEAR(x.body().real(), 1, 1e-15);
    EXPECT_NEAR(x.coeff({1}).real(), 2, 1e-15);
    EXPECT_NEAR(x.coeff({2}).real(), 3, 1e-15);
    EXPECT_NEAR(x.coeff({1, 2}).real(), 6 - 0.25, 1e-12);
    const Zeon id = xi_map(Matrix::identity(3));
    for (auto c : id.coeffs()) EXPECT_NEAR(c.real(), 1, 1e-12);
}

TEST(XiMap, LogThirdOrderIdentity) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> d;
    for (int rep = 0; rep < 20; ++rep) {
        Matrix b(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = r; c < 3; ++c) b(r, c) = b(c, r) = d(rng);
        const Zeon f = log(xi_map(b));
        const Complex f123 = f.coeff({1, 2, 3});
        const Complex rhs = 4.0 * b(0, 1) * b(0, 1) * b(0, 2) * b(0, 2) * b(1, 2) * b(1, 2);
        EXPECT_NEAR(std::abs(f123 * f123 - rhs), 0, 1e-9 * (1 + std::abs(rhs)));
        EXPECT_NEAR(std::abs(f123 * f123 + 4.0 * f.coeff({1, 2}) * f.coeff({1, 3}) * f.coeff({2, 3})), 0,
                    1e-9 * (1 + std::abs(rhs)));
    }
}

TEST(XiMap, LogFourthOrderRelations) {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> d;
    for (int rep = 0; rep < 20; ++rep) {
        Matrix b(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = r; c < 4; ++c) b(r, c) = b(c, r) = d(rng);
        const Zeon f = log(xi_map(b));
        auto g = [&](std::initializer_list<int> v) { return f.coeff(v); };
        const Complex lhs1 = g({1, 2, 3}) * g({1, 2, 4}) * g({1, 3, 4});
        const Complex rhs1 = -4.0 * g({1, 2}) * g({1, 3}) * g({1, 4}) * g({2, 3, 4});
        EXPECT_NEAR(std::abs(lhs1 - rhs1), 0, 1e-8 * (1 + std::abs(lhs1)));
        const Complex lhs2 = 2.0 * g({1, 2, 3, 4}) * g({1, 2}) * g({1, 3}) * g({1, 4});
        const Complex rhs2 = g({1, 3, 4}) * g({1, 2, 3}) * g({1, 2}) * g({1, 4}) +
                             g({1, 3, 4}) * g({1, 2, 4}) * g({1, 2}) * g({1, 3}) +
                             g({1, 2, 4}) * g({1, 2, 3}) * g({1, 3}) * g({1, 4});
        EXPECT_NEAR(std::abs(lhs2 - rhs2), 0, 1e-8 * (1 + std::abs(lhs2)));
    }
}

TEST(Embed, KeepsLabels) {
    const Context c2(2), c4(4);
    const Zeon f = Zeon::constant(c2, 1.0) + mono(c2, {1, 2}, 2.0);
    const Zeon g = embed(f, c4);
    EXPECT_EQ(g.vars(), 4);
    EXPECT_EQ(g.coeff({1, 2}), Complex(2.0));
    EXPECT_THROW((void)embed(g, c2), Error);
}

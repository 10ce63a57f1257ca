#include "zeon/combinat.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <string>

#include "zeon/calculus.hpp"

namespace zeon {

Complex permanent_ryser(const Matrix& a) {
    require(a.square(), ErrorKind::InvalidArgument, "permanent needs a square matrix");
    const std::size_t n = a.rows();
    require(n <= 20, ErrorKind::InvalidArgument, "permanent input too large");
    if (n == 0) return 1.0;
    std::vector<Complex> rowsum(n);
    Complex total = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t flipped = next ^ gray;
        const int col = std::countr_zero(flipped);
        const double s = (next & flipped) ? 1.0 : -1.0;
        for (std::size_t r = 0; r < n; ++r) rowsum[r] += s * a(r, col);
        gray = next;
        Complex prod = 1.0;
        for (const auto& v : rowsum) prod *= v;
        total += ((n - std::popcount(gray)) % 2 ? -1.0 : 1.0) * prod;
    }
    return total;
}

namespace {

// Sum over perfect matchings of {0..n-1}; the sign tracks crossings for the pfaffian.
Complex matchings(const Matrix& a, bool signed_sum) {
    const std::size_t n = a.rows();
    std::function<Complex(std::uint32_t)> rec = [&](std::uint32_t left) -> Complex {
        if (!left) return 1.0;
        const int i = std::countr_zero(left);
        const std::uint32_t rest = left & ~(1U << i);
        Complex acc = 0;
        int pos = 0;
        for (std::uint32_t m = rest; m; m &= m - 1, ++pos) {
            const int j = std::countr_zero(m);
            const double s = signed_sum && pos % 2 ? -1.0 : 1.0;
            acc += s * a(i, j) * rec(rest & ~(1U << j));
        }
        return acc;
    };
    return rec(static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

void check_even(const Matrix& a) {
    require(a.square(), ErrorKind::InvalidArgument, "matching sum needs a square matrix");
    require(a.rows() % 2 == 0, ErrorKind::InvalidArgument, "matching sum needs an even dimension");
    require(a.rows() <= 16, ErrorKind::InvalidArgument, "matching sum input too large");
}

std::int64_t guarded_round(Complex v, const char* what) {
    const double r = std::round(v.real());
    if (std::abs(v.real() - r) >= 1e-6 || std::abs(v.imag()) >= 1e-6)
        fail(ErrorKind::Internal, std::string(what) + ": integral is not an integer");
    return static_cast<std::int64_t>(r);
}

Zeon sum_of_vars(Context ctx) {
    Zeon t(ctx);
    for (int i = 1; i <= ctx.n(); ++i) t += Zeon::variable(ctx, i);
    return t;
}

void check_range(int n) {
    require(n >= 0 && n <= 10, ErrorKind::InvalidArgument, "n must be in 0..10");
}

}  // namespace

Complex hafnian(const Matrix& a, double tol) {
    check_even(a);
    require(is_symmetric(a, tol), ErrorKind::InvalidArgument, "hafnian needs a symmetric matrix");
    return matchings(a, false);
}

Complex pfaffian(const Matrix& a, double tol) {
    check_even(a);
    require(is_antisymmetric(a, tol), ErrorKind::InvalidArgument, "pfaffian needs an antisymmetric matrix");
    return matchings(a, true);
}

std::int64_t stirling2(int n, int k) {
    check_range(n);
    require(k >= 0 && k <= n, ErrorKind::InvalidArgument, "k must be in 0..n");
    if (n == 0) return 1;
    Context ctx(n);
    const Zeon e = exp(sum_of_vars(ctx)) - 1.0;
    double kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return guarded_round(integrate_all(power(e, k)) / kfact, "stirling");
}

std::int64_t bell(int n) {
    check_range(n);
    if (n == 0) return 1;
    Context ctx(n);
    return guarded_round(integrate_all(exp(exp(sum_of_vars(ctx)) - 1.0)), "bell");
}

std::int64_t ordered_bell(int n) {
    check_range(n);
    if (n == 0) return 1;
    Context ctx(n);
    return guarded_round(integrate_all(invert(2.0 - exp(sum_of_vars(ctx)))), "ordered bell");
}

SymmetricPolySet symmetric_polys(Context ctx) {
    const int n = ctx.n();
    SymmetricPolySet set{ctx, {}, {}};
    for (int k = 0; k <= n; ++k) {
        Zeon ek(ctx);
        for (Mask m = 0; m <= ctx.full(); ++m)
            if (std::popcount(m) == k) ek += Zeon::monomial(ctx, Subset::from_mask(m));
        set.e.push_back(ek);
    }
    // h_k is the degree-k part of prod_i 1/(1 - eta_i)
    Zeon gen = Zeon::constant(ctx, 1.0);
    for (int i = 1; i <= n; ++i) gen = gen * invert(1.0 - Zeon::variable(ctx, i));
    for (int k = 0; k <= n; ++k) {
        std::vector<Complex> part(ctx.size());
        for (Mask m = 0; m <= ctx.full(); ++m)
            if (std::popcount(m) == k) part[m] = gen[m];
        set.h.emplace_back(ctx, std::move(part));
    }
    return set;
}

Zeon euler_operator(const Zeon& f) {
    Zeon out(f.context());
    for (int i = 1; i <= f.vars(); ++i) out += Zeon::variable(f.context(), i) * derivative(f, i);
    return out;
}

Zeon vandermonde(const std::vector<Zeon>& xs) {
    require(!xs.empty(), ErrorKind::InvalidArgument, "vandermonde needs at least one element");
    Zeon out = Zeon::constant(xs.front().context(), 1.0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out = out * (xs[j] - xs[i]);
    return out;
}

}  // namespace zeon

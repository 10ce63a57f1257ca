#pragma once

// Zeon algebra: functions of n commuting nilpotent variables eta_1..eta_n
// (eta_i^2 = 0, eta_i eta_j = eta_j eta_i) with complex coefficients.
//
// A value is stored densely: coefficient S (a bitmask, bit i-1 <=> eta_i)
// multiplies the monomial prod_{i in S} eta_i. Coefficient 0 is the body,
// everything else is the soul.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "zeon/error.hpp"

namespace zeon {

using Complex = std::complex<double>;
using Mask = std::uint32_t;

inline constexpr int kMaxVars = 16;
inline constexpr double kDefaultTol = 1e-9;

class Context {
public:
    explicit Context(int n, double tol = kDefaultTol);

    int n() const noexcept { return n_; }
    double tol() const noexcept { return tol_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }
    Mask full() const noexcept { return static_cast<Mask>(size() - 1); }

    friend bool operator==(const Context& a, const Context& b) noexcept { return a.n_ == b.n_; }

private:
    int n_;
    double tol_;
};

// A set of variables, 1-based at the interface.
class Subset {
public:
    constexpr Subset() = default;
    Subset(std::initializer_list<int> vars);
    static constexpr Subset from_mask(Mask m) noexcept {
        Subset s;
        s.mask_ = m;
        return s;
    }

    constexpr Mask mask() const noexcept { return mask_; }
    constexpr bool contains(int var) const noexcept { return (mask_ >> (var - 1)) & 1U; }
    int size() const noexcept;
    std::vector<int> vars() const;
    Subset complement(int n) const noexcept;

    friend constexpr bool operator==(Subset a, Subset b) noexcept { return a.mask_ == b.mask_; }

private:
    Mask mask_ = 0;
};

inline constexpr Mask bit(int var) noexcept { return Mask{1} << (var - 1); }

class Zeon {
public:
    explicit Zeon(Context ctx);
    Zeon(Context ctx, std::vector<Complex> coeffs);

    static Zeon constant(Context ctx, Complex value);
    static Zeon variable(Context ctx, int var);
    static Zeon monomial(Context ctx, Subset s, Complex coeff = 1.0);

    const Context& context() const noexcept { return ctx_; }
    int vars() const noexcept { return ctx_.n(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    Complex operator[](Mask m) const { return coeffs_[m]; }
    Complex operator[](Subset s) const { return coeffs_[s.mask()]; }
    Complex coeff(std::initializer_list<int> vars) const { return (*this)[Subset(vars)]; }

    Complex body() const noexcept { return coeffs_[0]; }
    Zeon soul() const;

    bool is_zero(double tol) const noexcept;
    bool is_zero() const noexcept { return is_zero(ctx_.tol()); }
    double max_abs() const noexcept;

    Zeon operator-() const;
    Zeon& operator+=(const Zeon& other);
    Zeon& operator-=(const Zeon& other);
    Zeon& operator*=(Complex s);
    Zeon& operator/=(Complex s);

    friend Zeon operator+(Zeon a, const Zeon& b) { return a += b; }
    friend Zeon operator-(Zeon a, const Zeon& b) { return a -= b; }
    friend Zeon operator+(Zeon a, Complex s) { a.coeffs_[0] += s; return a; }
    friend Zeon operator+(Complex s, Zeon a) { a.coeffs_[0] += s; return a; }
    friend Zeon operator-(Zeon a, Complex s) { a.coeffs_[0] -= s; return a; }
    friend Zeon operator-(Complex s, const Zeon& a) { return (-a) + s; }
    friend Zeon operator*(Zeon a, Complex s) { return a *= s; }
    friend Zeon operator*(Complex s, Zeon a) { return a *= s; }
    friend Zeon operator/(Zeon a, Complex s) { return a /= s; }
    friend Zeon operator*(const Zeon& a, const Zeon& b);

private:
    void check_same(const Zeon& other) const;

    Context ctx_;
    std::vector<Complex> coeffs_;
};

// ---- construction -------------------------------------------------------

Zeon make_zeon(Context ctx, std::span<const std::pair<Subset, Complex>> entries);
Zeon make_zeon(Context ctx, std::initializer_list<std::pair<Subset, Complex>> entries);

// Copy F into a context with more variables (same variable labels).
Zeon embed(const Zeon& f, Context wider);

bool approx_equal(const Zeon& a, const Zeon& b, double tol);

// ---- ring operations ----------------------------------------------------

Zeon multiply(const Zeon& f, const Zeon& g);
// multiply() uses the submask kernel; the ranked one is kept for testing and benchmarking.
Zeon multiply_submask(const Zeon& f, const Zeon& g);
Zeon multiply_ranked(const Zeon& f, const Zeon& g);

Zeon power(const Zeon& f, unsigned m);
Zeon invert(const Zeon& f);
Zeon exp(const Zeon& f);
Zeon log(const Zeon& f);

struct TrigPair {
    Zeon cos;
    Zeon sin;
};
TrigPair trig(const Zeon& f);
Zeon cos(const Zeon& f);
Zeon sin(const Zeon& f);

// ---- involutions and projectors ----------------------------------------

Zeon dual(const Zeon& f);                  // coefficient S -> complement of S
Zeon grade(const Zeon& f);                 // (-1)^|S|
Zeon grade_at(const Zeon& f, int var);     // negate coefficients whose subset holds var
Zeon conj(const Zeon& f);

enum class Slot { Without = 0, With = 1 };
Zeon projector(const Zeon& f, int var, Slot slot);

// Principal-minor map: coefficient S is the minor of B on rows/columns S.
class Matrix;
Zeon xi_map(const Matrix& b, double tol = kDefaultTol);

}  // namespace zeon

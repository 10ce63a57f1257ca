#pragma once

#include <vector>

#include "zeon/matrix.hpp"
#include "zeon/zeon.hpp"

namespace zeon {

Zeon derivative(const Zeon& f, int var);
Zeon derivative(const Zeon& f, Subset vars);

// Extracts the coefficient function of each listed variable in turn.
Zeon integrate(const Zeon& f, const std::vector<int>& vars);
Complex integrate_all(const Zeon& f);

// Context of 2n variables: primal eta_1..eta_n followed by conjugate xi_1..xi_n.
class DualPairContext {
public:
    explicit DualPairContext(int n, double tol = kDefaultTol);

    int n() const noexcept { return n_; }
    const Context& base() const noexcept { return base_; }
    int primal(int i) const noexcept { return i; }
    int conjugate(int i) const noexcept { return n_ + i; }
    Mask primal_mask() const noexcept { return (Mask{1} << n_) - 1; }
    Mask conjugate_mask() const noexcept { return primal_mask() << n_; }

    // Places an n-variable Zeon on the primal or conjugate half.
    Zeon lift_primal(const Zeon& f) const;
    Zeon lift_conjugate(const Zeon& f) const;
    // Integrates out every primal variable and returns a Zeon in the conjugate ones,
    // relabelled as an n-variable function.
    Zeon integrate_primal(const Zeon& f) const;
    Zeon integrate_conjugate(const Zeon& f) const;

private:
    int n_;
    Context base_;
};

// Full integral of exp(sum_ij eta_i B_ij eta'_j) over both halves.
Complex gaussian_permanent(const Matrix& b);

enum class Direction { Forward, Inverse };
Zeon fourier(const Zeon& g, Direction dir = Direction::Forward);

// (-1)^k e^{q} d_I e^{-q} with q = e_1^2 / 2.
Zeon hermite(Context ctx, Subset index);
// Sum of hermite() over all index sets of size k.
Zeon hermite_degree(Context ctx, int k);

}  // namespace zeon

#include "zeon/calculus.hpp"

#include <bit>
#include <string>

namespace zeon {

Zeon derivative(const Zeon& f, int var) {
    require(var >= 1 && var <= f.vars(), ErrorKind::InvalidArgument, "variable index out of range");
    const Mask b = bit(var);
    std::vector<Complex> out(f.size());
    for (Mask m = 0; m <= f.context().full(); ++m)
        if (!(m & b)) out[m] = f[m | b];
    return Zeon(f.context(), std::move(out));
}

Zeon derivative(const Zeon& f, Subset vars) {
    require(vars.mask() <= f.context().full(), ErrorKind::InvalidArgument, "subset exceeds context");
    const Mask s = vars.mask();
    std::vector<Complex> out(f.size());
    for (Mask m = 0; m <= f.context().full(); ++m)
        if (!(m & s)) out[m] = f[m | s];
    return Zeon(f.context(), std::move(out));
}

Zeon integrate(const Zeon& f, const std::vector<int>& vars) {
    Mask seen = 0;
    Zeon out = f;
    for (int v : vars) {
        require(v >= 1 && v <= f.vars(), ErrorKind::InvalidArgument, "variable index out of range");
        require(!(seen & bit(v)), ErrorKind::InvalidArgument, "duplicate integration variable " + std::to_string(v));
        seen |= bit(v);
        out = derivative(out, v);
    }
    return out;
}

Complex integrate_all(const Zeon& f) { return f[f.context().full()]; }

// ---- dual pairs ---------------------------------------------------------

DualPairContext::DualPairContext(int n, double tol) : n_(n), base_(2 * n, tol) {}

Zeon DualPairContext::lift_primal(const Zeon& f) const {
    require(f.vars() == n_, ErrorKind::ContextMismatch, "primal lift needs an n-variable function");
    return embed(f, base_);
}

Zeon DualPairContext::lift_conjugate(const Zeon& f) const {
    require(f.vars() == n_, ErrorKind::ContextMismatch, "conjugate lift needs an n-variable function");
    std::vector<Complex> out(base_.size());
    for (Mask m = 0; m <= f.context().full(); ++m) out[m << n_] = f[m];
    return Zeon(base_, std::move(out));
}

Zeon DualPairContext::integrate_primal(const Zeon& f) const {
    require(f.context() == base_, ErrorKind::ContextMismatch, "expected a dual-pair function");
    Context half(n_, base_.tol());
    std::vector<Complex> out(half.size());
    for (Mask m = 0; m <= half.full(); ++m) out[m] = f[(m << n_) | primal_mask()];
    return Zeon(half, std::move(out));
}

Zeon DualPairContext::integrate_conjugate(const Zeon& f) const {
    require(f.context() == base_, ErrorKind::ContextMismatch, "expected a dual-pair function");
    Context half(n_, base_.tol());
    std::vector<Complex> out(half.size());
    for (Mask m = 0; m <= half.full(); ++m) out[m] = f[m | conjugate_mask()];
    return Zeon(half, std::move(out));
}

Complex gaussian_permanent(const Matrix& b) {
    require(b.square(), ErrorKind::InvalidArgument, "gaussian integral needs a square matrix");
    const int n = static_cast<int>(b.rows());
    require(n >= 1 && 2 * n <= kMaxVars, ErrorKind::InvalidArgument, "matrix too large for the doubled context");
    DualPairContext dp(n);
    Zeon exponent(dp.base());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            exponent += Zeon::monomial(dp.base(), Subset::from_mask(bit(dp.primal(i)) | bit(dp.conjugate(j))), b(i - 1, j - 1));
    return integrate_all(exp(exponent));
}

Zeon fourier(const Zeon& g, Direction dir) {
    const int n = g.vars();
    require(2 * n <= kMaxVars, ErrorKind::InvalidArgument, "function too large for the doubled context");
    DualPairContext dp(n, g.context().tol());
    const double sign = dir == Direction::Forward ? 1.0 : -1.0;
    // g lives on the primal half here; the result is a function of the conjugate half
    Zeon kernel = Zeon::constant(dp.base(), 1.0);
    for (int i = 1; i <= n; ++i) {
        Zeon factor = Zeon::constant(dp.base(), 1.0);
        factor += Zeon::monomial(dp.base(), Subset::from_mask(bit(dp.primal(i)) | bit(dp.conjugate(i))), sign);
        kernel = kernel * factor;
    }
    return dp.integrate_primal(kernel * dp.lift_primal(g));
}

Zeon hermite(Context ctx, Subset index) {
    require(index.mask() <= ctx.full(), ErrorKind::InvalidArgument, "index exceeds context");
    Zeon e1(ctx);
    for (int i = 1; i <= ctx.n(); ++i) e1 += Zeon::variable(ctx, i);
    const Zeon q = e1 * e1 * 0.5;
    Zeon h = exp(q) * derivative(exp(-q), index);
    return index.size() % 2 ? -h : h;
}

Zeon hermite_degree(Context ctx, int k) {
    require(k >= 0 && k <= ctx.n(), ErrorKind::InvalidArgument, "degree out of range");
    Zeon sum(ctx);
    for (Mask m = 0; m <= ctx.full(); ++m)
        if (std::popcount(m) == k) sum += hermite(ctx, Subset::from_mask(m));
    return sum;
}

}  // namespace zeon

#include "zeon/hilbert.hpp"

#include <bit>
#include <cmath>

#include "zeon/calculus.hpp"

namespace zeon {

namespace {

void check_same(const Zeon& f, const Zeon& g) {
    require(f.context() == g.context(), ErrorKind::ContextMismatch, "context mismatch");
}

}  // namespace

Complex scalar_product(const Zeon& f, const Zeon& g) {
    check_same(f, g);
    Complex s = 0;
    for (Mask m = 0; m <= f.context().full(); ++m) s += std::conj(f[m]) * g[m];
    return s;
}

double norm(const Zeon& f) { return std::sqrt(scalar_product(f, f).real()); }

Zeon normalize(const Zeon& f) {
    const double nrm = norm(f);
    require(nrm > f.context().tol(), ErrorKind::InvalidArgument, "cannot normalize a zero function");
    return f / nrm;
}

Complex omega_form(const Zeon& f, const Zeon& g) {
    check_same(f, g);
    const Mask full = f.context().full();
    Complex s = 0;
    for (Mask m = 0; m <= full; ++m) s += (std::popcount(m) % 2 ? -1.0 : 1.0) * f[m] * g[full ^ m];
    return s;
}

Complex wedge1(const Zeon& f, const Zeon& g) {
    check_same(f, g);
    require(f.vars() == 1, ErrorKind::InvalidArgument, "wedge form needs one variable");
    return f[0] * g[1] - f[1] * g[0];
}

namespace {

// F = A(eta_r) + eta_k B(eta_r) for n = 2; returns (A, B) as one-variable functions.
std::pair<Zeon, Zeon> split2(const Zeon& f, int k) {
    require(f.vars() == 2, ErrorKind::InvalidArgument, "form needs two variables");
    require(k == 1 || k == 2, ErrorKind::InvalidArgument, "split variable must be 1 or 2");
    const int r = 3 - k;
    Context one(1, f.context().tol());
    Zeon a(one, {f[0], f[bit(r)]});
    Zeon b(one, {f[bit(k)], f[bit(k) | bit(r)]});
    return {a, b};
}

}  // namespace

Complex concurrence_form(const Zeon& f, int split_var) {
    auto [a, b] = split2(f, split_var);
    return wedge1(a, b);
}

Complex antisymmetric_form2(const Zeon& f, const Zeon& g, int split_var) {
    check_same(f, g);
    auto [fa, fb] = split2(f, split_var);
    auto [ga, gb] = split2(g, split_var);
    return wedge1(fa, gb) - wedge1(ga, fb);
}

BasisSet basis(Context ctx, BasisKind kind) {
    BasisSet set{kind, {}};
    if (kind == BasisKind::Monomial) {
        for (Mask m = 0; m <= ctx.full(); ++m) set.elements.push_back(Zeon::monomial(ctx, Subset::from_mask(m)));
        return set;
    }
    const int n = ctx.n();
    const double scale = 1.0 / std::sqrt(std::ldexp(1.0, n - 1));
    std::vector<Zeon> cosines, sines;
    // bit j of the counter flips the sign of eta_{n-j}; eta_1 stays positive
    for (Mask pattern = 0; pattern < (Mask{1} << (n - 1)); ++pattern) {
        Zeon arg = Zeon::variable(ctx, 1);
        for (int v = 2; v <= n; ++v) {
            const bool minus = (pattern >> (n - v)) & 1U;
            arg += Zeon::variable(ctx, v) * (minus ? -1.0 : 1.0);
        }
        auto [c, s] = trig(arg);
        cosines.push_back(c * scale);
        sines.push_back(s * scale);
    }
    set.elements = cosines;
    set.elements.insert(set.elements.end(), sines.begin(), sines.end());
    return set;
}

IndexLabel index_from_binary(std::string_view binary) {
    require(!binary.empty() && binary.size() <= static_cast<std::size_t>(kMaxVars), ErrorKind::InvalidArgument,
            "binary label length must be 1..16");
    IndexLabel out;
    out.binary = binary;
    Mask m = 0;
    for (std::size_t i = 0; i < binary.size(); ++i) {
        const char ch = binary[i];
        require(ch == '0' || ch == '1', ErrorKind::InvalidArgument, "binary label must contain only 0 and 1");
        out.decimal = out.decimal * 2 + static_cast<unsigned>(ch - '0');
        if (ch == '1') m |= bit(static_cast<int>(i) + 1);
    }
    out.subset = Subset::from_mask(m);
    return out;
}

IndexLabel index_from_decimal(unsigned decimal, int n) {
    require(n >= 1 && n <= kMaxVars, ErrorKind::InvalidArgument, "label length must be 1..16");
    require(decimal < (1U << n), ErrorKind::InvalidArgument, "decimal label out of range");
    std::string bin(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((decimal >> (n - 1 - i)) & 1U) bin[static_cast<std::size_t>(i)] = '1';
    return index_from_binary(bin);
}

IndexLabel index_from_subset(Subset s, int n) {
    require(n >= 1 && n <= kMaxVars, ErrorKind::InvalidArgument, "label length must be 1..16");
    require(s.mask() < (Mask{1} << n), ErrorKind::InvalidArgument, "subset exceeds label length");
    std::string bin(static_cast<std::size_t>(n), '0');
    for (int v : s.vars()) bin[static_cast<std::size_t>(v - 1)] = '1';
    return index_from_binary(bin);
}

std::string subset_label(Subset s) {
    if (s.mask() == 0) return "0";
    std::string out;
    for (int v : s.vars()) out += std::to_string(v);
    return out;
}

Zeon kernel_apply(const KernelFunction& k, const Zeon& f) {
    const int n = f.vars();
    require(k.a.vars() == 2 * n, ErrorKind::ContextMismatch, "kernel context does not match the function");
    DualPairContext dp(n, f.context().tol());
    // integrate over the primed half, which is the conjugate half of the pair context
    return dp.integrate_conjugate(k.a * dp.lift_conjugate(f));
}

KernelFunction named_kernel(std::string_view name) {
    Context c2(2);
    const Zeon one = Zeon::constant(c2, 1.0);
    const Zeon x = Zeon::variable(c2, 1);   // eta
    const Zeon xp = Zeon::variable(c2, 2);  // eta'
    const Zeon xxp = x * xp;
    Zeon a(c2);
    if (name == "id") a = x + xp;
    else if (name == "dplus") a = xxp;
    else if (name == "d") a = one;
    else if (name == "pi0") a = xp;
    else if (name == "pi1") a = x;
    else if (name == "sigma3") a = xp - x;
    else if (name == "sigma1") a = exp(xp * x);
    else if (name == "epsilon") a = exp(-(xp * x));
    else if (name == "hadamard") a = (one - x + xp + xxp) / std::sqrt(2.0);
    else fail(ErrorKind::InvalidArgument, "unknown kernel: " + std::string(name));
    return {a, std::string(name)};
}

std::vector<std::string> kernel_names() {
    return {"id", "d", "dplus", "pi0", "pi1", "sigma3", "sigma1", "epsilon", "hadamard"};
}

}  // namespace zeon

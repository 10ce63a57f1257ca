#include "zeon/zeon.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "zeon/matrix.hpp"

namespace zeon {

Context::Context(int n, double tol) : n_(n), tol_(tol) {
    require(n >= 1 && n <= kMaxVars, ErrorKind::InvalidArgument,
            "variable count must be in 1.." + std::to_string(kMaxVars) + ", got " + std::to_string(n));
    require(tol >= 0 && std::isfinite(tol), ErrorKind::InvalidArgument, "tolerance must be finite and nonnegative");
}

Subset::Subset(std::initializer_list<int> vars) {
    for (int v : vars) {
        require(v >= 1 && v <= kMaxVars, ErrorKind::InvalidArgument, "variable index out of range: " + std::to_string(v));
        require(!contains(v), ErrorKind::InvalidArgument, "repeated variable in subset: " + std::to_string(v));
        mask_ |= bit(v);
    }
}

int Subset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> Subset::vars() const {
    std::vector<int> out;
    for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

Subset Subset::complement(int n) const noexcept {
    Mask full = (Mask{1} << n) - 1;
    return from_mask(full & ~mask_);
}

// ---- Zeon ---------------------------------------------------------------

Zeon::Zeon(Context ctx) : ctx_(ctx), coeffs_(ctx.size()) {}

Zeon::Zeon(Context ctx, std::vector<Complex> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == ctx_.size(), ErrorKind::InvalidArgument,
            "coefficient table must have 2^n entries");
    for (const auto& c : coeffs_)
        require(std::isfinite(c.real()) && std::isfinite(c.imag()), ErrorKind::InvalidArgument,
                "coefficients must be finite");
}

Zeon Zeon::constant(Context ctx, Complex value) {
    Zeon z(ctx);
    z.coeffs_[0] = value;
    return z;
}

Zeon Zeon::variable(Context ctx, int var) {
    require(var >= 1 && var <= ctx.n(), ErrorKind::InvalidArgument, "variable index out of range");
    Zeon z(ctx);
    z.coeffs_[bit(var)] = 1.0;
    return z;
}

Zeon Zeon::monomial(Context ctx, Subset s, Complex coeff) {
    require(s.mask() <= ctx.full(), ErrorKind::InvalidArgument, "subset exceeds context");
    Zeon z(ctx);
    z.coeffs_[s.mask()] = coeff;
    return z;
}

Zeon Zeon::soul() const {
    Zeon z = *this;
    z.coeffs_[0] = 0.0;
    return z;
}

bool Zeon::is_zero(double tol) const noexcept {
    for (const auto& c : coeffs_)
        if (std::abs(c) >= tol) return false;
    return true;
}

double Zeon::max_abs() const noexcept {
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void Zeon::check_same(const Zeon& other) const {
    require(ctx_ == other.ctx_, ErrorKind::ContextMismatch,
            "context mismatch: n=" + std::to_string(ctx_.n()) + " vs n=" + std::to_string(other.ctx_.n()));
}

Zeon Zeon::operator-() const {
    Zeon z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
}

Zeon& Zeon::operator+=(const Zeon& other) {
    check_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Zeon& Zeon::operator-=(const Zeon& other) {
    check_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Zeon& Zeon::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Zeon& Zeon::operator/=(Complex s) {
    for (auto& c : coeffs_) c /= s;
    return *this;
}

Zeon operator*(const Zeon& a, const Zeon& b) { return multiply(a, b); }

// ---- construction -------------------------------------------------------

Zeon make_zeon(Context ctx, std::span<const std::pair<Subset, Complex>> entries) {
    std::vector<Complex> coeffs(ctx.size());
    std::vector<bool> seen(ctx.size());
    for (const auto& [s, c] : entries) {
        require(s.mask() <= ctx.full(), ErrorKind::InvalidArgument,
                "index " + std::to_string(s.mask()) + " out of range for n=" + std::to_string(ctx.n()));
        require(!seen[s.mask()], ErrorKind::InvalidArgument, "duplicate index " + std::to_string(s.mask()));
        seen[s.mask()] = true;
        coeffs[s.mask()] = c;
    }
    return Zeon(ctx, std::move(coeffs));
}

Zeon make_zeon(Context ctx, std::initializer_list<std::pair<Subset, Complex>> entries) {
    return make_zeon(ctx, std::span<const std::pair<Subset, Complex>>(entries.begin(), entries.size()));
}

Zeon embed(const Zeon& f, Context wider) {
    require(wider.n() >= f.vars(), ErrorKind::ContextMismatch, "cannot embed into a smaller context");
    std::vector<Complex> coeffs(wider.size());
    for (std::size_t m = 0; m < f.size(); ++m) coeffs[m] = f[static_cast<Mask>(m)];
    return Zeon(wider, std::move(coeffs));
}

bool approx_equal(const Zeon& a, const Zeon& b, double tol) {
    if (!(a.context() == b.context())) return false;
    for (std::size_t m = 0; m < a.size(); ++m)
        if (std::abs(a[static_cast<Mask>(m)] - b[static_cast<Mask>(m)]) > tol) return false;
    return true;
}

// ---- products -----------------------------------------------------------

static void check_pair(const Zeon& f, const Zeon& g) {
    require(f.context() == g.context(), ErrorKind::ContextMismatch, "context mismatch in product");
}

Zeon multiply_submask(const Zeon& f, const Zeon& g) {
    check_pair(f, g);
    const Mask full = f.context().full();
    std::vector<Complex> out(f.size());
    for (Mask s = 0;; ++s) {
        Complex acc = 0;
        // a runs over all submasks of s, b is the rest
        for (Mask a = s;; a = (a - 1) & s) {
            acc += f[a] * g[s ^ a];
            if (a == 0) break;
        }
        out[s] = acc;
        if (s == full) break;
    }
    return Zeon(f.context(), std::move(out));
}

namespace {

using Table = std::vector<std::vector<Complex>>;

// Ranked zeta transform: layer k holds the sum over submasks of size k.
Table ranked_zeta(const Zeon& f) {
    const int n = f.vars();
    const std::size_t size = f.size();
    Table t(n + 1, std::vector<Complex>(size));
    for (std::size_t m = 0; m < size; ++m) t[std::popcount(static_cast<Mask>(m))][m] = f[static_cast<Mask>(m)];
    for (auto& layer : t)
        for (int i = 0; i < n; ++i)
            for (std::size_t m = 0; m < size; ++m)
                if (m & (std::size_t{1} << i)) layer[m] += layer[m ^ (std::size_t{1} << i)];
    return t;
}

void moebius(std::vector<Complex>& v, int n) {
    for (int i = 0; i < n; ++i)
        for (std::size_t m = 0; m < v.size(); ++m)
            if (m & (std::size_t{1} << i)) v[m] -= v[m ^ (std::size_t{1} << i)];
}

}  // namespace

Zeon multiply_ranked(const Zeon& f, const Zeon& g) {
    check_pair(f, g);
    const int n = f.vars();
    const std::size_t size = f.size();
    Table zf = ranked_zeta(f);
    Table zg = ranked_zeta(g);
    std::vector<Complex> out(size);
    std::vector<Complex> h(size);
    for (int k = 0; k <= n; ++k) {
        std::fill(h.begin(), h.end(), Complex{});
        for (int i = 0; i <= k; ++i)
            for (std::size_t m = 0; m < size; ++m) h[m] += zf[i][m] * zg[k - i][m];
        moebius(h, n);
        for (std::size_t m = 0; m < size; ++m)
            if (std::popcount(static_cast<Mask>(m)) == k) out[m] = h[m];
    }
    return Zeon(f.context(), std::move(out));
}

Zeon multiply(const Zeon& f, const Zeon& g) {
    return multiply_submask(f, g);
}

Zeon power(const Zeon& f, unsigned m) {
    Zeon result = Zeon::constant(f.context(), 1.0);
    Zeon base = f;
    while (m) {
        if (m & 1U) result = multiply(result, base);
        m >>= 1U;
        if (m) base = multiply(base, base);
    }
    return result;
}

// ---- series -------------------------------------------------------------

namespace {

// sum_{k=0}^{n} a[k] s^k for a nilpotent s; higher powers vanish.
Zeon horner(const Zeon& s, const std::vector<Complex>& a) {
    const int n = s.vars();
    Zeon acc = Zeon::constant(s.context(), a[n]);
    for (int k = n - 1; k >= 0; --k) acc = multiply(acc, s) + a[k];
    return acc;
}

void require_body(const Zeon& f, const char* op) {
    require(std::abs(f.body()) > f.context().tol(), ErrorKind::ZeroBody,
            std::string(op) + " needs a nonzero body");
}

}  // namespace

Zeon invert(const Zeon& f) {
    require_body(f, "inverse");
    const Complex b = f.body();
    std::vector<Complex> a(f.vars() + 1);
    Complex term = 1.0 / b;
    for (auto& c : a) {
        c = term;
        term *= -1.0 / b;
    }
    return horner(f.soul(), a);
}

Zeon exp(const Zeon& f) {
    std::vector<Complex> a(f.vars() + 1);
    Complex term = std::exp(f.body());
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = term;
        term /= static_cast<double>(k + 1);
    }
    return horner(f.soul(), a);
}

Zeon log(const Zeon& f) {
    require_body(f, "logarithm");
    const Complex b = f.body();
    std::vector<Complex> a(f.vars() + 1);
    a[0] = std::log(b);
    Complex pw = 1.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        pw /= b;
        a[k] = (k % 2 ? 1.0 : -1.0) * pw / static_cast<double>(k);
    }
    return horner(f.soul(), a);
}

TrigPair trig(const Zeon& f) {
    const int n = f.vars();
    std::vector<Complex> c(n + 1), s(n + 1);
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        const double sign = (k / 2) % 2 ? -1.0 : 1.0;
        (k % 2 ? s : c)[k] = sign / fact;
    }
    const Zeon soul = f.soul();
    Zeon cs = horner(soul, c);
    Zeon sn = horner(soul, s);
    const Complex b = f.body();
    const Complex cb = std::cos(b), sb = std::sin(b);
    return {cs * cb - sn * sb, sn * cb + cs * sb};
}

Zeon cos(const Zeon& f) { return trig(f).cos; }
Zeon sin(const Zeon& f) { return trig(f).sin; }

// ---- involutions --------------------------------------------------------

Zeon dual(const Zeon& f) {
    const Mask full = f.context().full();
    std::vector<Complex> out(f.size());
    for (Mask m = 0; m <= full; ++m) out[full ^ m] = f[m];
    return Zeon(f.context(), std::move(out));
}

Zeon grade(const Zeon& f) {
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t m = 0; m < out.size(); ++m)
        if (std::popcount(static_cast<Mask>(m)) % 2) out[m] = -out[m];
    return Zeon(f.context(), std::move(out));
}

Zeon grade_at(const Zeon& f, int var) {
    require(var >= 1 && var <= f.vars(), ErrorKind::InvalidArgument, "variable index out of range");
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t m = 0; m < out.size(); ++m)
        if (m & bit(var)) out[m] = -out[m];
    return Zeon(f.context(), std::move(out));
}

Zeon conj(const Zeon& f) {
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out) c = std::conj(c);
    return Zeon(f.context(), std::move(out));
}

Zeon projector(const Zeon& f, int var, Slot slot) {
    require(var >= 1 && var <= f.vars(), ErrorKind::InvalidArgument, "variable index out of range");
    const bool keep_with = slot == Slot::With;
    std::vector<Complex> out(f.size());
    for (std::size_t m = 0; m < out.size(); ++m)
        if (static_cast<bool>(m & bit(var)) == keep_with) out[m] = f[static_cast<Mask>(m)];
    return Zeon(f.context(), std::move(out));
}

Zeon xi_map(const Matrix& b, double tol) {
    require(b.square(), ErrorKind::InvalidArgument, "principal-minor map needs a square matrix");
    require(is_symmetric(b, tol), ErrorKind::InvalidArgument, "principal-minor map needs a symmetric matrix");
    const int n = static_cast<int>(b.rows());
    Context ctx(n, tol);
    std::vector<Complex> out(ctx.size());
    out[0] = 1.0;
    for (Mask m = 1; m <= ctx.full(); ++m) {
        auto idx = Subset::from_mask(m).vars();
        Matrix sub(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = b(idx[r] - 1, idx[c] - 1);
        out[m] = determinant(sub);
    }
    return Zeon(ctx, std::move(out));
}

}  // namespace zeon

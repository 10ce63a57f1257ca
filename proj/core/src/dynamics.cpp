#include "zeon/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "zeon/calculus.hpp"

namespace zeon {

// ---- operator specs -----------------------------------------------------

OpSpec OpSpec::deriv(int var) {
    require(var >= 1 && var <= kMaxVars, ErrorKind::InvalidArgument, "malformed operator: bad variable");
    return OpSpec(Kind::Deriv, var, {});
}

OpSpec OpSpec::mult(int var) {
    require(var >= 1 && var <= kMaxVars, ErrorKind::InvalidArgument, "malformed operator: bad variable");
    return OpSpec(Kind::Mult, var, {});
}

OpSpec OpSpec::scalar(Complex c) { return OpSpec(Kind::Scalar, 0, c); }

OpSpec operator+(const OpSpec& a, const OpSpec& b) {
    OpSpec s(OpSpec::Kind::Sum, 0, {});
    s.children_ = {a, b};
    return s;
}

OpSpec operator-(const OpSpec& a, const OpSpec& b) { return a + Complex(-1.0) * b; }

OpSpec operator*(const OpSpec& a, const OpSpec& b) {
    OpSpec p(OpSpec::Kind::Product, 0, {});
    p.children_ = {a, b};
    return p;
}

OpSpec operator*(Complex s, const OpSpec& a) { return OpSpec::scalar(s) * a; }

int OpSpec::max_var() const noexcept {
    int m = var_;
    for (const auto& c : children_) m = std::max(m, c.max_var());
    return m;
}

OpSpec OpSpec::relabel(int from, int to) const {
    require(to >= 1 && to <= kMaxVars, ErrorKind::InvalidArgument, "malformed operator: bad slot");
    OpSpec out = *this;
    if ((kind_ == Kind::Deriv || kind_ == Kind::Mult) && var_ == from) out.var_ = to;
    for (auto& c : out.children_) c = c.relabel(from, to);
    return out;
}

Zeon OpSpec::apply(const Zeon& f) const {
    switch (kind_) {
        case Kind::Deriv:
            require(var_ <= f.vars(), ErrorKind::InvalidArgument, "malformed operator: variable outside context");
            return derivative(f, var_);
        case Kind::Mult:
            require(var_ <= f.vars(), ErrorKind::InvalidArgument, "malformed operator: variable outside context");
            return Zeon::variable(f.context(), var_) * f;
        case Kind::Scalar:
            return f * value_;
        case Kind::Sum: {
            Zeon acc(f.context());
            for (const auto& c : children_) acc += c.apply(f);
            return acc;
        }
        case Kind::Product: {
            Zeon acc = f;
            for (auto it = children_.rbegin(); it != children_.rend(); ++it) acc = it->apply(acc);
            return acc;
        }
    }
    fail(ErrorKind::Internal, "unknown operator kind");
}

Matrix operator_matrix(const OpSpec& spec, Context ctx) {
    require(spec.max_var() <= ctx.n(), ErrorKind::InvalidArgument, "malformed operator: variable outside context");
    const std::size_t dim = ctx.size();
    Matrix m(dim, dim);
    for (Mask c = 0; c <= ctx.full(); ++c) {
        Zeon img = spec.apply(Zeon::monomial(ctx, Subset::from_mask(c)));
        for (Mask r = 0; r <= ctx.full(); ++r) m(r, c) = img[r];
    }
    return m;
}

std::vector<Complex> to_vector(const Zeon& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

Zeon from_vector(const std::vector<Complex>& v, double tol) {
    require(std::has_single_bit(v.size()) && v.size() >= 2, ErrorKind::InvalidArgument,
            "vector length must be a power of two");
    return Zeon(Context(std::countr_zero(v.size()), tol), v);
}

Zeon apply(const Matrix& op, const Zeon& f) {
    return Zeon(f.context(), op.apply(to_vector(f)));
}

// ---- two-qubit family ---------------------------------------------------

Matrix hamiltonian_2qubit(double c1, double c2, double c3) {
    const auto d1 = OpSpec::deriv(1), d2 = OpSpec::deriv(2);
    const auto x1 = OpSpec::mult(1), x2 = OpSpec::mult(2);
    const double p = c1 + c2, m = c1 - c2;
    OpSpec h = (p * x2 - (2 * c3) * x1) * d1
             + (p * x1 - (2 * c3) * x2) * d2
             + Complex(m) * (x1 * x2)
             + (OpSpec::scalar(m) + (4 * c3) * (x1 * x2)) * (d1 * d2)
             + OpSpec::scalar(c3);
    return operator_matrix(h, Context(2));
}

Matrix hamiltonian_preset(Coupling kind, double c, double c3) {
    switch (kind) {
        case Coupling::Ising: return hamiltonian_2qubit(c, 0, 0);
        case Coupling::XY: return hamiltonian_2qubit(c, c, 0);
        case Coupling::Heisenberg: return hamiltonian_2qubit(c, c, c3);
        case Coupling::QInvariant: return hamiltonian_2qubit(c, -c, c3);
    }
    fail(ErrorKind::InvalidArgument, "unknown coupling");
}

// ---- eigensolver --------------------------------------------------------

Zeon SpectralResult::eigenvector(std::size_t i, double tol) const {
    require(i < vectors.size(), ErrorKind::InvalidArgument, "eigenvector index out of range");
    return from_vector(vectors[i], tol);
}

SpectralResult eigensolve(const Matrix& h, double tol) {
    require(h.square() && h.rows() > 0, ErrorKind::InvalidArgument, "eigensolve needs a square matrix");
    require(is_hermitian(h, 1e-9 * std::max(1.0, h.max_abs())), ErrorKind::NonHermitian,
            "eigensolve needs a Hermitian matrix");
    const std::size_t n = h.rows();
    Matrix a = h;
    Matrix v = Matrix::identity(n);
    auto off = [&] {
        double s = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (r != c) s += std::norm(a(r, c));
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off() >= 1e-12 * std::max(1.0, h.frobenius()); ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g < 1e-300) continue;
                const Complex e = a(p, q) / g;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2 * g);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const Complex jpp = c, jpq = s, jqp = -s * std::conj(e), jqq = c * std::conj(e);
                // A <- A J on columns p, q
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                // A <- J^H A on rows p, q
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = a(q, p) = 0;
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x).real() < a(y, y).real(); });

    SpectralResult out;
    for (auto idx : order) {
        out.eigenvalues.push_back(a(idx, idx).real());
        std::vector<Complex> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v(k, idx);
        out.vectors.push_back(std::move(col));
    }
    const double scale = std::max(1.0, h.max_abs());
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || std::abs(out.eigenvalues[i] - out.eigenvalues[i - 1]) > 1e3 * tol * scale)
            out.degeneracy.emplace_back();
        out.degeneracy.back().push_back(i);
        auto hv = h.apply(out.vectors[i]);
        double r = 0;
        for (std::size_t k = 0; k < n; ++k) r += std::norm(hv[k] - out.eigenvalues[i] * out.vectors[i][k]);
        out.residual = std::max(out.residual, std::sqrt(r));
    }
    return out;
}

Matrix evolution_operator(const Matrix& h, double t) {
    const SpectralResult sr = eigensolve(h);
    const std::size_t n = h.rows();
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex phase = std::exp(Complex(0, -sr.eigenvalues[i] * t));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) u(r, c) += phase * sr.vectors[i][r] * std::conj(sr.vectors[i][c]);
    }
    return u;
}

Zeon evolve(const Matrix& h, const Zeon& f, double t) {
    require(h.rows() == f.size(), ErrorKind::ContextMismatch, "operator dimension does not match the function");
    return apply(evolution_operator(h, t), f);
}

// ---- charges ------------------------------------------------------------

Matrix duality_charge() {
    const auto s1 = OpSpec::deriv(1) + OpSpec::mult(1);
    const auto s2 = OpSpec::deriv(2) + OpSpec::mult(2);
    return operator_matrix(s1 * s2, Context(2));
}

Matrix charge_q() { return operator_matrix(OpSpec::deriv(1) * OpSpec::mult(2), Context(2)); }
Matrix charge_qplus() { return operator_matrix(OpSpec::mult(1) * OpSpec::deriv(2), Context(2)); }

ChargeReport charge_checks(const Matrix& h) {
    require(h.rows() == 4 && h.cols() == 4, ErrorKind::InvalidArgument, "charge checks need a two-qubit operator");
    return {commutator(duality_charge(), h).frobenius(), commutator(charge_q(), h).frobenius(),
            commutator(charge_qplus(), h).frobenius()};
}

// ---- supersymmetric toy systems -----------------------------------------

namespace {

double witten(const SpectralResult& sr, const Matrix& parity, double tol) {
    double idx = 0;
    for (std::size_t i = 0; i < sr.eigenvalues.size(); ++i) {
        if (std::abs(sr.eigenvalues[i]) > tol) continue;
        auto pv = parity.apply(sr.vectors[i]);
        Complex e = 0;
        for (std::size_t k = 0; k < pv.size(); ++k) e += std::conj(sr.vectors[i][k]) * pv[k];
        idx += e.real();
    }
    return idx;
}

Matrix diag_parity(std::size_t dim, auto odd) {
    Matrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) p(i, i) = odd(i) ? -1.0 : 1.0;
    return p;
}

}  // namespace

SusySystem susy_system(SusyKind kind, double omega, double kappa, int cutoff) {
    require(omega > 0, ErrorKind::InvalidArgument, "omega must be positive");
    const Complex amp(0, std::sqrt(omega));
    const Context two(2);
    const auto d1 = OpSpec::deriv(1), d2 = OpSpec::deriv(2);
    const auto x1 = OpSpec::mult(1), x2 = OpSpec::mult(2);
    Matrix h0, q, qp, parity;
    switch (kind) {
        case SusyKind::QubitFermion: {
            // variable 1 is the qubit eta, variable 2 the fermion theta
            q = operator_matrix(amp * (x2 * d1), two);
            qp = operator_matrix(-amp * (x1 * d2), two);
            h0 = operator_matrix(Complex(omega) * (x1 * d1 + x2 * d2 - Complex(2.0) * (x1 * x2 * d1 * d2)), two);
            parity = diag_parity(4, [](std::size_t m) { return (m >> 1) & 1U; });
            break;
        }
        case SusyKind::QubitQubit: {
            q = operator_matrix(amp * (x2 * d1), two);
            qp = operator_matrix(-amp * (x1 * d2), two);
            h0 = anticommutator(qp, q);
            parity = diag_parity(4, [](std::size_t m) { return (m >> 1) & 1U; });
            break;
        }
        case SusyKind::QubitBoson: {
            require(cutoff >= 2, ErrorKind::InvalidArgument, "boson cutoff must be at least 2");
            const auto nb = static_cast<std::size_t>(cutoff);
            Matrix b(nb, nb), nbos(nb, nb);
            for (std::size_t k = 1; k < nb; ++k) b(k - 1, k) = std::sqrt(static_cast<double>(k));
            for (std::size_t k = 0; k < nb; ++k) nbos(k, k) = static_cast<double>(k);
            const Matrix d = operator_matrix(OpSpec::deriv(1), Context(1));
            const Matrix dp = operator_matrix(OpSpec::mult(1), Context(1));
            const Matrix nq = dp * d;
            const Matrix i2 = Matrix::identity(2);
            q = kron(b, dp) * amp;
            qp = kron(b.adjoint(), d) * (-amp);
            h0 = (kron(nbos, i2 - 2.0 * nq) * -1.0 + kron(Matrix::identity(nb), nq)) * omega;
            parity = diag_parity(2 * nb, [](std::size_t i) { return i & 1U; });
            break;
        }
    }
    Matrix h = h0 + (q + qp) * kappa;
    SusySystem sys{kind, h0, h, q, qp, parity, eigensolve(h), 0};
    sys.witten_index = witten(sys.spectrum, parity, 1e-7 * std::max(1.0, omega));
    return sys;
}

}  // namespace zeon

#pragma once

#include <memory>
#include <vector>

#include "zeon/matrix.hpp"
#include "zeon/zeon.hpp"

namespace zeon {

// Expression tree over eta-differential operators. Products apply right to left.
class OpSpec {
public:
    enum class Kind { Deriv, Mult, Scalar, Sum, Product };

    static OpSpec deriv(int var);
    static OpSpec mult(int var);
    static OpSpec scalar(Complex c);

    Kind kind() const noexcept { return kind_; }
    Zeon apply(const Zeon& f) const;
    // Moves every occurrence of variable `from` onto `to` (tensor-slot placement).
    OpSpec relabel(int from, int to) const;
    int max_var() const noexcept;

    friend OpSpec operator+(const OpSpec& a, const OpSpec& b);
    friend OpSpec operator-(const OpSpec& a, const OpSpec& b);
    friend OpSpec operator*(const OpSpec& a, const OpSpec& b);
    friend OpSpec operator*(Complex s, const OpSpec& a);

private:
    OpSpec(Kind kind, int var, Complex value) : kind_(kind), var_(var), value_(value) {}

    Kind kind_;
    int var_ = 0;
    Complex value_{};
    std::vector<OpSpec> children_;
};

// Column m holds the image of the monomial with mask m.
Matrix operator_matrix(const OpSpec& spec, Context ctx);
Zeon apply(const Matrix& op, const Zeon& f);
std::vector<Complex> to_vector(const Zeon& f);
Zeon from_vector(const std::vector<Complex>& v, double tol = kDefaultTol);

Matrix hamiltonian_2qubit(double c1, double c2, double c3);

enum class Coupling { Ising, XY, Heisenberg, QInvariant };
Matrix hamiltonian_preset(Coupling kind, double c, double c3 = 0);

struct SpectralResult {
    std::vector<double> eigenvalues;             // ascending
    std::vector<std::vector<Complex>> vectors;   // unit columns, same order
    std::vector<std::vector<std::size_t>> degeneracy;
    double residual = 0;                         // max ||Hv - lambda v||

    Zeon eigenvector(std::size_t i, double tol = kDefaultTol) const;
};

// Cyclic Jacobi for Hermitian matrices.
SpectralResult eigensolve(const Matrix& h, double tol = kDefaultTol);

Zeon evolve(const Matrix& h, const Zeon& f, double t);
Matrix evolution_operator(const Matrix& h, double t);

Matrix duality_charge();    // (d + d+) on both qubits
Matrix charge_q();          // d (x) d+
Matrix charge_qplus();      // d+ (x) d

struct ChargeReport {
    double duality = 0;
    double q = 0;
    double qplus = 0;
};
ChargeReport charge_checks(const Matrix& h);

enum class SusyKind { QubitFermion, QubitQubit, QubitBoson };

struct SusySystem {
    SusyKind kind;
    Matrix h0;
    Matrix h;       // h0 + kappa (q + qplus)
    Matrix q;
    Matrix qplus;
    Matrix parity;  // +1 on even states, -1 on odd ones
    SpectralResult spectrum;
    double witten_index = 0;
};
SusySystem susy_system(SusyKind kind, double omega, double kappa = 0, int cutoff = 4);

}  // namespace zeon

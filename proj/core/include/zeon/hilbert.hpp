#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zeon/zeon.hpp"

namespace zeon {

Complex scalar_product(const Zeon& f, const Zeon& g);  // conjugate-linear in f
double norm(const Zeon& f);
Zeon normalize(const Zeon& f);

// sum_S (-1)^{|S|} F_S G_{complement S}
Complex omega_form(const Zeon& f, const Zeon& g);

// One variable: F0 G1 - F1 G0.
Complex wedge1(const Zeon& f, const Zeon& g);
// Two variables, splitting off split_var: F = A + eta_k B and the form is wedge1(A, B).
Complex concurrence_form(const Zeon& f, int split_var = 1);
Complex antisymmetric_form2(const Zeon& f, const Zeon& g, int split_var = 1);

enum class BasisKind { Monomial, Trigonometric };

struct BasisSet {
    BasisKind kind;
    std::vector<Zeon> elements;
};
BasisSet basis(Context ctx, BasisKind kind);

// Binary label has qubit 1 leftmost; decimal is that string read as a number.
struct IndexLabel {
    std::string binary;
    unsigned decimal = 0;
    Subset subset;
};
IndexLabel index_from_binary(std::string_view binary);
IndexLabel index_from_decimal(unsigned decimal, int n);
IndexLabel index_from_subset(Subset s, int n);
std::string subset_label(Subset s);  // "0", "1", "24", "1234"

// A(eta, eta') on a doubled context; eta_i is variable i, eta'_i is variable n+i.
struct KernelFunction {
    Zeon a;
    std::string name;
    int n() const noexcept { return a.vars() / 2; }
};
Zeon kernel_apply(const KernelFunction& k, const Zeon& f);

// Single-variable kernels: id, d, dplus, pi0, pi1, sigma3, sigma1, epsilon, hadamard.
KernelFunction named_kernel(std::string_view name);
std::vector<std::string> kernel_names();

}  // namespace zeon

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zeon/matrix.hpp"
#include "zeon/zeon.hpp"

namespace zeon {

// ---- Wronskians ---------------------------------------------------------

// F d_i d_j F - d_i F d_j F
Zeon wronskian(const Zeon& f, int i, int j);

// [[G0, G_i], [G_j, G_ij]]: the body of the Wronski matrix of G.
Matrix wronski_body(const Zeon& g, int i, int j);

// Signed sum over complementary coefficient pairs, each unordered pair once.
Complex invariant_h(const Zeon& f);

struct WronskianEntry {
    int i = 0;
    int j = 0;
    Zeon w;
    // Coefficients of w in the remaining variables, indexed by submask of those
    // variables in increasing order (n=3: {w(F|eta_k=0), Htilde_k};
    // n=4: {w(F|eta_k=eta_l=0), Htilde_k(F|eta_l=0), Htilde_l(F|eta_k=0), Htilde_kl}).
    std::vector<Complex> expansion;
    Complex derivative_part{};  // n=3: w_ij(d_k F)
    Complex closed_form{};      // n=3: H + 2 F_k F_ij; n=4: the closed form of Htilde_kl
    Complex trace_form{};       // n=3: trace identity for Htilde_k
};

struct WronskianSet {
    int n = 0;
    Complex h{};
    std::vector<WronskianEntry> entries;  // (1,2), (1,3), ... lexicographic

    const WronskianEntry& at(int i, int j) const;
};
WronskianSet wronskian_set(const Zeon& f);

// n = 3 helpers; k is the third variable.
Complex restricted_wronskian(const Zeon& f, int k);   // w_ij(F|eta_k=0)
Complex derivative_wronskian(const Zeon& f, int k);   // w_ij(d_k F)
Complex htilde(const Zeon& f, int k);                 // H + 2 F_k F_ij

// ---- hyperdeterminant ---------------------------------------------------

struct Hyperdet3 {
    Complex direct{};
    Complex symmetric{};  // (1/3) sum_k (Htilde_k^2 - 4 w w')
    Complex single{};     // Htilde_1^2 - 4 w_23(F|eta_1=0) w_23(d_1 F)
};
Hyperdet3 hyperdet3_paths(const Zeon& f);
Complex hyperdet3(const Zeon& f);

// ---- factorization ------------------------------------------------------

struct Bipartition {
    Mask left = 0;
    Mask right = 0;
};
// Accepts "12|34", "(12)(34)", "1,2|3".
Bipartition parse_bipartition(const std::string& text, int n);
std::string to_string(Bipartition p);
// Every split of all n variables into two nonempty blocks, left block holding variable 1.
std::vector<Bipartition> all_bipartitions(int n);

enum class FactorMode { Weak, Strong };

struct FactorResult {
    bool factorable = false;
    std::vector<Zeon> factors;  // strong mode only: product reassembles F
    double reassembly_error = 0;
};
FactorResult factor_test(const Zeon& f, Bipartition split, FactorMode mode = FactorMode::Strong);

// log(F / F_0); needs a nonzero body.
Zeon tanglemeter(const Zeon& f);
bool tanglemeter_separable(const Zeon& f, Bipartition split);

// ---- n = 4 invariants ---------------------------------------------------

struct InvariantRecord {
    Complex h{};
    Complex l{}, m{}, n{};
    Complex dxy{}, dxz{}, dxt{};
    Complex w{}, sigma{}, pi{};
};

// 4x4 body matrix of the pair (i,j); pt swaps the off-diagonal blocks.
Matrix body_l_matrix(const Zeon& f, int i, int j, bool partial_transpose = false);
// 3x3 matrix of Wronskian expansion coefficients for the pair (i,j).
Matrix b_matrix(const Zeon& f, int i, int j);
InvariantRecord lmn_invariants(const Zeon& f);

using ZeonMatrix = std::vector<std::vector<Zeon>>;
Zeon zeon_determinant(const ZeonMatrix& m);

struct WeakTest {
    Zeon det;
    Zeon det_pt;
};
ZeonMatrix l_matrix(const Zeon& f, int i, int j, bool partial_transpose = false);
WeakTest weak_test_n4(const Zeon& f, int i, int j);

// ---- monotones ----------------------------------------------------------

struct MonotoneReport {
    int n = 0;
    // n = 2
    double concurrence = 0;
    std::vector<double> v;  // V_i
    std::vector<double> p;  // P_i
    // n = 3
    double tau = 0;
    double meyer_wallach = 0;
    double mu = 0;
    double mu_sigma = 0;   // same quantity through the sigma_y route
    // n = 4
    std::vector<double> f;  // |F_1| .. |F_5|
    double f2_prime = 0;
    double f3 = 0;
};
MonotoneReport monotones(const Zeon& f);

Complex comb_concurrence(const Zeon& f);           // <F^c, F> with F^c = (sy x sy) conj F
Complex sigma_y_pair(const Zeon& f, int i, int j); // <sy^{ij} conj F, F>

// ---- documented deviations ----------------------------------------------

struct Deviation {
    std::string quantity;
    std::string state;
    std::string computed;
    std::string tabulated;
};
// Known disagreements between computed values and published ones; values are
// recomputed on every call.
std::vector<Deviation> known_deviations();

}  // namespace zeon

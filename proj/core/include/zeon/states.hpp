#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeon/zeon.hpp"

namespace zeon::states {

Zeon ghz(int n, int sign = +1);                   // (1 + s eta_1..eta_n)/sqrt2
Zeon w(int n);                                    // sum eta_i / sqrt n
Zeon cluster_w(int n);                            // sum_{i<j} eta_i eta_j, normalized
Zeon ghz_pair(Context ctx, int i, int j, int sign);  // (1 + s eta_i eta_j)/sqrt2
Zeon w_pair(Context ctx, int i, int j, int sign);    // (eta_i + s eta_j)/sqrt2

enum class Family { Phi, Chi, Psi, Lambda, LambdaLiteral };
// n = 4 two-pair families; s1 belongs to the (i,j) part, s2 to the eta_k eta_l part.
Zeon pair_family(Family fam, int i, int j, int s1, int s2);
Zeon phi_a(int j, int k, int l, int sign);
Zeon phi_tilde(int sign);

// SLOCC representatives in natural form; params a, b, c, d as needed.
Zeon psi_rep(int index, std::span<const Complex> params);
int psi_param_count(int index);

// Canonical names: ghz2+, ghz2-, w2+, w2-, ghz3, w3, cw3, ghz4, w4, cw4,
// phi_pp(12), chi_mm(34), psi_pm(13), lambda_pm(ij), lambda_literal_pm(ij),
// phiA+(23,4), phiTilde-, Psi1..Psi9 (parameters passed separately).
Zeon by_name(std::string_view name, std::span<const Complex> params = {});
int variable_count(std::string_view name);
std::vector<std::string> names();

}  // namespace zeon::states

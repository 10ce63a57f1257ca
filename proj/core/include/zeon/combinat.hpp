#pragma once

#include <cstdint>
#include <vector>

#include "zeon/matrix.hpp"
#include "zeon/zeon.hpp"

namespace zeon {

// Ryser inclusion-exclusion with Gray-code column updates.
Complex permanent_ryser(const Matrix& a);

Complex hafnian(const Matrix& a, double tol = kDefaultTol);
Complex pfaffian(const Matrix& a, double tol = kDefaultTol);

// Values come from full integrals in the n-variable algebra, rounded with a guard.
std::int64_t stirling2(int n, int k);
std::int64_t bell(int n);
std::int64_t ordered_bell(int n);

struct SymmetricPolySet {
    Context ctx;
    std::vector<Zeon> e;  // elementary, e[0] = 1
    std::vector<Zeon> h;  // complete homogeneous, h[0] = 1
};
SymmetricPolySet symmetric_polys(Context ctx);

// sum_i eta_i d_i: multiplies each degree-k coefficient by k.
Zeon euler_operator(const Zeon& f);

// prod_{i<j} (x_j - x_i)
Zeon vandermonde(const std::vector<Zeon>& xs);

}  // namespace zeon

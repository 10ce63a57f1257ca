#include "zeon/entangle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include "zeon/calculus.hpp"
#include "zeon/hilbert.hpp"
#include "zeon/states.hpp"

namespace zeon {

namespace {

void require_n(const Zeon& f, int n, const char* what) {
    require(f.vars() == n, ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(n) + " variables");
}

void check_var(const Zeon& f, int v) {
    require(v >= 1 && v <= f.vars(), ErrorKind::InvalidArgument, "variable index out of range");
}

// Variables of 1..n other than those in `skip`, ascending.
std::vector<int> others(int n, Mask skip) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!(skip & bit(v))) out.push_back(v);
    return out;
}

Mask mask_of(const std::vector<int>& vars, unsigned index) {
    Mask m = 0;
    for (std::size_t b = 0; b < vars.size(); ++b)
        if ((index >> b) & 1U) m |= bit(vars[b]);
    return m;
}

Complex at(const Zeon& f, std::initializer_list<int> vars) { return f.coeff(vars); }

// Projects out every monomial containing var (sets eta_var = 0).
Zeon restrict0(const Zeon& f, int var) { return projector(f, var, Slot::Without); }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

}  // namespace

// ---- Wronskians ---------------------------------------------------------

Zeon wronskian(const Zeon& f, int i, int j) {
    check_var(f, i);
    check_var(f, j);
    require(i != j, ErrorKind::InvalidArgument, "Wronskian needs two distinct variables");
    const Zeon di = derivative(f, i);
    const Zeon dj = derivative(f, j);
    return f * derivative(di, j) - di * dj;
}

Matrix wronski_body(const Zeon& g, int i, int j) {
    return Matrix{{g[Mask{0}], g[bit(i)]}, {g[bit(j)], g[bit(i) | bit(j)]}};
}

Complex invariant_h(const Zeon& f) {
    const int n = f.vars();
    const Mask full = f.context().full();
    Complex h{};
    for (Mask s = 0; s <= full; ++s) {
        const int k = std::popcount(s);
        if (2 * k > n) continue;
        if (2 * k == n && !(s & 1U)) continue;
        const Complex term = f[s] * f[full ^ s];
        h += (k % 2 == 0) ? term : -term;
    }
    return h;
}

const WronskianEntry& WronskianSet::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : entries)
        if (e.i == i && e.j == j) return e;
    fail(ErrorKind::InvalidArgument, "no Wronskian for that pair");
}

Complex restricted_wronskian(const Zeon& f, int k) {
    require_n(f, 3, "restricted_wronskian");
    const auto ij = others(3, bit(k));
    return wronskian(f, ij[0], ij[1])[Mask{0}];
}

Complex derivative_wronskian(const Zeon& f, int k) {
    require_n(f, 3, "derivative_wronskian");
    const auto ij = others(3, bit(k));
    return wronskian(derivative(f, k), ij[0], ij[1])[Mask{0}];
}

Complex htilde(const Zeon& f, int k) {
    require_n(f, 3, "htilde");
    const auto ij = others(3, bit(k));
    return invariant_h(f) + 2.0 * f[bit(k)] * f[bit(ij[0]) | bit(ij[1])];
}

WronskianSet wronskian_set(const Zeon& f) {
    const int n = f.vars();
    require(n >= 2 && n <= 4, ErrorKind::InvalidArgument, "Wronskian sets need 2 to 4 variables");
    WronskianSet set;
    set.n = n;
    set.h = invariant_h(f);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            WronskianEntry e{i, j, wronskian(f, i, j), {}, {}, {}, {}};
            const auto rest = others(n, bit(i) | bit(j));
            for (unsigned idx = 0; idx < (1U << rest.size()); ++idx) e.expansion.push_back(e.w[mask_of(rest, idx)]);
            if (n == 3) {
                const int k = rest[0];
                const Zeon b = derivative(f, k);
                e.derivative_part = wronskian(b, i, j)[Mask{0}];
                e.closed_form = set.h + 2.0 * f[bit(k)] * at(f, {i, j});
                const Zeon a = restrict0(f, k);
                e.trace_form = a[Mask{0}] * at(b, {i, j}) + at(a, {i, j}) * b[Mask{0}] - a[bit(i)] * b[bit(j)] -
                               a[bit(j)] * b[bit(i)];
            } else if (n == 4) {
                const int k = rest[0], l = rest[1];
                e.closed_form = set.h + 2.0 * f[bit(k)] * at(f, {i, j, l}) + 2.0 * f[bit(l)] * at(f, {i, j, k}) -
                                2.0 * at(f, {i, k}) * at(f, {j, l}) - 2.0 * at(f, {i, l}) * at(f, {j, k});
            }
            set.entries.push_back(std::move(e));
        }
    }
    return set;
}

// ---- hyperdeterminant ---------------------------------------------------

Hyperdet3 hyperdet3_paths(const Zeon& f) {
    require_n(f, 3, "hyperdet3");
    auto a = [&](int x, int y, int z) { return f[Mask(x | (y << 1) | (z << 2))]; };
    Hyperdet3 out;
    const Complex a000 = a(0, 0, 0), a001 = a(0, 0, 1), a010 = a(0, 1, 0), a011 = a(0, 1, 1);
    const Complex a100 = a(1, 0, 0), a101 = a(1, 0, 1), a110 = a(1, 1, 0), a111 = a(1, 1, 1);
    out.direct = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                 a100 * a100 * a011 * a011 -
                 2.0 * (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                        a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101) +
                 4.0 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111);
    Complex sym{};
    for (int k = 1; k <= 3; ++k) {
        const Complex ht = htilde(f, k);
        sym += ht * ht - 4.0 * restricted_wronskian(f, k) * derivative_wronskian(f, k);
    }
    out.symmetric = sym / 3.0;
    const Complex h1 = htilde(f, 1);
    out.single = h1 * h1 - 4.0 * restricted_wronskian(f, 1) * derivative_wronskian(f, 1);
    return out;
}

Complex hyperdet3(const Zeon& f) { return hyperdet3_paths(f).direct; }

// ---- factorization ------------------------------------------------------

Bipartition parse_bipartition(const std::string& text, int n) {
    std::vector<Mask> blocks;
    Mask cur = 0;
    bool open = false;
    auto close = [&] {
        blocks.push_back(cur);
        cur = 0;
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const int v = ch - '0';
            require(v >= 1 && v <= n, ErrorKind::InvalidArgument, "partition variable out of range: " + std::string(1, ch));
            require(!(cur & bit(v)), ErrorKind::InvalidArgument, "variable repeated in partition");
            cur |= bit(v);
        } else if (ch == '|') {
            require(!open, ErrorKind::InvalidArgument, "'|' inside parentheses");
            close();
        } else if (ch == '(') {
            require(!open && cur == 0, ErrorKind::InvalidArgument, "unbalanced parentheses in partition");
            open = true;
        } else if (ch == ')') {
            require(open, ErrorKind::InvalidArgument, "unbalanced parentheses in partition");
            open = false;
            close();
        } else if (ch != ',' && ch != ' ') {
            fail(ErrorKind::InvalidArgument, std::string("unexpected character in partition: ") + ch);
        }
    }
    require(!open, ErrorKind::InvalidArgument, "unbalanced parentheses in partition");
    if (cur != 0) close();
    require(blocks.size() == 2 && blocks[0] != 0 && blocks[1] != 0, ErrorKind::InvalidArgument,
            "partition must have exactly two nonempty blocks");
    require((blocks[0] & blocks[1]) == 0, ErrorKind::InvalidArgument, "partition blocks overlap");
    return {blocks[0], blocks[1]};
}

std::string to_string(Bipartition p) {
    auto block = [](Mask m) { return subset_label(Subset::from_mask(m)); };
    return "(" + block(p.left) + ")(" + block(p.right) + ")";
}

std::vector<Bipartition> all_bipartitions(int n) {
    require(n >= 2 && n <= kMaxVars, ErrorKind::InvalidArgument, "bipartitions need at least two variables");
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Bipartition> out;
    for (Mask left = 1; left < full; ++left)
        if (left & 1U) out.push_back({left, full ^ left});
    return out;
}

FactorResult factor_test(const Zeon& f, Bipartition split, FactorMode mode) {
    const int n = f.vars();
    const Mask full = f.context().full();
    require(split.left && split.right && !(split.left & split.right) && ((split.left | split.right) & ~full) == 0,
            ErrorKind::InvalidArgument, "invalid partition for this context");
    if (mode == FactorMode::Strong)
        require((split.left | split.right) == full, ErrorKind::InvalidArgument,
                "strong factorization needs a partition of every variable");
    const double tol = f.context().tol();
    const Mask active = split.left | split.right;

    FactorResult res;
    res.factorable = true;
    for (int i = 1; i <= n && res.factorable; ++i) {
        if (!(split.left & bit(i))) continue;
        for (int j = 1; j <= n && res.factorable; ++j) {
            if (!(split.right & bit(j))) continue;
            const Mask pool = active & ~(bit(i) | bit(j));
            for (Mask t = pool;; t = (t - 1) & pool) {
                if (!wronskian(derivative(f, Subset::from_mask(t)), i, j).is_zero(tol)) {
                    res.factorable = false;
                    break;
                }
                if (t == 0) break;
            }
        }
    }
    if (!res.factorable || mode == FactorMode::Weak) return res;

    // Rank-one pivot extraction on M[a][b] = F_{a u b}.
    Mask pa = 0, pb = 0;
    double best = -1;
    for (Mask a = split.left;; a = (a - 1) & split.left) {
        for (Mask b = split.right;; b = (b - 1) & split.right) {
            const double v = std::abs(f[a | b]);
            if (v > best) best = v, pa = a, pb = b;
            if (b == 0) break;
        }
        if (a == 0) break;
    }
    Zeon g(f.context()), h(f.context());
    if (best <= 0) {
        h = Zeon::constant(f.context(), 1.0);
    } else {
        const Complex pivot = f[pa | pb];
        for (Mask a = split.left;; a = (a - 1) & split.left) {
            g += Zeon::monomial(f.context(), Subset::from_mask(a), f[a | pb]);
            if (a == 0) break;
        }
        for (Mask b = split.right;; b = (b - 1) & split.right) {
            h += Zeon::monomial(f.context(), Subset::from_mask(b), f[pa | b] / pivot);
            if (b == 0) break;
        }
    }
    res.reassembly_error = (g * h - f).max_abs();
    require(res.reassembly_error <= std::max(tol, 1e3 * tol * f.max_abs()), ErrorKind::Internal,
            "factor reassembly failed although every Wronskian condition holds");
    res.factors = {std::move(g), std::move(h)};
    return res;
}

Zeon tanglemeter(const Zeon& f) {
    require(std::abs(f.body()) > f.context().tol(), ErrorKind::ZeroBody, "tanglemeter needs a nonzero body");
    return log(f / f.body());
}

bool tanglemeter_separable(const Zeon& f, Bipartition split) {
    const Zeon t = tanglemeter(f);
    const double tol = f.context().tol();
    for (Mask s = 0; s < t.size(); ++s)
        if ((s & split.left) && (s & split.right) && std::abs(t[s]) > tol) return false;
    return true;
}

// ---- n = 4 invariants ---------------------------------------------------

namespace {

std::pair<int, int> remaining_pair(int i, int j) {
    const auto r = others(4, bit(i) | bit(j));
    return {r[0], r[1]};
}

template <class Block>
void place(Block& out, int r0, int c0, const Matrix& m) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r0 + r, c0 + c) = m(r, c);
}

}  // namespace

Matrix body_l_matrix(const Zeon& f, int i, int j, bool partial_transpose) {
    require_n(f, 4, "body_l_matrix");
    require(i != j && i >= 1 && j >= 1 && i <= 4 && j <= 4, ErrorKind::InvalidArgument, "invalid pair");
    const auto [l, k] = remaining_pair(i, j);
    const Zeon dk = derivative(f, k), dl = derivative(f, l);
    Matrix top_right = wronski_body(dk, i, j);
    Matrix bottom_left = wronski_body(dl, i, j);
    if (partial_transpose) std::swap(top_right, bottom_left);
    Matrix out(4, 4);
    place(out, 0, 0, wronski_body(f, i, j));
    place(out, 0, 2, top_right);
    place(out, 2, 0, bottom_left);
    place(out, 2, 2, wronski_body(derivative(dl, k), i, j));
    return out;
}

Matrix b_matrix(const Zeon& f, int i, int j) {
    require_n(f, 4, "b_matrix");
    require(i != j && i >= 1 && j >= 1 && i <= 4 && j <= 4, ErrorKind::InvalidArgument, "invalid pair");
    const auto [k, l] = remaining_pair(i, j);
    // state 0 sets the variable to zero, 1 keeps it, 2 differentiates.
    auto part = [](const Zeon& g, int v, int state) {
        return state == 0 ? restrict0(g, v) : state == 1 ? g : derivative(g, v);
    };
    Matrix b(3, 3);
    for (int si = 0; si < 3; ++si) {
        for (int sj = 0; sj < 3; ++sj) {
            const Zeon g = part(part(f, i, si), j, sj);
            const Mask m = (si == 1 ? bit(i) : 0) | (sj == 1 ? bit(j) : 0);
            b(si, sj) = wronskian(g, k, l)[m];
        }
    }
    return b;
}

InvariantRecord lmn_invariants(const Zeon& f) {
    require_n(f, 4, "lmn_invariants");
    InvariantRecord r;
    r.h = invariant_h(f);
    r.n = determinant(body_l_matrix(f, 1, 2));
    r.m = determinant(body_l_matrix(f, 1, 4));
    r.l = determinant(body_l_matrix(f, 1, 3, true));
    r.dxy = determinant(b_matrix(f, 1, 2));
    r.dxz = determinant(b_matrix(f, 1, 3));
    r.dxt = determinant(b_matrix(f, 1, 4));
    r.w = r.dxy + r.dxz + r.dxt;
    r.sigma = r.l * r.l + r.m * r.m + r.n * r.n;
    r.pi = (r.l - r.m) * (r.m - r.n) * (r.n - r.l);
    return r;
}

Zeon zeon_determinant(const ZeonMatrix& m) {
    const std::size_t n = m.size();
    require(n > 0, ErrorKind::InvalidArgument, "empty matrix");
    for (const auto& row : m) require(row.size() == n, ErrorKind::InvalidArgument, "matrix must be square");
    if (n == 1) return m[0][0];
    Zeon out(m[0][0].context());
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero(0.0)) continue;
        ZeonMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Zeon> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const Zeon term = m[0][c] * zeon_determinant(minor);
        if (c % 2 == 0) out += term;
        else out -= term;
    }
    return out;
}

ZeonMatrix l_matrix(const Zeon& f, int i, int j, bool partial_transpose) {
    require_n(f, 4, "l_matrix");
    require(i != j && i >= 1 && j >= 1 && i <= 4 && j <= 4, ErrorKind::InvalidArgument, "invalid pair");
    const auto [l, k] = remaining_pair(i, j);
    auto w = [&](const Zeon& g) {
        const Zeon gi = derivative(g, i);
        return std::array<Zeon, 4>{g, gi, derivative(g, j), derivative(gi, j)};
    };
    const Zeon dk = derivative(f, k), dl = derivative(f, l);
    auto a = w(f), b = w(dk), c = w(dl), d = w(derivative(dl, k));
    if (partial_transpose) std::swap(b, c);
    ZeonMatrix out(4, std::vector<Zeon>(4, Zeon(f.context())));
    for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
            out[r][col] = a[2 * r + col];
            out[r][col + 2] = b[2 * r + col];
            out[r + 2][col] = c[2 * r + col];
            out[r + 2][col + 2] = d[2 * r + col];
        }
    }
    return out;
}

WeakTest weak_test_n4(const Zeon& f, int i, int j) {
    return {zeon_determinant(l_matrix(f, i, j, false)), zeon_determinant(l_matrix(f, i, j, true))};
}

// ---- monotones ----------------------------------------------------------

Complex sigma_y_pair(const Zeon& f, int i, int j) {
    check_var(f, i);
    check_var(f, j);
    require(i != j, ErrorKind::InvalidArgument, "sigma_y pair needs two distinct variables");
    const Zeon g = conj(f);
    const Context& ctx = f.context();
    const Zeon ei = Zeon::variable(ctx, i), ej = Zeon::variable(ctx, j);
    const Zeon gi = derivative(g, i), gj = derivative(g, j);
    const Zeon flipped = -(derivative(gi, j) + ei * ej * g - ej * gi - ei * gj);
    return scalar_product(flipped, f);
}

Complex comb_concurrence(const Zeon& f) {
    require_n(f, 2, "comb_concurrence");
    return sigma_y_pair(f, 1, 2);
}

namespace {

double meyer_wallach(const Zeon& f) {
    const int n = f.vars();
    double q = 0;
    for (int k = 1; k <= n; ++k) {
        const Zeon a = restrict0(f, k);
        const Zeon b = derivative(f, k);
        const double aa = scalar_product(a, a).real(), bb = scalar_product(b, b).real();
        q += aa * bb - std::norm(scalar_product(a, b));
    }
    return 4.0 * q / n;
}

}  // namespace

MonotoneReport monotones(const Zeon& f) {
    const int n = f.vars();
    require(std::abs(norm(f) - 1.0) < 1e-8, ErrorKind::Unnormalized, "monotones need a normalized state");
    MonotoneReport r;
    r.n = n;
    r.meyer_wallach = meyer_wallach(f);
    if (n == 2) {
        r.concurrence = 2.0 * std::abs(wronskian(f, 1, 2)[Mask{0}]);
        for (int i = 1; i <= 2; ++i) {
            r.v.push_back(2.0 * std::abs(scalar_product(derivative(f, i), f)));
            r.p.push_back(std::abs(scalar_product(f, grade_at(f, i))));
        }
    } else if (n == 3) {
        r.tau = 4.0 * std::abs(hyperdet3(f));
        double canon = 0;
        for (int k = 1; k <= 3; ++k) canon += std::norm(restricted_wronskian(f, k) + derivative_wronskian(f, k));
        r.mu = 8.0 / 3.0 * canon + r.tau;
        double viasy = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) viasy += std::norm(sigma_y_pair(f, i, j));
        r.mu_sigma = 2.0 / 3.0 * viasy + r.tau;
    } else if (n == 4) {
        const InvariantRecord v = lmn_invariants(f);
        const Complex h = v.h, h2 = h * h, h3 = h2 * h, h4 = h2 * h2;
        const Complex f1 = 8.0 * (4.0 * v.w - h3);
        const Complex f2 = 16.0 * (h4 - 4.0 * h * v.w - 4.0 * (h * v.dxt + 4.0 * v.l * v.m));
        const Complex f4 = 16.0 * (h4 - 4.0 * h * v.w - 4.0 * (h * v.dxz + 4.0 * v.l * v.n));
        const Complex f5 = 16.0 * (h4 - 4.0 * h * v.w - 4.0 * (h * v.dxy + 4.0 * v.m * v.n));
        const Complex f3 = 32.0 * (h4 * h2 - 24.0 * h2 * v.sigma - 64.0 * v.pi);
        r.f = {std::abs(f1), std::abs(f2), std::abs(f3), std::abs(f4), std::abs(f5)};
        r.f2_prime = std::abs(f2 + f4 + f5);
        r.f3 = std::abs(f3);
    }
    return r;
}

// ---- documented deviations ----------------------------------------------

std::vector<Deviation> known_deviations() {
    std::vector<Deviation> out;
    const Context c3(3);
    auto e = [&](std::initializer_list<int> v) { return Zeon::monomial(c3, Subset(v)); };
    const Zeon one = Zeon::constant(c3, 1.0);

    const Zeon e3 = (one + e({1}) + e({2}) + e({3})) / 2.0;
    out.push_back({"mu", "(1+e1+e2+e3)/2", fmt(monotones(e3).mu), "0.75"});
    const Zeon e6 = (one + e({3}) + e({1, 2}) + e({1, 2, 3})) / 2.0;
    out.push_back({"mu", "(1+e3+e1e2+e1e2e3)/2", fmt(monotones(e6).mu), fmt(1.0 / 6.0)});

    const Context c2(2);
    out.push_back({"omega_2", "(e1, e2)",
                   fmt(omega_form(Zeon::variable(c2, 1), Zeon::variable(c2, 2)).real()), "1"});

    const Zeon raw = states::phi_a(2, 3, 4, +1) * std::sqrt(3.0);
    out.push_back({"norm with prefactor sqrt(3)/2", "phiA+(23,4)", fmt(norm(raw) * std::sqrt(3.0) / 2.0), "1"});

    const InvariantRecord am = lmn_invariants(states::phi_a(2, 3, 4, -1));
    out.push_back({"W", "phiA-(23,4)", fmt(am.w.real()), fmt(2.0 / 216.0)});

    const Zeon tm = states::phi_tilde(-1);
    out.push_back({"W", "phiTilde-", fmt(lmn_invariants(tm).w.real()), fmt(3.0 / 256.0)});
    out.push_back({"|F2'|", "phiTilde-", fmt(monotones(tm).f2_prime), fmt(9.0 / 16.0)});

    // one tabulated sign per family; the computed sign follows the product of the member signs
    const double pi_unit = std::ldexp(1.0, -11);
    out.push_back({"Pi", "phi_pp(12)", fmt(lmn_invariants(states::pair_family(states::Family::Phi, 1, 2, 1, 1)).pi.real()),
                   fmt(-pi_unit)});
    out.push_back({"Pi", "chi_pm(12)", fmt(lmn_invariants(states::pair_family(states::Family::Chi, 1, 2, 1, -1)).pi.real()),
                   fmt(pi_unit)});
    return out;
}

}  // namespace zeon

#include "zeon/states.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

namespace zeon::states {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Zeon eta(Context ctx, std::initializer_list<int> vars, Complex c = 1.0) {
    return Zeon::monomial(ctx, Subset(vars), c);
}

void check_pair(int i, int j, int n) {
    require(i >= 1 && j >= 1 && i <= n && j <= n && i != j, ErrorKind::InvalidArgument, "invalid variable pair");
}

std::array<int, 2> rest_of(int i, int j) {
    std::array<int, 2> r{};
    int k = 0;
    for (int v = 1; v <= 4; ++v)
        if (v != i && v != j) r[k++] = v;
    return r;
}

}  // namespace

Zeon ghz(int n, int sign) {
    Context ctx(n);
    return (Zeon::constant(ctx, 1.0) + Zeon::monomial(ctx, Subset::from_mask(ctx.full()), double(sign))) / kSqrt2;
}

Zeon w(int n) {
    Context ctx(n);
    Zeon f(ctx);
    for (int i = 1; i <= n; ++i) f += Zeon::variable(ctx, i);
    return f / std::sqrt(double(n));
}

Zeon cluster_w(int n) {
    require(n >= 2, ErrorKind::InvalidArgument, "cluster state needs two variables");
    Context ctx(n);
    Zeon f(ctx);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) f += eta(ctx, {i, j});
    return f / std::sqrt(n * (n - 1) / 2.0);
}

Zeon ghz_pair(Context ctx, int i, int j, int sign) {
    check_pair(i, j, ctx.n());
    return (Zeon::constant(ctx, 1.0) + eta(ctx, {i, j}, double(sign))) / kSqrt2;
}

Zeon w_pair(Context ctx, int i, int j, int sign) {
    check_pair(i, j, ctx.n());
    return (eta(ctx, {i}) + eta(ctx, {j}, double(sign))) / kSqrt2;
}

Zeon pair_family(Family fam, int i, int j, int s1, int s2) {
    Context ctx(4);
    check_pair(i, j, 4);
    if (i > j) std::swap(i, j);
    const auto [k, l] = rest_of(i, j);
    const Zeon kl = eta(ctx, {k, l});
    Zeon first(ctx), second(ctx);
    switch (fam) {
        case Family::Phi: first = w_pair(ctx, i, j, s1); second = ghz_pair(ctx, i, j, s2); break;
        case Family::Chi: first = ghz_pair(ctx, i, j, s1); second = w_pair(ctx, i, j, s2); break;
        case Family::Psi:
        case Family::LambdaLiteral: first = ghz_pair(ctx, i, j, s1); second = ghz_pair(ctx, i, j, s2); break;
        case Family::Lambda: first = w_pair(ctx, i, j, s1); second = w_pair(ctx, i, j, s2); break;
    }
    return (first + kl * second) / kSqrt2;
}

Zeon phi_a(int j, int k, int l, int sign) {
    Context ctx(4);
    require(j != k && j != l && k != l && j >= 1 && k >= 1 && l >= 1 && j <= 4 && k <= 4 && l <= 4,
            ErrorKind::InvalidArgument, "phiA needs three distinct variables");
    const int i = 10 - j - k - l;
    Zeon f = ghz(4, sign) + eta(ctx, {j}) * w_pair(ctx, k, l, +1) + eta(ctx, {k}) * w_pair(ctx, i, l, +1);
    return f / std::sqrt(3.0);
}

Zeon phi_tilde(int sign) { return (ghz(4, sign) + cluster_w(4) * std::sqrt(3.0)) / 2.0; }

int psi_param_count(int index) {
    static constexpr std::array<int, 9> counts{4, 3, 2, 2, 1, 1, 0, 0, 0};
    require(index >= 1 && index <= 9, ErrorKind::InvalidArgument, "representative index must be 1..9");
    return counts[index - 1];
}

Zeon psi_rep(int index, std::span<const Complex> params) {
    const int need = psi_param_count(index);
    require(static_cast<int>(params.size()) == need || params.size() == 4, ErrorKind::InvalidArgument,
            "Psi" + std::to_string(index) + " takes " + std::to_string(need) + " parameters");
    Context ctx(4);
    const Complex I(0, 1);
    auto p = [&](int k) { return k < static_cast<int>(params.size()) ? params[k] : Complex{}; };
    const Complex a = p(0), b = p(1), c = p(2), d = p(3);
    auto e = [&](std::initializer_list<int> v) { return eta(ctx, v); };
    const Zeon one = Zeon::constant(ctx, 1.0);
    const Zeon top = one + e({1, 2, 3, 4});          // exp(eta_1 eta_2 eta_3 eta_4)
    const Zeon pairs = exp(e({1, 2}) + e({3, 4}));   // exp(eta_1 eta_2 + eta_3 eta_4)
    switch (index) {
        case 1:
            return top * ((a + d) / 2.0) + (e({1, 2}) + e({3, 4})) * ((a - d) / 2.0) +
                   (e({1, 3}) + e({2, 4})) * ((b + c) / 2.0) + (e({1, 4}) + e({2, 3})) * ((b - c) / 2.0);
        case 2:
            return top * ((a + c - I) / 2.0) + (e({1, 2}) + e({3, 4})) * ((a - c + I) / 2.0) +
                   (e({1, 3}) + e({2, 4})) * ((b + c + I) / 2.0) + (e({1, 4}) + e({2, 3})) * ((b - c - I) / 2.0) +
                   (e({1}) + e({4}) + e({2, 3, 4}) + e({1, 2, 3}) - e({2}) - e({3}) - e({1, 3, 4}) - e({1, 2, 4})) * (I / 2.0);
        case 3:
            return pairs * (a / 2.0) + (e({1, 3}) + e({2, 4})) * ((b + 1.0) / 2.0) +
                   (e({1, 4}) + e({2, 3})) * ((b - 1.0) / 2.0) + (e({3}) + e({1, 2, 4}) - e({4}) - e({1, 2, 3})) * 0.5;
        case 4:
            return top * ((a + b) / 2.0) + (e({1, 3}) + e({2, 4})) * b + (e({1, 4}) - e({2, 3})) * I +
                   (e({1, 2}) + e({3, 4})) * ((a - b) / 2.0) +
                   (e({2}) + e({3}) + e({1, 3, 4}) + e({1, 2, 4}) - e({1}) - e({4}) - e({2, 3, 4}) - e({1, 2, 3})) * 0.5;
        case 5:
            return pairs * (a / 2.0) - (e({2}) + e({1, 4}) - e({1, 2, 3})) * (2.0 * I);
        case 6:
            return pairs * ((a + I) / 2.0) + (e({1, 3}) + e({2, 4})) * ((a + I + 1.0) / 2.0) +
                   (e({2, 3}) + e({1, 4})) * ((a - I - 1.0) / 2.0) + (e({3}) + e({1, 2, 4})) * ((I + 1.0) / 2.0) +
                   (e({4}) + e({1, 2, 3})) * ((I - 1.0) / 2.0) - (e({1}) + e({2}) + e({2, 3, 4}) + e({1, 3, 4})) * (I / 2.0);
        case 7:
            return e({1, 4}) + e({1, 3}) + e({2, 4}) - e({2, 3}) + e({1, 2}) + e({1, 2, 3, 4}) +
                   (e({1, 4}) + e({1, 3}) - e({2}) - e({2, 3, 4}) - e({1, 2, 4}) + e({1, 2, 3})) * I;
        case 8:
            return (top - e({3}) - e({1, 2, 4})) * ((I + 1.0) / 2.0) +
                   (e({4}) + e({1, 2, 3}) - e({3, 4}) - e({1, 2})) * ((I - 1.0) / 2.0) +
                   (e({2}) + e({1, 4}) + e({1, 3}) + e({2, 3, 4}) + e({1}) + e({2, 3}) + e({2, 4}) + e({1, 3, 4})) * 0.5 -
                   (e({1}) + e({2, 4}) + e({2, 3}) + e({1, 3, 4})) * I;
        case 9:
            return exp(e({1})) * (exp(e({2, 3, 4})) + e({2}) + e({3, 4}) + (e({3}) + e({4}) - e({2, 4}) - e({2, 3})) * I) * 0.5;
        default:
            break;
    }
    fail(ErrorKind::InvalidArgument, "representative index must be 1..9");
}

// ---- names --------------------------------------------------------------

namespace {

int sign_of(char ch) {
    if (ch == 'p' || ch == '+') return +1;
    if (ch == 'm' || ch == '-') return -1;
    fail(ErrorKind::InvalidArgument, std::string("bad sign character '") + ch + "'");
}

// Digits inside "(...)"; commas ignored.
std::vector<int> index_digits(std::string_view s) {
    std::vector<int> out;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch))) out.push_back(ch - '0');
        else if (ch != ',' && ch != ' ')
            fail(ErrorKind::InvalidArgument, "bad index list");
    }
    return out;
}

struct Parsed {
    std::string_view base;
    std::string_view args;
    bool has_args = false;
};

Parsed split_name(std::string_view name) {
    const auto open = name.find('(');
    if (open == std::string_view::npos) return {name, {}, false};
    require(name.back() == ')', ErrorKind::InvalidArgument, "unterminated index list in state name");
    return {name.substr(0, open), name.substr(open + 1, name.size() - open - 2), true};
}

[[noreturn]] void unknown(std::string_view name) {
    fail(ErrorKind::InvalidArgument, "unknown state: " + std::string(name));
}

}  // namespace

Zeon by_name(std::string_view name, std::span<const Complex> params) {
    const auto [base, args, has_args] = split_name(name);
    if (!has_args && params.empty()) {
        if (base == "ghz2+") return ghz(2, +1);
        if (base == "ghz2-") return ghz(2, -1);
        if (base == "w2+") return w_pair(Context(2), 1, 2, +1);
        if (base == "w2-") return w_pair(Context(2), 1, 2, -1);
        if (base == "ghz3") return ghz(3);
        if (base == "w3") return w(3);
        if (base == "cw3") return cluster_w(3);
        if (base == "ghz4") return ghz(4);
        if (base == "w4") return w(4);
        if (base == "cw4") return cluster_w(4);
        if (base == "phiTilde+") return phi_tilde(+1);
        if (base == "phiTilde-") return phi_tilde(-1);
    }
    if (base.size() == 4 && base.substr(0, 3) == "Psi" && std::isdigit(static_cast<unsigned char>(base[3]))) {
        if (!has_args) return psi_rep(base[3] - '0', params);
        require(params.empty(), ErrorKind::InvalidArgument, "Psi parameters given twice");
        std::vector<Complex> parsed;
        std::string item;
        std::istringstream in{std::string(args)};
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                parsed.emplace_back(std::stod(item, &used));
                require(item.find_first_not_of(' ', used) == std::string::npos, ErrorKind::InvalidArgument, "bad number");
            } catch (const std::logic_error&) {
                fail(ErrorKind::InvalidArgument, "bad Psi parameter: " + item);
            }
        }
        return psi_rep(base[3] - '0', parsed);
    }
    if (!has_args) unknown(name);
    const auto idx = index_digits(args);
    if (base == "phiA+" || base == "phiA-") {
        require(idx.size() == 3, ErrorKind::InvalidArgument, "phiA needs (jk,l)");
        return phi_a(idx[0], idx[1], idx[2], base.back() == '+' ? +1 : -1);
    }
    struct Prefix {
        std::string_view text;
        Family fam;
    };
    static constexpr std::array<Prefix, 5> prefixes{{{"lambda_literal_", Family::LambdaLiteral},
                                                     {"lambda_", Family::Lambda},
                                                     {"phi_", Family::Phi},
                                                     {"chi_", Family::Chi},
                                                     {"psi_", Family::Psi}}};
    for (const auto& p : prefixes) {
        if (base.substr(0, p.text.size()) != p.text) continue;
        const auto signs = base.substr(p.text.size());
        if (signs.size() != 2) unknown(name);
        require(idx.size() == 2, ErrorKind::InvalidArgument, "family member needs a pair (ij)");
        const int s1 = sign_of(signs[0]), s2 = sign_of(signs[1]);
        if (p.fam != Family::Phi && p.fam != Family::Chi)
            require(s1 != s2, ErrorKind::InvalidArgument, "this family has opposite signs only");
        return pair_family(p.fam, idx[0], idx[1], s1, s2);
    }
    unknown(name);
}

int variable_count(std::string_view name) {
    const auto base = split_name(name).base;
    if (base.size() >= 4 && base.substr(0, 3) == "ghz") return base[3] - '0';
    if (base.size() >= 2 && base[0] == 'w' && std::isdigit(static_cast<unsigned char>(base[1]))) return base[1] - '0';
    if (base.size() >= 3 && base.substr(0, 2) == "cw") return base[2] - '0';
    return 4;
}

std::vector<std::string> names() {
    std::vector<std::string> out{"ghz2+", "ghz2-", "w2+", "w2-", "ghz3", "w3", "cw3", "ghz4", "w4", "cw4"};
    const char* pairs[] = {"12", "13", "14", "23", "24", "34"};
    for (const char* fam : {"phi_", "chi_"})
        for (const char* s : {"pp", "pm", "mp", "mm"})
            for (const char* ij : pairs) out.push_back(std::string(fam) + s + "(" + ij + ")");
    for (const char* fam : {"psi_", "lambda_", "lambda_literal_"})
        for (const char* s : {"pm", "mp"})
            for (const char* ij : pairs) out.push_back(std::string(fam) + s + "(" + ij + ")");
    for (const char* sgn : {"+", "-"})
        for (const char* jkl : {"12,3", "12,4", "13,2", "13,4", "14,2", "14,3", "23,1", "23,4", "24,1", "24,3", "34,1", "34,2"})
            out.push_back(std::string("phiA") + sgn + "(" + jkl + ")");
    out.push_back("phiTilde+");
    out.push_back("phiTilde-");
    for (int k = 1; k <= 9; ++k) out.push_back("Psi" + std::to_string(k));
    return out;
}

}  // namespace zeon::states

#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "expr.hpp"
#include "report.hpp"
#include "zeon/combinat.hpp"
#include "zeon/dynamics.hpp"
#include "zeon/entangle.hpp"
#include "zeon/hilbert.hpp"
#include "zeon/states.hpp"

namespace zeonctl {

using zeon::Complex;
using zeon::Zeon;

namespace {

std::string complex_text(Complex c) {
    std::ostringstream os;
    os << std::setprecision(12) << c.real();
    if (std::abs(c.imag()) > 0) os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
    return os.str();
}

Zeon load_state(const std::string& src, int n) { return evaluate(*parse(src, n), n); }

// ---- analyze --------------------------------------------------------------

void print_analysis(const Json& r, std::ostream& out) {
    out << "input: " << r["input"].get<std::string>() << "\n";
    out << "n: " << r["n"].get<int>() << "   norm: " << r["norm"].get<double>()
        << (r["normalized"].get<bool>() ? " (normalized)" : "") << "\n";
    out << "coefficients:\n";
    for (const auto& c : r["coefficients"]) {
        const Complex v(c["re"].get<double>(), c["im"].get<double>());
        if (std::abs(v) <= zeon::kDefaultTol) continue;
        out << "  " << c["binary"].get<std::string>() << "  a" << c["decimal"].get<unsigned>() << "  F_"
            << c["subset"].get<std::string>() << " = " << complex_text(v) << "\n";
    }
    auto cj = [](const Json& j) { return complex_text({j["re"].get<double>(), j["im"].get<double>()}); };
    if (!r["wronskians"].is_null()) {
        out << "wronskians (H = " << cj(r["wronskians"]["h"]) << "):\n";
        for (const auto& p : r["wronskians"]["pairs"]) {
            out << "  w" << p["i"].get<int>() << p["j"].get<int>() << ":";
            for (const auto& c : p["expansion"]) out << " " << cj(c);
            out << (p["zero"].get<bool>() ? "  (vanishes)" : "") << "\n";
        }
    }
    out << "invariants:\n";
    for (auto it = r["invariants"].begin(); it != r["invariants"].end(); ++it) {
        if (it.value().contains("re")) out << "  " << it.key() << " = " << cj(it.value()) << "\n";
        else
            for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
                out << "  " << it.key() << "." << jt.key() << " = " << cj(jt.value()) << "\n";
    }
    if (r["monotones"].is_null()) {
        out << "monotones: skipped (state is not normalized; pass --normalize)\n";
    } else {
        out << "monotones:\n";
        for (auto it = r["monotones"].begin(); it != r["monotones"].end(); ++it) {
            out << "  " << it.key() << " =";
            if (it.value().is_array())
                for (const auto& x : it.value()) out << " " << x.get<double>();
            else
                out << " " << it.value().get<double>();
            out << "\n";
        }
    }
    out << "factorization (strong):\n";
    for (const auto& e : r["factorization"])
        out << "  " << e["split"].get<std::string>() << ": " << (e["strong"].get<bool>() ? "separable" : "entangled")
            << "\n";
    out << "documented deviations:\n";
    for (const auto& d : r["deviations"])
        out << "  " << d["quantity"].get<std::string>() << " [" << d["state"].get<std::string>()
            << "]: computed " << d["computed"].get<std::string>() << ", tabulated "
            << d["tabulated"].get<std::string>() << "\n";
}

// ---- spectrum -------------------------------------------------------------

void print_spectrum(const zeon::SpectralResult& s, bool with_vectors, std::ostream& out) {
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        out << "lambda_" << k + 1 << " = " << std::setprecision(12) << s.eigenvalues[k];
        if (with_vectors) out << "   " << format_zeon(s.eigenvector(k), 1e-9);
        out << "\n";
    }
}

Json spectrum_json(const zeon::SpectralResult& s) {
    Json vals = Json::array(), vecs = Json::array();
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        vals.push_back(s.eigenvalues[k]);
        Json v = Json::array();
        for (auto c : s.vectors[k]) v.push_back(complex_json(c));
        vecs.push_back(std::move(v));
    }
    return Json{{"eigenvalues", vals}, {"vectors", vecs}, {"residual", s.residual}};
}

// ---- numbers --------------------------------------------------------------

zeon::Matrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) zeon::fail(zeon::ErrorKind::InvalidArgument, "cannot open matrix file: " + path);
    int n = 0;
    if (!(in >> n) || n < 1 || n > 20) zeon::fail(zeon::ErrorKind::InvalidArgument, "matrix file: bad size line");
    zeon::Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::string tok;
            if (!(in >> tok)) zeon::fail(zeon::ErrorKind::InvalidArgument, "matrix file: too few entries");
            const auto comma = tok.find(',');
            try {
                const double re = std::stod(tok.substr(0, comma));
                const double im = comma == std::string::npos ? 0.0 : std::stod(tok.substr(comma + 1));
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = Complex(re, im);
            } catch (const std::logic_error&) {
                zeon::fail(zeon::ErrorKind::InvalidArgument, "matrix file: bad entry '" + tok + "'");
            }
        }
    }
    return m;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zeonctl: zeon-algebra state analysis"};
    app.require_subcommand(1);

    std::string expr_text, split_text, permanent_file, susy_kind;
    int n = 0;
    bool normalize = false, json = false, weak = false;

    auto* analyze = app.add_subcommand("analyze", "Full entanglement report for a state expression");
    analyze->add_option("expr", expr_text, "State expression")->required();
    analyze->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(1, kMaxCliVars));
    analyze->add_flag("--normalize", normalize, "Normalize before analysis");
    analyze->add_flag("--json", json, "Machine-readable output");

    auto* factorize = app.add_subcommand("factorize", "Test a bipartition for factorization");
    factorize->add_option("expr", expr_text, "State expression")->required();
    factorize->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(1, kMaxCliVars));
    factorize->add_option("--split", split_text, "Partition such as 12|34 or (12)(34)")->required();
    factorize->add_flag("--weak", weak, "Weak test (variables outside the split are shared)");
    factorize->add_flag("--json", json, "Machine-readable output");

    double c1 = 0, c2 = 0, c3 = 0, omega = 1, kappa = 0;
    int cutoff = 4;
    auto* spectrum = app.add_subcommand("spectrum", "Two-qubit or supersymmetric spectra");
    auto* oc1 = spectrum->add_option("--c1", c1, "Coupling c1");
    auto* oc2 = spectrum->add_option("--c2", c2, "Coupling c2");
    auto* oc3 = spectrum->add_option("--c3", c3, "Coupling c3");
    auto* osusy = spectrum->add_option("--susy", susy_kind, "Supersymmetric system: qf, qq or qb")
                      ->check(CLI::IsMember({"qf", "qq", "qb"}));
    spectrum->add_option("--omega", omega, "Frequency")->needs(osusy);
    spectrum->add_option("--kappa", kappa, "Perturbation strength")->needs(osusy);
    spectrum->add_option("--cutoff", cutoff, "Boson truncation")->needs(osusy);
    spectrum->add_flag("--json", json, "Machine-readable output");
    osusy->excludes(oc1)->excludes(oc2)->excludes(oc3);

    int bell_n = -1, ordered_n = -1;
    std::vector<int> stirling;
    auto* numbers = app.add_subcommand("numbers", "Combinatorial numbers from eta-integrals");
    auto* ob = numbers->add_option("--bell", bell_n, "Bell number B_N");
    auto* oo = numbers->add_option("--ordered-bell", ordered_n, "Ordered Bell number");
    auto* os = numbers->add_option("--stirling", stirling, "Stirling number S(N, K)")->expected(2);
    auto* op = numbers->add_option("--permanent", permanent_file, "Matrix file");
    numbers->require_option(1);
    (void)ob, (void)oo, (void)os, (void)op;

    auto* states_cmd = app.add_subcommand("states", "State library");
    auto* list = states_cmd->add_subcommand("list", "List canonical state names");
    states_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const Zeon f = load_state(expr_text, n);
            const Json report = analysis_report(f, {expr_text, n, normalize});
            if (json) out << dump17(report) << "\n";
            else print_analysis(report, out);
        } else if (*factorize) {
            const Zeon f = load_state(expr_text, n);
            const auto split = zeon::parse_bipartition(split_text, n);
            const auto res = zeon::factor_test(f, split, weak ? zeon::FactorMode::Weak : zeon::FactorMode::Strong);
            if (json) {
                Json j{{"input", expr_text}, {"n", n}, {"split", zeon::to_string(split)},
                       {"mode", weak ? "weak" : "strong"}, {"factorable", res.factorable}};
                Json fs = Json::array();
                for (const auto& g : res.factors) fs.push_back(format_zeon(g));
                j["factors"] = fs;
                j["reassembly_error"] = res.reassembly_error;
                out << dump17(j) << "\n";
            } else {
                out << zeon::to_string(split) << " (" << (weak ? "weak" : "strong") << "): "
                    << (res.factorable ? "factorable" : "not factorable") << "\n";
                for (std::size_t k = 0; k < res.factors.size(); ++k)
                    out << "  factor " << k + 1 << ": " << format_zeon(res.factors[k]) << "\n";
                if (!res.factors.empty()) out << "  reassembly error: " << res.reassembly_error << "\n";
            }
        } else if (*spectrum) {
            if (!susy_kind.empty()) {
                const auto kind = susy_kind == "qf"   ? zeon::SusyKind::QubitFermion
                                  : susy_kind == "qq" ? zeon::SusyKind::QubitQubit
                                                      : zeon::SusyKind::QubitBoson;
                const auto sys = zeon::susy_system(kind, omega, kappa, cutoff);
                if (json) {
                    Json j = spectrum_json(sys.spectrum);
                    j["witten_index"] = sys.witten_index;
                    out << dump17(j) << "\n";
                } else {
                    print_spectrum(sys.spectrum, kind != zeon::SusyKind::QubitBoson, out);
                    out << "witten index: " << sys.witten_index << "\n";
                }
            } else {
                const auto s = zeon::eigensolve(zeon::hamiltonian_2qubit(c1, c2, c3));
                if (json) out << dump17(spectrum_json(s)) << "\n";
                else print_spectrum(s, true, out);
            }
        } else if (*numbers) {
            if (bell_n >= 0) out << zeon::bell(bell_n) << "\n";
            else if (ordered_n >= 0) out << zeon::ordered_bell(ordered_n) << "\n";
            else if (!stirling.empty()) out << zeon::stirling2(stirling[0], stirling[1]) << "\n";
            else if (!permanent_file.empty()) out << complex_text(zeon::permanent_ryser(read_matrix(permanent_file))) << "\n";
            else {
                err << "numbers: negative argument\n";
                return kUsage;
            }
        } else if (*list) {
            for (const auto& name : zeon::states::names())
                out << name << "\t" << zeon::states::variable_count(name) << "\n";
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const zeon::Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == zeon::ErrorKind::Internal ? kInternal : kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace zeonctl

#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "zeon/entangle.hpp"
#include "zeon/hilbert.hpp"

namespace zeonctl {

using zeon::Complex;
using zeon::Zeon;

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

namespace {

Json complex_list(const std::vector<Complex>& cs) {
    Json out = Json::array();
    for (auto c : cs) out.push_back(complex_json(c));
    return out;
}

Json real_list(const std::vector<double>& xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(x);
    return out;
}

Json coefficients(const Zeon& f) {
    Json out = Json::array();
    for (zeon::Mask m = 0; m < f.size(); ++m) {
        const auto label = zeon::index_from_subset(zeon::Subset::from_mask(m), f.vars());
        out.push_back(Json{{"binary", label.binary},
                           {"decimal", label.decimal},
                           {"subset", zeon::subset_label(label.subset)},
                           {"re", f[m].real()},
                           {"im", f[m].imag()}});
    }
    return out;
}

Json wronskians(const Zeon& f) {
    if (f.vars() < 2 || f.vars() > 4) return nullptr;
    const auto set = zeon::wronskian_set(f);
    Json pairs = Json::array();
    for (const auto& e : set.entries) {
        Json p{{"i", e.i}, {"j", e.j}, {"zero", e.w.is_zero()}, {"expansion", complex_list(e.expansion)}};
        if (set.n == 3) {
            p["derivative_part"] = complex_json(e.derivative_part);
            p["closed_form"] = complex_json(e.closed_form);
            p["trace_form"] = complex_json(e.trace_form);
        } else if (set.n == 4) {
            p["closed_form"] = complex_json(e.closed_form);
        }
        pairs.push_back(std::move(p));
    }
    return Json{{"h", complex_json(set.h)}, {"pairs", std::move(pairs)}};
}

Json invariants(const Zeon& f) {
    Json out{{"h", complex_json(zeon::invariant_h(f))}};
    if (f.vars() == 3) {
        const auto d = zeon::hyperdet3_paths(f);
        out["hyperdet"] = Json{{"direct", complex_json(d.direct)},
                               {"symmetric", complex_json(d.symmetric)},
                               {"single", complex_json(d.single)}};
    } else if (f.vars() == 4) {
        const auto r = zeon::lmn_invariants(f);
        out["l"] = complex_json(r.l);
        out["m"] = complex_json(r.m);
        out["n"] = complex_json(r.n);
        out["dxy"] = complex_json(r.dxy);
        out["dxz"] = complex_json(r.dxz);
        out["dxt"] = complex_json(r.dxt);
        out["w"] = complex_json(r.w);
        out["sigma"] = complex_json(r.sigma);
        out["pi"] = complex_json(r.pi);
    }
    return out;
}

Json monotone_block(const Zeon& f) {
    if (std::abs(zeon::norm(f) - 1.0) >= 1e-8) return nullptr;
    const auto m = zeon::monotones(f);
    Json out{{"meyer_wallach", m.meyer_wallach}};
    if (m.n == 2) {
        out["concurrence"] = m.concurrence;
        out["v"] = real_list(m.v);
        out["p"] = real_list(m.p);
    } else if (m.n == 3) {
        out["tau"] = m.tau;
        out["mu"] = m.mu;
        out["mu_sigma"] = m.mu_sigma;
    } else if (m.n == 4) {
        out["f"] = real_list(m.f);
        out["f2_prime"] = m.f2_prime;
        out["f3"] = m.f3;
    }
    return out;
}

Json factorization(const Zeon& f) {
    Json out = Json::array();
    if (f.vars() < 2) return out;
    const bool has_body = std::abs(f.body()) > f.context().tol();
    for (const auto& split : zeon::all_bipartitions(f.vars())) {
        const auto res = zeon::factor_test(f, split, zeon::FactorMode::Strong);
        Json entry{{"split", zeon::to_string(split)}, {"strong", res.factorable}};
        entry["tanglemeter_separable"] = has_body ? Json(zeon::tanglemeter_separable(f, split)) : Json(nullptr);
        out.push_back(std::move(entry));
    }
    return out;
}

Json deviations() {
    Json out = Json::array();
    for (const auto& d : zeon::known_deviations())
        out.push_back(Json{{"quantity", d.quantity}, {"state", d.state}, {"computed", d.computed}, {"tabulated", d.tabulated}});
    return out;
}

void write(const Json& j, std::string& out, int indent, int level) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * level), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += std::string(",") + nl;
                first = false;
                out += pad + Json(it.key()).dump() + (indent > 0 ? ": " : ":");
                write(it.value(), out, indent, level + 1);
            }
            out += nl + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += nl;
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += std::string(",") + nl;
                out += pad;
                write(j[k], out, indent, level + 1);
            }
            out += nl + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

Json analysis_report(const Zeon& input, const AnalyzeOptions& opts) {
    const double raw_norm = zeon::norm(input);
    const Zeon f = opts.normalize ? zeon::normalize(input) : input;
    Json out;
    out["input"] = opts.input;
    out["n"] = f.vars();
    out["norm"] = raw_norm;
    out["normalized"] = opts.normalize;
    out["coefficients"] = coefficients(f);
    out["wronskians"] = wronskians(f);
    out["invariants"] = invariants(f);
    out["monotones"] = monotone_block(f);
    out["factorization"] = factorization(f);
    out["deviations"] = deviations();
    return out;
}

std::string dump17(const Json& j, int indent) {
    std::string out;
    write(j, out, indent, 0);
    return out;
}

}  // namespace zeonctl

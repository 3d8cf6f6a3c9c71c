#pragma once

// System-spec files and reports.
//
// A system spec is a JSON document with three blocks:
//
//   {
//     "structure": {"formula": "x1*x2 | x1*x3", "n": 3}            // or
//                  {"truth_table_hex": "e8", "n": 3},
//     "model": {"model": "exchangeable"}                           // or
//              {"model": "weibull", "lambda": [1,2], "alpha": 1}   // or
//              {"model": "order_distribution", "probs": {"132": "1/3", ...}}
//              {"model": "independent", "marginals": [{"dist": "exponential", "rate": 2}, ...]},
//     "options": {"method": "auto", "tol": 1e-10, "samples": 100000, "seed": 0}
//   }
//
// Rational strings ("1/3") are parsed exactly. Reports render exact results
// as rational strings and float results as numbers.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bp/formula.hpp"
#include "bp/indices.hpp"
#include "bp/oracle.hpp"

namespace bp {

using nlohmann::json;

struct SystemSpec {
    StructureFunction structure;
    JointLifetimeModel model;
    EvalOptions options;
    json structure_block;  // normalized blocks kept for round-tripping
    json model_block;
};

inline Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "exact") return Method::Exact;
    if (s == "quadrature") return Method::Quadrature;
    if (s == "closed_form") return Method::ClosedForm;
    if (s == "monte_carlo") return Method::MonteCarlo;
    throw SpecError("options.method must be auto|exact|quadrature|closed_form, got '" + s +
                    "'");
}

namespace detail {

inline Rational rational_from_json(const json& v, const std::string& field) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number()) return Rational(v.get<double>());  // exact dyadic
    throw SpecError(field + " must be a number or a rational string");
}

inline const json& require_field(const json& j, const std::string& name,
                                 const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) throw SpecError(where + "." + name + " is missing");
    return *it;
}

inline StructureFunction parse_structure_block(const json& block, json& normalized) {
    if (!block.is_object()) throw SpecError("structure must be an object");
    const json& jn = require_field(block, "n", "structure");
    if (!jn.is_number_integer()) throw SpecError("structure.n must be an integer");
    const int n = jn.get<int>();
    if (n < 1 || n > kMaxComponents)
        throw SpecError("structure.n must be in [1, " + std::to_string(kMaxComponents) + "]");
    const bool has_formula = block.contains("formula");
    const bool has_hex = block.contains("truth_table_hex");
    if (has_formula == has_hex)
        throw SpecError("structure needs exactly one of formula, truth_table_hex");
    try {
        if (has_formula) {
            const std::string text = block.at("formula").get<std::string>();
            StructureFunction phi = parse_formula(text, n);
            normalized = json{{"formula", text}, {"n", n}};
            return phi;
        }
        const std::string hex = block.at("truth_table_hex").get<std::string>();
        StructureFunction phi = StructureFunction::from_truth_table_hex(n, hex);
        normalized = json{{"n", n}, {"truth_table_hex", hex}};
        return phi;
    } catch (const json::exception&) {
        throw SpecError("structure.formula / structure.truth_table_hex must be strings");
    }
}

inline JointLifetimeModel parse_model_block(const json& block, int n, json& normalized) {
    if (!block.is_object()) throw SpecError("model must be an object");
    const json& kind_field = require_field(block, "model", "model");
    if (!kind_field.is_string()) throw SpecError("model.model must be a string");
    const std::string kind = kind_field.get<std::string>();

    if (kind == "exchangeable") {
        normalized = json{{"model", "exchangeable"}};
        return make_exchangeable(n);
    }
    if (kind == "weibull") {
        const json& jl = require_field(block, "lambda", "model");
        if (!jl.is_array() || jl.empty()) throw SpecError("model.lambda must be a non-empty array");
        std::vector<double> lambdas;
        for (const json& v : jl) {
            if (!v.is_number() || !(v.get<double>() > 0))
                throw SpecError("model.lambda entries must be positive numbers");
            lambdas.push_back(v.get<double>());
        }
        const json& ja = require_field(block, "alpha", "model");
        if (!ja.is_number() || !(ja.get<double>() > 0))
            throw SpecError("model.alpha must be a positive number");
        if (static_cast<int>(lambdas.size()) != n)
            throw SpecError("model.lambda has " + std::to_string(lambdas.size()) +
                            " entries but structure.n = " + std::to_string(n));
        normalized = json{{"model", "weibull"}, {"lambda", lambdas}, {"alpha", ja.get<double>()}};
        return make_independent_weibull(std::move(lambdas), ja.get<double>());
    }
    if (kind == "order_distribution") {
        const json& jp = require_field(block, "probs", "model");
        if (!jp.is_object() || jp.empty())
            throw SpecError("model.probs must be a non-empty object");
        std::map<Permutation, Rational> probs;
        json norm_probs = json::object();
        for (const auto& [key, value] : jp.items()) {
            if (static_cast<int>(key.size()) != n)
                throw SpecError("model.probs key '" + key + "' must list all " +
                                std::to_string(n) + " components");
            Permutation perm;
            for (char c : key) {
                if (c < '1' || c > '0' + n)
                    throw SpecError("model.probs key '" + key + "' has invalid component");
                perm.push_back(static_cast<std::uint8_t>(c - '0'));
            }
            const Rational w = rational_from_json(value, "model.probs['" + key + "']");
            probs[perm] = w;
            norm_probs[key] = rational_to_string(w);
        }
        try {
            JointLifetimeModel model = make_order_distribution(n, std::move(probs));
            normalized = json{{"model", "order_distribution"}, {"probs", norm_probs}};
            return model;
        } catch (const InvalidParameter& e) {
            throw SpecError(std::string("model.probs invalid: ") + e.what());
        }
    }
    if (kind == "independent") {
        const json& jm = require_field(block, "marginals", "model");
        if (!jm.is_array() || jm.empty())
            throw SpecError("model.marginals must be a non-empty array");
        if (static_cast<int>(jm.size()) != n)
            throw SpecError("model.marginals has " + std::to_string(jm.size()) +
                            " entries but structure.n = " + std::to_string(n));
        std::vector<MarginalDistribution> ms;
        json norm = json::array();
        for (const json& item : jm) {
            if (!item.is_object()) throw SpecError("model.marginals entries must be objects");
            const std::string dist =
                require_field(item, "dist", "model.marginals[]").get<std::string>();
            if (dist == "exponential") {
                const json& jr = require_field(item, "rate", "model.marginals[]");
                if (!jr.is_number() || !(jr.get<double>() > 0))
                    throw SpecError("marginal rate must be a positive number");
                ms.push_back(exponential_marginal(jr.get<double>()));
                norm.push_back(json{{"dist", "exponential"}, {"rate", jr.get<double>()}});
            } else if (dist == "weibull") {
                const json& jl = require_field(item, "lambda", "model.marginals[]");
                const json& ja = require_field(item, "alpha", "model.marginals[]");
                if (!jl.is_number() || !(jl.get<double>() > 0) || !ja.is_number() ||
                    !(ja.get<double>() > 0))
                    throw SpecError("marginal weibull lambda/alpha must be positive numbers");
                ms.push_back(weibull_marginal(jl.get<double>(), ja.get<double>()));
                norm.push_back(json{{"dist", "weibull"},
                                    {"lambda", jl.get<double>()},
                                    {"alpha", ja.get<double>()}});
            } else {
                throw SpecError("model.marginals[].dist must be exponential|weibull, got '" +
                                dist + "'");
            }
        }
        normalized = json{{"model", "independent"}, {"marginals", norm}};
        return make_independent_marginals(std::move(ms));
    }
    throw SpecError(
        "model.model must be exchangeable|weibull|order_distribution|independent, got '" +
        kind + "'");
}

inline EvalOptions parse_options_block(const json& parent) {
    EvalOptions opts;
    if (!parent.contains("options")) return opts;
    const json& block = parent.at("options");
    if (!block.is_object()) throw SpecError("options must be an object");
    if (block.contains("method")) {
        if (!block.at("method").is_string()) throw SpecError("options.method must be a string");
        opts.method = method_from_string(block.at("method").get<std::string>());
    }
    if (block.contains("tol")) {
        if (!block.at("tol").is_number() || !(block.at("tol").get<double>() > 0))
            throw SpecError("options.tol must be a positive number");
        opts.tol = block.at("tol").get<double>();
    }
    if (block.contains("samples")) {
        if (!block.at("samples").is_number_integer() ||
            block.at("samples").get<std::int64_t>() < 1)
            throw SpecError("options.samples must be a positive integer");
        opts.samples = block.at("samples").get<std::uint64_t>();
    }
    if (block.contains("seed")) {
        if (!block.at("seed").is_number_integer())
            throw SpecError("options.seed must be an integer");
        opts.seed = block.at("seed").get<std::uint64_t>();
    }
    return opts;
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace detail

inline SystemSpec parse_system_spec(const json& j) {
    if (!j.is_object()) throw SpecError("spec must be a JSON object");
    json structure_block, model_block;
    StructureFunction phi =
        detail::parse_structure_block(detail::require_field(j, "structure", "spec"),
                                      structure_block);
    JointLifetimeModel model =
        detail::parse_model_block(detail::require_field(j, "model", "spec"), phi.n(),
                                  model_block);
    EvalOptions opts = detail::parse_options_block(j);
    return SystemSpec{std::move(phi), std::move(model), opts, std::move(structure_block),
                      std::move(model_block)};
}

inline SystemSpec load_system_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SpecError("spec file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_system_spec(j);
}

inline json system_spec_to_json(const SystemSpec& spec) {
    return json{{"structure", spec.structure_block},
                {"model", spec.model_block},
                {"options", json{{"method", method_name(spec.options.method)},
                                 {"tol", spec.options.tol},
                                 {"samples", spec.options.samples},
                                 {"seed", spec.options.seed}}}};
}

// ---------------------------------------------------------------------------
// analyze

struct AnalysisResult {
    IndexVector bp, b, p, s, tail;
    std::optional<double> symmetry_bp, symmetry_p;  // absent when n = 1
    Method method = Method::Exact;
    bool exact = false;
};

inline json index_vector_to_json(const IndexVector& v) {
    json arr = json::array();
    if (v.is_exact())
        for (const Rational& r : v.exact) arr.push_back(rational_to_string(r));
    else
        for (double x : v.values) arr.push_back(x);
    return arr;
}

inline AnalysisResult analyze(const SystemSpec& spec) {
    AnalysisResult r{barlow_proschan(spec.structure, spec.model, spec.options),
                     structural_b(spec.structure),
                     signature_p(spec.structure, spec.model, spec.options),
                     structural_signature(spec.structure),
                     tail_signature(spec.structure, spec.model, spec.options),
                     std::nullopt,
                     std::nullopt,
                     resolve_method(spec.model, spec.options.method),
                     false};
    for (const IndexVector* v : {&r.bp, &r.b, &r.p, &r.s, &r.tail}) v->validate();
    if (spec.structure.n() >= 2) {
        r.symmetry_bp = symmetry_index(r.bp);
        r.symmetry_p = symmetry_index(r.p);
    }
    r.exact = r.bp.is_exact() && r.p.is_exact() && r.tail.is_exact();
    return r;
}

inline json analysis_to_json(const AnalysisResult& r) {
    json j{{"bp", index_vector_to_json(r.bp)},
           {"b", index_vector_to_json(r.b)},
           {"p", index_vector_to_json(r.p)},
           {"s", index_vector_to_json(r.s)},
           {"tail", index_vector_to_json(r.tail)},
           {"exact", r.exact},
           {"method", method_name(r.method)}};
    j["symmetry_bp"] = r.symmetry_bp ? json(*r.symmetry_bp) : json(nullptr);
    j["symmetry_p"] = r.symmetry_p ? json(*r.symmetry_p) : json(nullptr);
    return j;
}

inline json analyze_report(const SystemSpec& spec) { return analysis_to_json(analyze(spec)); }

namespace detail {

inline std::string cell(const IndexVector& v, std::size_t i) {
    return v.is_exact() ? rational_to_string(v.exact[i]) : format_double(v.values[i]);
}

}  // namespace detail

inline std::string render_analysis_table(const AnalysisResult& r) {
    const int n = r.bp.n;
    std::ostringstream out;
    auto row = [&out](const std::string& a, const std::string& b, const std::string& c,
                      const std::string& d) {
        out << "  ";
        out.width(11);
        out << std::left << a;
        for (const std::string* s : {&b, &c, &d}) {
            out.width(14);
            out << std::left << *s;
        }
        out << "\n";
    };
    row("component", "I_BP", "b", "");
    for (int j = 0; j < n; ++j)
        row(std::to_string(j + 1), detail::cell(r.bp, j), detail::cell(r.b, j), "");
    out << "\n";
    row("k", "p", "s", "tail(k)");
    for (int k = 0; k < n; ++k)
        row(std::to_string(k + 1), detail::cell(r.p, k), detail::cell(r.s, k),
            detail::cell(r.tail, k + 1));
    out << "\n";
    if (r.symmetry_bp) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  H(I_BP) = %.6f\n  H(p)    = %.6f\n", *r.symmetry_bp,
                      *r.symmetry_p);
        out << buf;
    }
    out << "  method = " << method_name(r.method) << ", exact = "
        << (r.exact ? "true" : "false") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyLine {
    std::string quantity;
    std::string analytic;
    std::string oracle;
    double difference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool all_pass = true;

    void add(std::string quantity, std::string analytic, std::string oracle, double diff,
             double tol, bool pass) {
        lines.push_back({std::move(quantity), std::move(analytic), std::move(oracle), diff, tol,
                         pass});
        all_pass = all_pass && pass;
    }
};

namespace detail {

inline void add_exact_rows(VerifyReport& rep, const std::string& name, const IndexVector& a,
                           const IndexVector& o) {
    for (std::size_t i = 0; i < a.exact.size(); ++i) {
        const bool pass = a.exact[i] == o.exact[i];
        const double diff = std::abs(to_double(a.exact[i] - o.exact[i]));
        rep.add(name + "[" + std::to_string(i + 1) + "]", rational_to_string(a.exact[i]),
                rational_to_string(o.exact[i]), diff, 0.0, pass);
    }
}

inline void add_mc_rows(VerifyReport& rep, const std::string& name, const IndexVector& a,
                        const McEstimate& mc) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double tol = 4.0 * mc.standard_error[i] +
                           25.0 / static_cast<double>(mc.samples) + a.tol;
        const double diff = std::abs(a.values[i] - mc.mean[i]);
        rep.add(name + "[" + std::to_string(i + 1) + "] vs mc",
                a.is_exact() ? rational_to_string(a.exact[i]) : format_double(a.values[i]),
                format_double(mc.mean[i]), diff, tol, diff <= tol);
    }
}

inline void add_pair_rows(VerifyReport& rep, const std::string& name, const IndexVector& a,
                          const IndexVector& b, double tol) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double diff = std::abs(a.values[i] - b.values[i]);
        rep.add(name + "[" + std::to_string(i + 1) + "]", format_double(a.values[i]),
                format_double(b.values[i]), diff, tol, diff <= tol);
    }
}

}  // namespace detail

// Cross-checks the analytic indices against every independent path the model
// admits: exact permutation enumeration, the Möbius forms, quadrature (for
// Weibull models), and Monte Carlo replay.
inline VerifyReport verify(const SystemSpec& spec) {
    const StructureFunction& phi = spec.structure;
    const JointLifetimeModel& model = spec.model;
    EvalOptions opts = spec.options;
    VerifyReport rep;

    IndexVector bp = barlow_proschan(phi, model, opts);
    IndexVector p = signature_p(phi, model, opts);

    // Exhaustive permutation oracle (exact models, n small enough).
    const auto* order = std::get_if<OrderDistribution>(&model);
    const bool exact_model = model_has_exact_path(model);
    if (exact_model && phi.n() <= kOrderEnumerationLimit) {
        const OrderDistribution dist =
            order != nullptr ? *order : uniform_order_distribution(phi.n());
        PermutationOracleResult oracle = permutation_oracle(phi, dist);
        detail::add_exact_rows(rep, "bp", bp, oracle.bp);
        detail::add_exact_rows(rep, "p", p, oracle.p);
    }

    // Closed form vs quadrature (Weibull models evaluate both).
    if (std::holds_alternative<IndependentWeibull>(model)) {
        EvalOptions qopts = opts;
        qopts.method = Method::Quadrature;
        IndexVector bp_quad = barlow_proschan(phi, model, qopts);
        detail::add_pair_rows(rep, "bp closed_form vs quadrature", bp, bp_quad, 1e-8);
    }

    // Möbius forms agree with the subset-derivative forms.
    IndexVector bp_mobius = barlow_proschan_mobius(phi, model, opts);
    IndexVector p_mobius = signature_mobius(phi, model, opts);
    if (bp.is_exact() && bp_mobius.is_exact()) {
        detail::add_exact_rows(rep, "bp mobius form", bp_mobius, bp);
        detail::add_exact_rows(rep, "p mobius form", p_mobius, p);
    } else {
        detail::add_pair_rows(rep, "bp mobius form", bp_mobius, bp,
                              10.0 * (bp.tol + bp_mobius.tol) + 1e-12);
        detail::add_pair_rows(rep, "p mobius form", p_mobius, p,
                              10.0 * (p.tol + p_mobius.tol) + 1e-12);
    }

    // Monte Carlo replay.
    auto [mc_bp, mc_p] = mc_indices(phi, model, opts.samples, opts.seed);
    detail::add_mc_rows(rep, "bp", bp, mc_bp);
    detail::add_mc_rows(rep, "p", p, mc_p);
    return rep;
}

inline json verify_to_json(const VerifyReport& rep) {
    json rows = json::array();
    for (const VerifyLine& l : rep.lines)
        rows.push_back(json{{"quantity", l.quantity},
                            {"analytic", l.analytic},
                            {"oracle", l.oracle},
                            {"difference", l.difference},
                            {"tolerance", l.tolerance},
                            {"pass", l.pass}});
    return json{{"checks", rows}, {"all_pass", rep.all_pass}};
}

inline std::string render_verify_table(const VerifyReport& rep) {
    std::ostringstream out;
    auto row = [&out](const std::string& a, const std::string& b, const std::string& c,
                      const std::string& d, const std::string& e, const std::string& f) {
        out << "  ";
        out.width(34);
        out << std::left << a;
        for (const std::string* s : {&b, &c}) {
            out.width(16);
            out << std::left << *s;
        }
        for (const std::string* s : {&d, &e}) {
            out.width(13);
            out << std::left << *s;
        }
        out << f << "\n";
    };
    auto brief = [](double v) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%.3e", v);
        return std::string(buf);
    };
    row("quantity", "analytic", "oracle", "|difference|", "tolerance", "status");
    for (const VerifyLine& l : rep.lines)
        row(l.quantity, l.analytic, l.oracle, brief(l.difference), brief(l.tolerance),
            l.pass ? "PASS" : "FAIL");
    out << (rep.all_pass ? "  all checks passed\n" : "  FAILURES present\n");
    return out.str();
}

// ---------------------------------------------------------------------------
// symmetry

inline json symmetry_report(const SystemSpec& spec) {
    AnalysisResult r = analyze(spec);
    if (!r.symmetry_bp)
        throw NotADistribution("symmetry index needs at least 2 components");
    return json{{"symmetry_bp", *r.symmetry_bp}, {"symmetry_p", *r.symmetry_p}};
}

inline std::string render_symmetry(const json& rep) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "H(I_BP) = %.6f\nH(p)    = %.6f\n",
                  rep.at("symmetry_bp").get<double>(), rep.at("symmetry_p").get<double>());
    return buf;
}

}  // namespace bp

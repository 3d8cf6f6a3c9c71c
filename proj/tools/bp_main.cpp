// bp — Barlow–Proschan importance, signatures, and symmetry for semicoherent
// systems. Subcommands:
//
//   bp analyze  <spec.json> [--method M] [--tol T] [--json out.json]
//   bp verify   <spec.json> [--samples N] [--seed S]
//   bp symmetry <spec.json>
//
// Exit codes: 0 success (verify: all checks pass), 1 verify failures,
// 2 spec/usage errors, 3 numerical failure (quadrature budget exhausted).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bp/bp.hpp"

namespace {

int run_analyze(const std::string& spec_path, const std::string& method,
                double tol, bool tol_set, const std::string& json_path) {
    bp::SystemSpec spec = bp::load_system_spec(spec_path);
    if (!method.empty()) spec.options.method = bp::method_from_string(method);
    if (tol_set) spec.options.tol = tol;
    bp::AnalysisResult result = bp::analyze(spec);
    std::cout << bp::render_analysis_table(result);
    const bp::json report = bp::analysis_to_json(result);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw bp::SpecError("cannot write JSON report to '" + json_path + "'");
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return 0;
}

int run_verify(const std::string& spec_path, std::uint64_t samples, bool samples_set,
               std::uint64_t seed, bool seed_set, const std::string& json_path) {
    bp::SystemSpec spec = bp::load_system_spec(spec_path);
    if (samples_set) spec.options.samples = samples;
    if (seed_set) spec.options.seed = seed;
    bp::VerifyReport report = bp::verify(spec);
    std::cout << bp::render_verify_table(report);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw bp::SpecError("cannot write JSON report to '" + json_path + "'");
        out << bp::verify_to_json(report).dump(2) << "\n";
    }
    return report.all_pass ? 0 : 1;
}

int run_symmetry(const std::string& spec_path) {
    bp::SystemSpec spec = bp::load_system_spec(spec_path);
    std::cout << bp::render_symmetry(bp::symmetry_report(spec));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Barlow-Proschan importance, signatures, and symmetry index"};
    app.require_subcommand(1);

    std::string spec_path, method, json_path;
    double tol = 1e-10;
    std::uint64_t samples = 100000, seed = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "compute all indices for a system spec");
    analyze->add_option("spec", spec_path, "system spec JSON file")->required();
    analyze->add_option("--method", method, "auto|exact|quadrature|closed_form");
    CLI::Option* tol_opt = analyze->add_option("--tol", tol, "quadrature tolerance");
    analyze->add_option("--json", json_path, "write the JSON report to this file");

    CLI::App* verify = app.add_subcommand("verify", "cross-check analytic values vs oracles");
    verify->add_option("spec", spec_path, "system spec JSON file")->required();
    CLI::Option* samples_opt = verify->add_option("--samples", samples, "Monte Carlo samples");
    CLI::Option* seed_opt = verify->add_option("--seed", seed, "Monte Carlo seed");
    verify->add_option("--json", json_path, "write the JSON report to this file");

    CLI::App* symmetry = app.add_subcommand("symmetry", "print H(I_BP) and H(p)");
    symmetry->add_option("spec", spec_path, "system spec JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            return run_analyze(spec_path, method, tol, tol_opt->count() > 0, json_path);
        if (verify->parsed())
            return run_verify(spec_path, samples, samples_opt->count() > 0, seed,
                              seed_opt->count() > 0, json_path);
        return run_symmetry(spec_path);
    } catch (const bp::QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const bp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

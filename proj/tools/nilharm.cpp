#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "nilharm/analysis.hpp"

using namespace nilharm;

namespace {

LieAlgebra resolve_algebra(const RunConfig& cfg) {
    if (!cfg.example.empty()) return catalog_entry(cfg.example).algebra;
    if (!cfg.input_path.empty()) return load_algebra_file(cfg.input_path);
    throw Error("provide --input PATH or --example NAME");
}

int emit(const Json& j, const RunConfig& cfg) {
    std::string text = cfg.pretty ? j.dump(2) : j.dump();
    if (cfg.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw Error("cannot write '" + cfg.out_path + "'");
        out << text << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic analysis on one-parameter metabelian nilmanifolds"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_algebra) {
        if (needs_algebra) {
            sub->add_option("--input", cfg.input_path, "algebra JSON file");
            sub->add_option("--example", cfg.example, "built-in example name");
        }
        sub->add_option("--out", cfg.out_path, "write the report to a file");
        sub->add_flag("--pretty", cfg.pretty, "indent the JSON output");
        bool dummy = false;
        sub->add_flag("--json", dummy, "compact JSON output (default)");
    };

    auto* analyze = app.add_subcommand("analyze", "structure report for an algebra");
    add_common(analyze, true);

    auto* spectrum = app.add_subcommand("spectrum", "spectrum and multiplicities up to a height");
    add_common(spectrum, true);
    spectrum->add_option("--height", cfg.height, "max-norm bound for the dual lattice box");

    auto* verify = app.add_subcommand("verify", "run the intertwining-operator verification suite");
    add_common(verify, true);
    verify->add_option("--grid", cfg.grid, "quadrature grid size (0 = automatic)");
    verify->add_option("--tol", cfg.tol, "tolerance for the floating-point checks");
    verify->add_option("--seed", cfg.seed, "seed for the randomized test family");

    auto* cat = app.add_subcommand("catalog", "list the built-in examples");
    add_common(cat, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            Json j = Json::array();
            for (const auto& e : catalog()) {
                j.push_back({{"name", e.name},
                             {"dim", e.algebra.n},
                             {"notes", e.notes},
                             {"needs_rescale", e.needs_rescale}});
            }
            return emit(j, cfg);
        }
        LieAlgebra g = resolve_algebra(cfg);
        if (analyze->parsed()) return emit(run_analyze(g), cfg);
        if (spectrum->parsed()) return emit(run_spectrum(g, cfg.height), cfg);
        if (verify->parsed()) {
            bool all_pass = false;
            Json j = run_verify(g, cfg, all_pass);
            emit(j, cfg);
            return all_pass ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

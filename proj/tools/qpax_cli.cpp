// Command-line driver for the convergence sweeps, field maps and selftest.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpax/errors.hpp"
#include "qpax/harness.hpp"

namespace {
constexpr int kExitConfig = 2, kExitSolver = 3, kExitSelftest = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qpax::ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary integral solvers for slender ellipses: convergence sweeps and checks"};
    std::string experiment, config_path;
    std::vector<std::string> methods;
    std::vector<int> n_values;
    std::vector<double> alphas;
    int n = 0, eps_count = 0, threads = 0, map_points = 0;
    double eps_min = 0, eps_max = 0, k = 0, map_half_width = 0;
    std::string source, out, fault;
    bool timing = false;

    app.add_option("experiment", experiment,
                   "laplace-convergence | helmholtz-convergence | soft-convergence | angle-sweep | field-map | selftest");
    app.add_option("--config", config_path, "JSON config; keys mirror flag names, flags take precedence");
    auto* o_method = app.add_option("--method", methods, "ptr|mtr|qpax (Laplace), pqr|mpqr|qpax (Helmholtz)")->delimiter(',');
    auto* o_n = app.add_option("--n", n, "N (the grid has 2N nodes)");
    auto* o_nv = app.add_option("--n-values", n_values, "sweep over several N")->delimiter(',');
    auto* o_emin = app.add_option("--eps-min", eps_min);
    auto* o_emax = app.add_option("--eps-max", eps_max);
    auto* o_ecount = app.add_option("--eps-count", eps_count);
    auto* o_k = app.add_option("--k", k, "wavenumber");
    auto* o_src = app.add_option("--source", source, "cos:m, sin:m, mce:m, mse:m, planewave:alpha; join with '+'");
    auto* o_alpha = app.add_option("--alpha", alphas, "plane-wave angle(s) in radians")->delimiter(',');
    auto* o_out = app.add_option("--out", out, "output path (default: stdout)");
    auto* o_timing = app.add_flag("--timing", timing, "record wall-clock runtime_ms (breaks byte reproducibility)");
    auto* o_threads = app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency");
    auto* o_mp = app.add_option("--map-points", map_points, "field-map grid points per axis");
    auto* o_mw = app.add_option("--map-half-width", map_half_width, "field-map half width");
    auto* o_fault = app.add_option("--inject-fault", fault, "selftest fault injection: dct");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        qpax::ExperimentConfig cfg;
        if (!config_path.empty()) qpax::apply_json_config(cfg, read_file(config_path));
        if (!experiment.empty()) cfg.kind = qpax::parse_experiment_kind(experiment);
        else if (config_path.empty()) throw qpax::ConfigError("no experiment given");
        if (o_method->count()) cfg.methods = methods;
        if (o_n->count()) cfg.n = n;
        if (o_nv->count()) cfg.n_values = n_values;
        if (o_emin->count()) cfg.eps_min = eps_min;
        if (o_emax->count()) cfg.eps_max = eps_max;
        if (o_ecount->count()) cfg.eps_count = eps_count;
        if (o_k->count()) cfg.k = k;
        if (o_src->count()) cfg.source = source;
        if (o_alpha->count()) cfg.alphas = alphas;
        if (o_out->count()) cfg.out = out;
        if (o_timing->count()) cfg.timing = timing;
        if (o_threads->count()) cfg.threads = threads;
        if (o_mp->count()) cfg.map_points = map_points;
        if (o_mw->count()) cfg.map_half_width = map_half_width;
        if (o_fault->count()) cfg.inject_fault = fault;

        const auto res = qpax::run_experiment(cfg);
        if (cfg.out.empty()) {
            std::cout << res.csv;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw qpax::ConfigError("cannot write '" + cfg.out + "'");
            f << res.csv;
        }
        if (res.selftest && !res.selftest->all_pass()) return kExitSelftest;
        if (res.any_failure) {
            std::cerr << "warning: one or more cells failed (NA in rel_err_inf); see status column\n";
            return kExitSolver;
        }
        return 0;
    } catch (const qpax::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}

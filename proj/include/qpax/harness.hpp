#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qpax/laplace.hpp"
#include "qpax/mathieu.hpp"

namespace qpax {

// Least-squares slope of log10(err) against log10(eps), keeping points with
// err in [1e-13, 0.5]. Throws ConfigError with fewer than 4 usable points.
double fit_slope(const std::vector<double>& eps, const std::vector<double>& err);

enum class ExperimentKind { laplace_convergence, helmholtz_convergence, soft_convergence, angle_sweep, field_map, selftest };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

// Unset optionals take per-experiment defaults in resolve_config.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::laplace_convergence;
    std::vector<std::string> methods;
    int n = 32;  // N; the grid has 2N nodes
    std::vector<int> n_values;  // optional sweep over N, replaces n
    std::optional<double> eps_min, eps_max;
    std::optional<int> eps_count;
    double k = 2.0;
    std::string source;
    std::vector<double> alphas;
    std::string out;  // empty: standard output
    bool timing = false;  // runtime_ms is 0 unless set, keeping CSV reproducible
    int threads = 0;  // 0: hardware concurrency
    int map_points = 101;
    double map_half_width = 5.0;
    std::string inject_fault;  // selftest only: "dct"
};

// Overlays keys of a JSON object onto cfg. Keys mirror the CLI flag names;
// unknown keys or wrong types throw ConfigError.
void apply_json_config(ExperimentConfig& cfg, const std::string& json_text);

// Fills defaults and validates; throws ConfigError.
ExperimentConfig resolve_config(const ExperimentConfig& cfg);

// Log-spaced, endpoints included, descending.
std::vector<double> epsilon_grid(double eps_min, double eps_max, int count);

// Source grammar: terms joined by '+'; cos:m and sin:m for Laplace,
// mce:m, mse:m and planewave:alpha for Helmholtz.
FourierSource parse_laplace_source(const std::string& text);
ModalIncident parse_modal_source(const std::string& text, double epsilon, double k);

struct ConvergenceRecord {
    std::string method;
    double epsilon = 0;
    int two_n = 0;
    std::optional<double> alpha;
    std::optional<double> rel_err_inf;  // empty on failure
    double runtime_ms = 0;
    std::string status = "ok";
};

inline constexpr const char* kCsvHeader = "method,epsilon,two_n,alpha,rel_err_inf,runtime_ms,status";

std::string format_double(double x);  // 17 significant digits
std::string to_csv(const std::vector<ConvergenceRecord>& records);

struct FieldSample {
    double x = 0, y = 0;
    std::optional<cplx> u;
    double abs_oracle = 0;
    std::string status = "ok";
};

inline constexpr const char* kFieldCsvHeader = "x,y,re_u,im_u,abs_u,abs_u_oracle,status";
std::string field_to_csv(const std::vector<FieldSample>& samples);

struct SelftestCheck {
    std::string name;
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool all_pass() const;
    std::string text() const;
};

SelftestReport run_selftest(const std::string& inject_fault = "");

struct ExperimentResult {
    std::vector<ConvergenceRecord> records;
    std::vector<FieldSample> field;
    std::optional<SelftestReport> selftest;
    std::string csv;  // convergence or field CSV; the selftest table otherwise
    bool any_failure = false;  // a record carries the NA sentinel
};

// Runs every cell of a resolved config; output order is
// (method, alpha, N, epsilon descending) regardless of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Slope of the rel_err_inf column for one method (and alpha, if given).
double fit_records(const std::vector<ConvergenceRecord>& records, const std::string& method,
                   std::optional<double> alpha = std::nullopt);

}  // namespace qpax

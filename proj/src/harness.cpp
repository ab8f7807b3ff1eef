#include "qpax/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "qpax/errors.hpp"
#include "qpax/geometry.hpp"
#include "qpax/helmholtz.hpp"

namespace qpax {

using std::numbers::pi;

double fit_slope(const std::vector<double>& eps, const std::vector<double>& err) {
    if (eps.size() != err.size()) throw ConfigError("fit_slope: size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(err[i] >= 1e-13 && err[i] <= 0.5) || !(eps[i] > 0)) continue;
        const double x = std::log10(eps[i]), y = std::log10(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 4) throw ConfigError("fit_slope: fewer than 4 usable points");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {
const std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::laplace_convergence, "laplace-convergence"},
    {ExperimentKind::helmholtz_convergence, "helmholtz-convergence"},
    {ExperimentKind::soft_convergence, "soft-convergence"},
    {ExperimentKind::angle_sweep, "angle-sweep"},
    {ExperimentKind::field_map, "field-map"},
    {ExperimentKind::selftest, "selftest"},
};

bool is_helmholtz(ExperimentKind k) { return k != ExperimentKind::laplace_convergence && k != ExperimentKind::selftest; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError(what + ": expected an integer, got '" + s + "'");
    return v;
}

double parse_real(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected a number, got '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ConfigError(what + ": expected a number, got '" + s + "'");
    return v;
}

std::pair<std::string, std::string> term_parts(const std::string& term) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw ConfigError("source term '" + term + "' lacks ':'");
    return {term.substr(0, colon), term.substr(colon + 1)};
}
}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
    for (const auto& [k, n] : kKindNames)
        if (name == n) return k;
    throw ConfigError("unknown experiment '" + name + "'");
}

FourierSource parse_laplace_source(const std::string& text) {
    FourierSource f;
    for (const auto& term : split(text, '+')) {
        const auto [name, arg] = term_parts(term);
        const int m = parse_int(arg, "source '" + term + "'");
        if (m < 0) throw ConfigError("source '" + term + "': mode must be nonnegative");
        if (name == "cos") f += FourierSource::cos_mode(m);
        else if (name == "sin") f += FourierSource::sin_mode(m);
        else throw ConfigError("Laplace source term '" + term + "': expected cos:m or sin:m");
    }
    if (f.is_zero()) throw ConfigError("source '" + text + "' is identically zero");
    return f;
}

ModalIncident parse_modal_source(const std::string& text, double epsilon, double k) {
    ModalIncident inc;
    inc.epsilon = epsilon;
    inc.k = k;
    inc.tag = text;
    for (const auto& term : split(text, '+')) {
        const auto [name, arg] = term_parts(term);
        ModalIncident part;
        if (name == "mce" || name == "mse") {
            const int m = parse_int(arg, "source '" + term + "'");
            if (m < 0 || m > 25 || (name == "mse" && m == 0))
                throw ConfigError("source '" + term + "': order out of range (ce 0..25, se 1..25)");
            part = single_mode_incident(name == "mce" ? MathieuFamily::ce : MathieuFamily::se, m, epsilon, k);
        } else if (name == "planewave") {
            const double alpha = parse_real(arg, "source '" + term + "'");
            if (!(alpha >= 0 && alpha <= pi / 2 + 1e-15)) throw ConfigError("source '" + term + "': alpha must lie in [0, pi/2]");
            part = plane_wave_incident(std::min(alpha, pi / 2), k, epsilon);
        } else {
            throw ConfigError("Helmholtz source term '" + term + "': expected mce:m, mse:m or planewave:alpha");
        }
        inc.terms.insert(inc.terms.end(), part.terms.begin(), part.terms.end());
    }
    return inc;
}

void apply_json_config(ExperimentConfig& cfg, const std::string& json_text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    auto need = [](const json& v, bool ok, const std::string& key, const char* type) {
        if (!ok) throw ConfigError("config key '" + key + "' must be " + type + ", got " + v.dump());
    };
    for (const auto& [key, v] : j.items()) {
        if (key == "experiment") {
            need(v, v.is_string(), key, "a string");
            cfg.kind = parse_experiment_kind(v.get<std::string>());
        } else if (key == "method") {
            cfg.methods.clear();
            if (v.is_string()) {
                for (const auto& m : split(v.get<std::string>(), ',')) cfg.methods.push_back(m);
            } else {
                need(v, v.is_array(), key, "a string or an array of strings");
                for (const auto& m : v) {
                    need(m, m.is_string(), key, "a string or an array of strings");
                    cfg.methods.push_back(m.get<std::string>());
                }
            }
        } else if (key == "n") {
            need(v, v.is_number_integer(), key, "an integer");
            cfg.n = v.get<int>();
        } else if (key == "n-values") {
            need(v, v.is_array(), key, "an array of integers");
            cfg.n_values.clear();
            for (const auto& x : v) {
                need(x, x.is_number_integer(), key, "an array of integers");
                cfg.n_values.push_back(x.get<int>());
            }
        } else if (key == "eps-min") {
            need(v, v.is_number(), key, "a number");
            cfg.eps_min = v.get<double>();
        } else if (key == "eps-max") {
            need(v, v.is_number(), key, "a number");
            cfg.eps_max = v.get<double>();
        } else if (key == "eps-count") {
            need(v, v.is_number_integer(), key, "an integer");
            cfg.eps_count = v.get<int>();
        } else if (key == "k") {
            need(v, v.is_number(), key, "a number");
            cfg.k = v.get<double>();
        } else if (key == "source") {
            need(v, v.is_string(), key, "a string");
            cfg.source = v.get<std::string>();
        } else if (key == "alpha") {
            cfg.alphas.clear();
            if (v.is_number()) {
                cfg.alphas.push_back(v.get<double>());
            } else {
                need(v, v.is_array(), key, "a number or an array of numbers");
                for (const auto& x : v) {
                    need(x, x.is_number(), key, "a number or an array of numbers");
                    cfg.alphas.push_back(x.get<double>());
                }
            }
        } else if (key == "out") {
            need(v, v.is_string(), key, "a string");
            cfg.out = v.get<std::string>();
        } else if (key == "timing") {
            need(v, v.is_boolean(), key, "a boolean");
            cfg.timing = v.get<bool>();
        } else if (key == "threads") {
            need(v, v.is_number_integer(), key, "an integer");
            cfg.threads = v.get<int>();
        } else if (key == "map-points") {
            need(v, v.is_number_integer(), key, "an integer");
            cfg.map_points = v.get<int>();
        } else if (key == "map-half-width") {
            need(v, v.is_number(), key, "a number");
            cfg.map_half_width = v.get<double>();
        } else if (key == "inject-fault") {
            need(v, v.is_string(), key, "a string");
            cfg.inject_fault = v.get<std::string>();
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

ExperimentConfig resolve_config(const ExperimentConfig& in) {
    ExperimentConfig c = in;
    const auto kind = c.kind;
    if (kind == ExperimentKind::selftest) {
        if (!c.inject_fault.empty() && c.inject_fault != "dct")
            throw ConfigError("inject-fault: only 'dct' is supported");
        return c;
    }
    if (!c.inject_fault.empty()) throw ConfigError("inject-fault applies to selftest only");

    std::vector<std::string> allowed;
    if (kind == ExperimentKind::laplace_convergence) allowed = {"ptr", "mtr", "qpax"};
    else allowed = {"pqr", "mpqr", "qpax"};
    if (c.methods.empty()) {
        if (kind == ExperimentKind::angle_sweep || kind == ExperimentKind::field_map) c.methods = {"qpax"};
        else c.methods = allowed;
    }
    for (const auto& m : c.methods)
        if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
            throw ConfigError("method '" + m + "' is not available for " + to_string(kind));
    if (kind == ExperimentKind::field_map && c.methods.size() != 1) throw ConfigError("field-map takes exactly one method");

    if (c.n_values.empty()) c.n_values = {c.n};
    for (int n : c.n_values)
        if (n < 2 || n > 4096) throw ConfigError("N must lie in [2, 4096], got " + std::to_string(n));
    std::sort(c.n_values.begin(), c.n_values.end());
    c.n_values.erase(std::unique(c.n_values.begin(), c.n_values.end()), c.n_values.end());

    double lo = 1e-6, hi = 1e-1;
    int count = 12;
    if (kind == ExperimentKind::angle_sweep) lo = 1e-8, hi = 0.9;
    if (kind == ExperimentKind::field_map) lo = hi = 0.01, count = 1;
    c.eps_min = c.eps_min.value_or(lo);
    c.eps_max = c.eps_max.value_or(kind == ExperimentKind::field_map ? *c.eps_min : hi);
    c.eps_count = c.eps_count.value_or(count);
    if (!(*c.eps_min > 0 && *c.eps_max < 1 && *c.eps_min <= *c.eps_max))
        throw ConfigError("epsilon range must satisfy 0 < eps-min <= eps-max < 1");
    if (kind == ExperimentKind::field_map) {
        // one geometry: eps-max
        if (c.map_points < 2 || c.map_points > 1001) throw ConfigError("map-points must lie in [2, 1001]");
        if (!(c.map_half_width > 0)) throw ConfigError("map-half-width must be positive");
    } else {
        if (*c.eps_count < 2) throw ConfigError("eps-count must be at least 2");
        if (!(*c.eps_min < *c.eps_max)) throw ConfigError("eps-min must be below eps-max");
    }
    if (!(c.k > 0) || !std::isfinite(c.k)) throw ConfigError("k must be positive");
    if (c.threads < 0) throw ConfigError("threads must be nonnegative");

    if (kind == ExperimentKind::angle_sweep) {
        if (c.alphas.empty()) c.alphas = {0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
        for (double a : c.alphas)
            if (!(a >= 0 && a <= pi / 2 + 1e-15)) throw ConfigError("alpha must lie in [0, pi/2]");
        std::sort(c.alphas.begin(), c.alphas.end());
        if (!c.source.empty()) throw ConfigError("angle-sweep builds plane-wave sources from alpha; drop 'source'");
    } else {
        if (!c.alphas.empty()) {
            if (!is_helmholtz(kind) || c.alphas.size() != 1 || !c.source.empty())
                throw ConfigError("alpha outside angle-sweep is a single plane-wave angle and excludes 'source'");
            c.source = "planewave:" + format_double(c.alphas.front());
            c.alphas.clear();
        }
        if (c.source.empty()) c.source = kind == ExperimentKind::laplace_convergence ? "cos:4"
                                         : kind == ExperimentKind::field_map     ? "planewave:0"
                                                                                  : "mce:3";
        // validate the grammar now so bad input is a config error, not a cell failure
        if (kind == ExperimentKind::laplace_convergence) parse_laplace_source(c.source);
        else parse_modal_source(c.source, 0.5, c.k);
    }
    return c;
}

std::vector<double> epsilon_grid(double eps_min, double eps_max, int count) {
    if (count == 1) return {eps_max};
    std::vector<double> out;
    const double a = std::log10(eps_min), b = std::log10(eps_max);
    for (int i = 0; i < count; ++i) {
        if (i == 0) out.push_back(eps_max);
        else if (i == count - 1) out.push_back(eps_min);
        else out.push_back(std::pow(10.0, b + (a - b) * i / (count - 1)));
    }
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const std::vector<ConvergenceRecord>& records) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : records) {
        out += r.method + "," + format_double(r.epsilon) + "," + std::to_string(r.two_n) + ",";
        out += (r.alpha ? format_double(*r.alpha) : "NA") + ",";
        out += (r.rel_err_inf ? format_double(*r.rel_err_inf) : "NA") + ",";
        out += format_double(r.runtime_ms) + "," + r.status + "\n";
    }
    return out;
}

std::string field_to_csv(const std::vector<FieldSample>& samples) {
    std::string out = std::string(kFieldCsvHeader) + "\n";
    for (const auto& s : samples) {
        out += format_double(s.x) + "," + format_double(s.y) + ",";
        if (s.u) out += format_double(s.u->real()) + "," + format_double(s.u->imag()) + "," + format_double(std::abs(*s.u));
        else out += "NA,NA,NA";
        out += "," + format_double(s.abs_oracle) + "," + s.status + "\n";
    }
    return out;
}

namespace {

struct Cell {
    std::string method;
    double eps;
    int n;
    std::optional<double> alpha;
};

std::string classify(const std::exception& e) {
    if (dynamic_cast<const OracleError*>(&e)) return "oracle_error";
    if (dynamic_cast<const SingularMatrixError*>(&e)) return "singular_matrix";
    if (dynamic_cast<const SolverError*>(&e)) return "solver_error";
    if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
    return "error";
}

ConvergenceRecord run_cell(const ExperimentConfig& c, const Cell& cell) {
    ConvergenceRecord rec;
    rec.method = cell.method;
    rec.epsilon = cell.eps;
    rec.two_n = 2 * cell.n;
    rec.alpha = cell.alpha;
    try {
        CVector sol, ref;
        bool ill = false;
        double ms = 0;
        if (c.kind == ExperimentKind::laplace_convergence) {
            const FourierSource src = parse_laplace_source(c.source);
            const LaplaceProblem p{cell.eps, src, cell.n};
            const auto exact = analytic_density(src, cell.eps);
            const auto g = build_grid(cell.n);
            ref.resize(g.size());
            for (int i = 0; i < g.size(); ++i) ref(i) = exact(g.nodes[i]);
            const DensitySolution d = cell.method == "ptr"   ? solve_ptr(p)
                                      : cell.method == "mtr" ? solve_mtr(p)
                                                             : solve_qpax_laplace(p);
            sol = d.mu;
            ill = d.ill_conditioned;
            ms = d.runtime_ms;
        } else {
            const std::string text = cell.alpha ? "planewave:" + format_double(*cell.alpha) : c.source;
            const ModalIncident inc = parse_modal_source(text, cell.eps, c.k);
            const BoundaryKind kind =
                c.kind == ExperimentKind::soft_convergence ? BoundaryKind::sound_soft : BoundaryKind::sound_hard;
            const ScatteringProblem p{cell.eps, c.k, kind, make_incident_model(inc), cell.n};
            ref = sample_boundary(analytic_scattering(inc, kind), cell.n);
            const BoundaryFieldSolution s = cell.method == "pqr"    ? solve_pqr(p)
                                            : cell.method == "mpqr" ? solve_mpqr(p)
                                                                    : solve_qpax_helmholtz(p);
            sol = s.values;
            ill = s.ill_conditioned;
            ms = s.runtime_ms;
        }
        const double err = rel_err_inf(sol, ref);
        if (!std::isfinite(err)) throw SolverError("non-finite error");
        rec.rel_err_inf = err;
        rec.runtime_ms = c.timing ? ms : 0.0;
        if (ill) rec.status = "ill_conditioned";
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        rec.status = classify(e);
        rec.rel_err_inf.reset();
    }
    return rec;
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
    std::vector<T> out(count);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(count, threads > 0 ? std::size_t(threads) : hw);
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futs;
    for (std::size_t w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
        }));
    for (auto& fu : futs) fu.get();
    return out;
}

std::vector<FieldSample> run_field_map(const ExperimentConfig& c) {
    const double eps = *c.eps_max;
    const int n = c.n_values.front();
    const ModalIncident inc = parse_modal_source(c.source, eps, c.k);
    const ScatteringProblem p{eps, c.k, BoundaryKind::sound_hard, make_incident_model(inc), n};
    const auto& m = c.methods.front();
    const BoundaryFieldSolution sol = m == "pqr" ? solve_pqr(p) : m == "mpqr" ? solve_mpqr(p) : qpax_sound_hard(p);
    const AnalyticScattering oracle = analytic_scattering(inc, BoundaryKind::sound_hard);
    const int np = c.map_points;
    const double w = c.map_half_width;
    return parallel_map<FieldSample>(std::size_t(np) * np, c.threads, [&](std::size_t idx) {
        FieldSample fs;
        const int i = int(idx % np), j = int(idx / np);
        fs.x = -w + 2 * w * i / (np - 1);
        fs.y = -w + 2 * w * j / (np - 1);
        try {
            fs.u = evaluate_exterior_field(sol, p, {{fs.x, fs.y}}).front();
            fs.abs_oracle = std::abs(oracle.total_field(fs.x, fs.y));
        } catch (const DomainError&) {
            fs.status = "refused";
            fs.abs_oracle = 0;
        }
        return fs;
    });
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const ExperimentConfig c = resolve_config(cfg);
    ExperimentResult res;
    if (c.kind == ExperimentKind::selftest) {
        res.selftest = run_selftest(c.inject_fault);
        res.csv = res.selftest->text();
        return res;
    }
    if (c.kind == ExperimentKind::field_map) {
        res.field = run_field_map(c);
        res.csv = field_to_csv(res.field);
        return res;
    }
    std::vector<Cell> cells;
    const auto eps = epsilon_grid(*c.eps_min, *c.eps_max, *c.eps_count);
    std::vector<std::optional<double>> alphas;
    if (c.kind == ExperimentKind::angle_sweep)
        for (double a : c.alphas) alphas.push_back(a);
    else
        alphas.push_back(std::nullopt);
    for (const auto& m : c.methods)
        for (const auto& a : alphas)
            for (int n : c.n_values)
                for (double e : eps) cells.push_back({m, e, n, a});
    res.records = parallel_map<ConvergenceRecord>(cells.size(), c.threads,
                                                  [&](std::size_t i) { return run_cell(c, cells[i]); });
    res.any_failure = std::any_of(res.records.begin(), res.records.end(),
                                  [](const ConvergenceRecord& r) { return !r.rel_err_inf.has_value(); });
    res.csv = to_csv(res.records);
    return res;
}

double fit_records(const std::vector<ConvergenceRecord>& records, const std::string& method, std::optional<double> alpha) {
    std::vector<double> e, r;
    for (const auto& rec : records) {
        if (rec.method != method || !rec.rel_err_inf) continue;
        if (alpha && (!rec.alpha || std::abs(*rec.alpha - *alpha) > 1e-12)) continue;
        e.push_back(rec.epsilon);
        r.push_back(*rec.rel_err_inf);
    }
    return fit_slope(e, r);
}

// ---------------------------------------------------------------------------
// selftest

bool SelftestReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.pass; });
}

std::string SelftestReport::text() const {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-52s %12s %10s  %s\n", "check", "measured", "tolerance", "result");
    out += buf;
    int passed = 0;
    for (const auto& c : checks) {
        std::snprintf(buf, sizeof buf, "%-52s %12.3e %10.1e  %s\n", c.name.c_str(), c.measured, c.tolerance,
                      c.pass ? "PASS" : "FAIL");
        out += buf;
        passed += c.pass;
    }
    std::snprintf(buf, sizeof buf, "selftest: %d/%zu checks passed\n", passed, checks.size());
    out += buf;
    return out;
}

namespace {

void add(SelftestReport& r, std::string name, double measured, double tol) {
    r.checks.push_back({std::move(name), measured, tol, std::isfinite(measured) && measured <= tol});
}

CVector sample(const QuadratureGrid& g, const std::function<cplx(double)>& f) {
    CVector v(g.size());
    for (int i = 0; i < g.size(); ++i) v(i) = f(g.nodes[i]);
    return v;
}

double radial_residual(const MathieuBasis& b, int kind, double xi) {
    // second derivative by a 4th-order difference of the analytic first derivative
    const double h = 5e-4;
    cplx d[5];
    for (int i = 0; i < 5; ++i) d[i] = radial_mathieu(kind, b, xi + (i - 2) * h).deriv;
    const cplx f = radial_mathieu(kind, b, xi).value;
    const cplx d2 = (d[0] - 8.0 * d[1] + 8.0 * d[3] - d[4]) / (12 * h);
    const double scale = (std::abs(b.a) + 2 * b.q * std::cosh(2 * xi)) * std::abs(f);
    return std::abs(d2 - (b.a - 2 * b.q * std::cosh(2 * xi)) * f) / scale;
}

}  // namespace

SelftestReport run_selftest(const std::string& inject_fault) {
    SelftestReport r;
    // spectral transforms
    {
        double wc = 0, ws = 0;
        for (int n : {4, 16, 32, 64, 128}) {
            RMatrix c = dct_matrix(n);
            if (inject_fault == "dct" && n == 32) c(1, 2) += 1e-6;
            const RMatrix s = dst_matrix(n);
            wc = std::max(wc, (c * c - RMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
            ws = std::max(ws, (s * s - RMatrix::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff());
        }
        add(r, "DCT involution, N in {4,16,32,64,128}", wc, 1e-13);
        add(r, "DST involution, N in {4,16,32,64,128}", ws, 1e-13);
    }
    {
        double worst = 0;
        for (int n : {4, 16, 32}) {
            const auto g = build_grid(n);
            const RMatrix le = l1_even(n), lo = l1_odd(n);
            for (int m = 0; m <= n; ++m) {
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                for (int kind = 0; kind < 2; ++kind) {
                    auto f = [&](double s) { return cplx(kind == 0 ? std::cos(m * s) : std::sin(m * s)); };
                    const double lam = kind == 0 ? -sign * m : sign * m;
                    auto p = parity_split(sample(g, f), g);
                    p.even = le * p.even;
                    p.odd = lo * p.odd;
                    worst = std::max(worst, (parity_recombine(p, g) - lam * sample(g, f)).cwiseAbs().maxCoeff());
                }
            }
        }
        add(r, "L1 eigenrelations, m <= N", worst, 1e-11);
    }
    {
        double worst = 0;
        for (int n : {8, 32}) {
            const auto w = kress_weights(n);
            const auto g = build_grid(n);
            for (int m = -(n - 1); m <= n - 1; ++m) {
                const CVector e = sample(g, [m](double t) { return std::exp(cplx(0, m * t)); });
                const double lam = m == 0 ? 0.0 : -2 * pi / std::abs(m);
                for (int i = 0; i < 2 * n; ++i) {
                    cplx acc = 0;
                    for (int j = 0; j < 2 * n; ++j) acc += w[kress_index(i, j, n)] * e(j);
                    worst = std::max(worst, std::abs(acc - lam * e(i)));
                }
            }
        }
        add(r, "Kress log-kernel Fourier identity, |m| < N", worst, 1e-10);
    }
    // kernels
    {
        double worst = 0;
        for (double eps : {0.5, 0.1, 1e-3})
            for (int n : {16, 32}) {
                const EllipseShape e(eps);
                for (int i = 0; i < 2 * n; ++i)
                    for (int j = 0; j < 2 * n; ++j) {
                        if (i == j) continue;
                        const double s = i * pi / n - pi / 2, t = j * pi / n - pi / 2;
                        const cplx a = kress_k1(s, t, e, 2.0) * std::log(4 * std::pow(std::sin((s - t) / 2), 2)) +
                                       kress_k2(s, t, e, 2.0);
                        const cplx b = helmholtz_kernel(s, t, e, 2.0);
                        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
                    }
            }
        add(r, "kernel splitting K1 ln(4 sin^2) + K2 = K", worst, 1e-12);
    }
    {
        double worst = 0;
        for (double eps : {0.5, 0.1}) {
            const EllipseShape e(eps);
            constexpr int M = 2048;
            for (double s : {-1.2, 0.0, 0.7, 2.5}) {
                double acc = 0;
                for (int j = 0; j < M; ++j) acc += laplace_kernel(s, s + 2 * pi * j / M, e);
                worst = std::max(worst, std::abs(acc * 2 * pi / M + 0.5));
            }
        }
        add(r, "integral of K^L over a period = -1/2", worst, 1e-10);
    }
    // Mathieu oracle
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0, 2 * pi);
        double ang = 0, rad = 0, wr = 0;
        for (double q : {0.25, 0.96})
            for (auto fam : {MathieuFamily::ce, MathieuFamily::se})
                for (int m = (fam == MathieuFamily::ce ? 0 : 1); m <= 8; ++m) {
                    const auto b = mathieu_basis(fam, m, q);
                    for (int i = 0; i < 20; ++i) {
                        const double eta = u(rng);
                        ang = std::max(ang, std::abs(b.angular_d2(eta) + (b.a - 2 * q * std::cos(2 * eta)) * b.angular(eta)));
                    }
                    for (double xi : {0.2, 0.8, 1.4})
                        for (int kind : {1, 3}) rad = std::max(rad, radial_residual(b, kind, xi));
                    for (double xi : {0.5, 1.0, 2.0}) {
                        const auto r1 = radial_mathieu(1, b, xi), r3 = radial_mathieu(3, b, xi);
                        wr = std::max(wr, std::abs(r1.value * r3.deriv - r1.deriv * r3.value - cplx(0, 2 / pi)));
                    }
                }
        add(r, "Mathieu angular ODE residual", ang, 1e-8);
        add(r, "Mathieu radial ODE residual (scaled)", rad, 1e-8);
        add(r, "Mathieu Wronskian W{Mc1, Mc3} = 2i/pi", wr, 1e-9);
    }
    {
        double hard = 0, soft = 0;
        for (double eps : {0.3, 1e-2}) {
            const auto inc = plane_wave_incident(0.3, 2.0, eps);
            const auto h = analytic_scattering(inc, BoundaryKind::sound_hard);
            const auto s = analytic_scattering(inc, BoundaryKind::sound_soft);
            const double c = focal_c(eps), xb = xi_boundary(eps);
            double scale = 0, dn = 0;
            for (int i = 0; i < 64; ++i) {
                const double eta = 2 * pi * i / 64 + 0.01, d = 1e-3;
                cplx f[7];
                for (int j = 0; j < 7; ++j) {
                    const Point p = from_elliptic({xb + (j - 3) * d, eta}, c);
                    f[j] = h.total_field(p.x, p.y);
                }
                dn = std::max(dn, std::abs((45.0 * (f[4] - f[2]) - 9.0 * (f[5] - f[1]) + (f[6] - f[0])) / (60.0 * d)));
                scale = std::max(scale, std::abs(f[3]));
                const Point p = from_elliptic({xb, eta}, c);
                soft = std::max(soft, std::abs(s.total_field(p.x, p.y)));
            }
            hard = std::max(hard, dn / scale);
        }
        add(r, "oracle sound-hard normal derivative on boundary", hard, 1e-7);
        add(r, "oracle sound-soft total field on boundary", soft, 1e-7);
    }
    {
        double worst = 0;
        for (auto kind : {BoundaryKind::sound_hard, BoundaryKind::sound_soft})
            for (auto fam : {MathieuFamily::ce, MathieuFamily::se}) {
                const auto inc = single_mode_incident(fam, 2, 0.5, 2.0);
                const ScatteringProblem p{0.5, 2.0, kind, make_incident_model(inc), 64};
                worst = std::max(worst, rel_err_inf(solve_pqr(p).values, sample_boundary(analytic_scattering(inc, kind), 64)));
            }
        add(r, "PQR vs Mathieu solution, eps=0.5, 2N=128", worst, 1e-6);
    }
    return r;
}

}  // namespace qpax

#include "qpax/helmholtz.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"
#include "qpax/laplace.hpp"

namespace qpax {

using std::numbers::pi;

namespace {
using clock = std::chrono::steady_clock;

double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

void check_problem(const ScatteringProblem& p) {
    if (!(p.epsilon > 0 && p.epsilon < 1)) throw DomainError("scattering problem: epsilon must lie in (0,1)");
    if (!(p.k > 0) || !std::isfinite(p.k)) throw DomainError("scattering problem: k must be positive");
    if (p.n < 2) throw ConfigError("scattering problem: N must be at least 2");
    if (!p.incident.u) throw ConfigError("scattering problem: incident field missing");
}

bool all_zero(const CVector& v) { return (v.array() == cplx(0)).all(); }

// Kress bracket R K1 + dt K2; `modified` swaps the mirror K2 entry for the
// integral of the K^L peak, -(1/pi) atan(dt/(4 eps)).
CMatrix kress_bracket(const ScatteringProblem& p, bool modified) {
    const auto ops = spectral_operators(p.n);
    const auto& g = ops->grid;
    const EllipseShape shape(p.epsilon);
    const int m = g.size();
    CMatrix b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double s = g.nodes[i], t = g.nodes[j];
            b(i, j) = ops->kress[kress_index(i, j, g.n)] * kress_k1(s, t, shape, p.k) + g.dt * kress_k2(s, t, shape, p.k);
        }
    if (modified) {
        const double corr = mirror_correction(g.dt, p.epsilon);
        for (int i = 0; i < m; ++i) {
            const int j = g.mirror(i);
            b(i, j) += -corr - g.dt * kress_k2(g.nodes[i], g.nodes[j], shape, p.k);
        }
    }
    return b;
}

BoundaryFieldSolution product_rule(const ScatteringProblem& p, bool modified) {
    check_problem(p);
    const auto t0 = clock::now();
    const CMatrix b = kress_bracket(p, modified);
    const double sign = p.kind == BoundaryKind::sound_hard ? -1.0 : 1.0;
    CMatrix a = sign * b;
    a.diagonal().array() += 0.5;
    const auto sol = lu_solve(a, boundary_source(p));
    BoundaryFieldSolution out;
    out.values = sol.x;
    out.method = modified ? "mpqr" : "pqr";
    out.ill_conditioned = sol.ill_conditioned;
    out.cond_estimate = sol.cond_estimate;
    out.runtime_ms = ms_since(t0);
    return out;
}

}  // namespace

CVector boundary_source(const ScatteringProblem& p) {
    const auto g = build_grid(p.n);
    CVector f(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const double s = g.nodes[i];
        const double x = p.epsilon * std::cos(s), y = std::sin(s);
        if (p.kind == BoundaryKind::sound_hard)
            f(i) = p.incident.value(x, y);
        else
            f(i) = std::cos(s) * p.incident.dx(x, y) + p.epsilon * std::sin(s) * p.incident.dy(x, y);
    }
    return f;
}

CVector sample_boundary(const AnalyticScattering& a, int n) {
    const auto g = build_grid(n);
    CVector v(g.size());
    for (int i = 0; i < g.size(); ++i) v(i) = a.boundary(g.nodes[i]);
    return v;
}

BoundaryFieldSolution solve_pqr(const ScatteringProblem& p) { return product_rule(p, false); }
BoundaryFieldSolution solve_mpqr(const ScatteringProblem& p) { return product_rule(p, true); }

CMatrix assemble_h1(Parity parity, double k, int n) {
    if (!(k > 0)) throw DomainError("assemble_h1: k must be positive");
    const auto ops = spectral_operators(n);
    const auto& g = ops->grid;
    const bool ev = parity == Parity::even;
    const int lo = ev ? 0 : 1, size = ev ? n + 1 : n - 1;
    const RMatrix& l1 = ev ? ops->l1_even : ops->l1_odd;
    const double sgn = ev ? 1.0 : -1.0;
    CMatrix h(size, size);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            const double s = g.nodes[lo + a], t = g.nodes[lo + b];
            const cplx psi = (a == b) ? cplx(1) : psi_s(s, t, k);
            const double phi = 0.5 * (phi_s(s, t, k) + sgn * phi_s(s, pi - t, k));
            h(a, b) = l1(a, b) * psi - ops->w_even(lo + a, lo + b) * phi / (2 * pi);
        }
    return h;
}

BoundaryFieldSolution qpax_sound_hard(const ScatteringProblem& p) {
    check_problem(p);
    const auto t0 = clock::now();
    const auto g = build_grid(p.n);
    const auto& in = p.incident;
    ParityPair pair{CVector::Zero(p.n + 1), CVector::Zero(p.n - 1)};
    BoundaryFieldSolution out;
    CVector fe(p.n + 1), fo(p.n - 1);
    for (int i = 0; i <= p.n; ++i) fe(i) = in.value(0.0, std::sin(g.nodes[i]));
    for (int i = 1; i < p.n; ++i) fo(i - 1) = std::cos(g.nodes[i]) * in.dx(0.0, std::sin(g.nodes[i]));
    if (!all_zero(fe)) pair.even = fe - p.epsilon * (assemble_h1(Parity::even, p.k, p.n) * fe);
    if (!all_zero(fo)) {
        const auto sol = lu_solve(assemble_h1(Parity::odd, p.k, p.n), fo);
        pair.odd = sol.x;
        out.ill_conditioned = sol.ill_conditioned;
        out.cond_estimate = sol.cond_estimate;
    }
    out.values = parity_recombine(pair, g);
    out.method = "qpax";
    out.runtime_ms = ms_since(t0);
    return out;
}

BoundaryFieldSolution qpax_sound_soft(const ScatteringProblem& p) {
    check_problem(p);
    const auto t0 = clock::now();
    const auto g = build_grid(p.n);
    const auto& in = p.incident;
    ParityPair pair{CVector::Zero(p.n + 1), CVector::Zero(p.n - 1)};
    BoundaryFieldSolution out;
    CVector fe(p.n + 1), fo(p.n - 1);
    for (int i = 0; i <= p.n; ++i) {
        const double s = g.nodes[i], y = std::sin(s);
        fe(i) = std::cos(s) * std::cos(s) * in.dxx(0.0, y) + y * in.dy(0.0, y);
    }
    for (int i = 1; i < p.n; ++i) fo(i - 1) = std::cos(g.nodes[i]) * in.dx(0.0, std::sin(g.nodes[i]));
    if (!all_zero(fe)) {
        const auto sol = lu_solve(assemble_h1(Parity::even, p.k, p.n), fe);
        pair.even = -sol.x;
        out.ill_conditioned = sol.ill_conditioned;
        out.cond_estimate = sol.cond_estimate;
    }
    if (!all_zero(fo)) pair.odd = fo + p.epsilon * (assemble_h1(Parity::odd, p.k, p.n) * fo);
    out.values = parity_recombine(pair, g);
    out.method = "qpax";
    out.runtime_ms = ms_since(t0);
    return out;
}

BoundaryFieldSolution solve_qpax_helmholtz(const ScatteringProblem& p) {
    return p.kind == BoundaryKind::sound_hard ? qpax_sound_hard(p) : qpax_sound_soft(p);
}

double distance_to_ellipse(const Point& x, double epsilon) {
    auto d2 = [&](double t) {
        const double dx = x.x - epsilon * std::cos(t), dy = x.y - std::sin(t);
        return dx * dx + dy * dy;
    };
    constexpr int M = 4096;
    const double h = 2 * pi / M;
    int best = 0;
    for (int j = 1; j < M; ++j)
        if (d2(j * h) < d2(best * h)) best = j;
    // golden-section refinement inside the bracketing cell pair
    double a = (best - 1) * h, b = (best + 1) * h;
    const double r = 0.5 * (std::sqrt(5.0) - 1);
    double c = b - r * (b - a), d = a + r * (b - a);
    for (int it = 0; it < 80; ++it) {
        if (d2(c) < d2(d)) b = d;
        else a = c;
        c = b - r * (b - a);
        d = a + r * (b - a);
    }
    return std::sqrt(std::min(d2(0.5 * (a + b)), d2(best * h)));
}

std::vector<cplx> evaluate_exterior_field(const BoundaryFieldSolution& sol, const ScatteringProblem& p,
                                          const std::vector<Point>& points) {
    check_problem(p);
    const auto g = build_grid(p.n);
    if (sol.values.size() != g.size()) throw ConfigError("evaluate_exterior_field: solution size does not match N");
    std::vector<cplx> out;
    out.reserve(points.size());
    for (const auto& x : points) {
        const double dist = distance_to_ellipse(x, p.epsilon);
        if (x.x * x.x / (p.epsilon * p.epsilon) + x.y * x.y <= 1 || dist < 5 * g.dt)
            throw DomainError("evaluate_exterior_field: point (" + std::to_string(x.x) + ", " + std::to_string(x.y) +
                              ") lies within 5 dt of the boundary; the trapezoid rule is not accurate there "
                              "(close evaluation is not supported)");
        cplx acc = 0;
        for (int j = 0; j < g.size(); ++j) {
            const double t = g.nodes[j];
            const double dx = x.x - p.epsilon * std::cos(t), dy = x.y - std::sin(t);
            const double r = std::hypot(dx, dy);
            if (p.kind == BoundaryKind::sound_hard) {
                // double layer: (ik/4) H1(kr) n.(x-y)/r with n |y'| = (cos t, eps sin t)
                const double nd = std::cos(t) * dx + p.epsilon * std::sin(t) * dy;
                acc += cplx(0, p.k / 4) * hankel1(1, p.k * r) * (nd / r) * sol.values(j);
            } else {
                // single layer with density v = du/dn |y'|
                acc -= cplx(0, 0.25) * hankel1(0, p.k * r) * sol.values(j);
            }
        }
        out.push_back(p.incident.value(x.x, x.y) + g.dt * acc);
    }
    return out;
}

}  // namespace qpax

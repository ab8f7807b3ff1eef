#include "qpax/laplace.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"
#include "qpax/geometry.hpp"

namespace qpax {

using std::numbers::pi;

cplx FourierSource::operator()(double s) const {
    cplx acc = 0;
    for (const auto& [m, c] : coeffs) acc += c * std::exp(cplx(0, m * s));
    return acc;
}

namespace {
FourierSource parity_part(const FourierSource& f, double sign) {
    FourierSource out;
    for (const auto& [m, c] : f.coeffs) {
        const auto it = f.coeffs.find(-m);
        const cplx partner = it == f.coeffs.end() ? cplx(0) : it->second;
        const double pm = (m % 2 == 0) ? 1.0 : -1.0;
        const cplx v = 0.5 * (c + sign * pm * partner);
        if (v != cplx(0)) out.coeffs[m] = v;
    }
    // terms whose partner is absent from the map
    for (const auto& [m, c] : f.coeffs) {
        if (f.coeffs.count(-m)) continue;
        const double pm = (m % 2 == 0) ? 1.0 : -1.0;
        const cplx v = 0.5 * sign * pm * c;
        if (v != cplx(0)) out.coeffs[-m] = v;
    }
    return out;
}
}  // namespace

FourierSource FourierSource::even_part() const { return parity_part(*this, 1.0); }
FourierSource FourierSource::odd_part() const { return parity_part(*this, -1.0); }

bool FourierSource::is_zero() const {
    for (const auto& [m, c] : coeffs)
        if (c != cplx(0)) return false;
    return true;
}

FourierSource& FourierSource::operator+=(const FourierSource& o) {
    for (const auto& [m, c] : o.coeffs) coeffs[m] += c;
    return *this;
}

FourierSource FourierSource::cos_mode(int m) {
    FourierSource f;
    if (m == 0) {
        f.coeffs[0] = 1.0;
        return f;
    }
    f.coeffs[m] += 0.5;
    f.coeffs[-m] += 0.5;
    return f;
}

FourierSource FourierSource::sin_mode(int m) {
    FourierSource f;
    if (m == 0) return f;
    f.coeffs[m] += cplx(0, -0.5);
    f.coeffs[-m] += cplx(0, 0.5);
    return f;
}

FourierSource FourierSource::constant(cplx c) {
    FourierSource f;
    f.coeffs[0] = c;
    return f;
}

FourierSource FourierSource::from_callable(const std::function<cplx(double)>& fn) {
    constexpr int M = 4096;
    std::vector<cplx> v(M);
    for (int j = 0; j < M; ++j) v[j] = fn(2 * pi * j / M);
    FourierSource f;
    double top = 0;
    std::map<int, cplx> raw;
    for (int m = -M / 2 + 1; m < M / 2; ++m) {
        cplx acc = 0;
        for (int j = 0; j < M; ++j) acc += v[j] * std::exp(cplx(0, -2 * pi * double((long(m) * j) % M) / M));
        acc /= double(M);
        raw[m] = acc;
        top = std::max(top, std::abs(acc));
    }
    for (const auto& [m, c] : raw)
        if (std::abs(c) > 1e-14 * top) f.coeffs[m] = c;
    return f;
}

std::function<cplx(double)> analytic_density(const FourierSource& f, double eps) {
    if (!(eps > 0 && eps < 1)) throw DomainError("analytic_density: epsilon must lie in (0,1)");
    // rho = (eps-1)/(eps+1) = -exp(L), L = log1p(-eps) - log1p(eps) < 0. Powers of rho
    // near +-1 are handled through expm1 to keep digits at tiny eps.
    const double L = std::log1p(-eps) - std::log1p(eps);
    std::map<int, cplx> mu;
    for (const auto& [m, c] : f.coeffs) {
        if (m == 0) {
            mu[0] += c;
            continue;
        }
        const int a = std::abs(m);
        const auto it = f.coeffs.find(-m);
        const cplx partner = it == f.coeffs.end() ? cplx(0) : it->second;
        const double sg = (a % 2 == 0) ? 1.0 : -1.0;  // sign of rho^a
        const double one_minus_abs = -std::expm1(a * L);  // 1 - |rho|^a
        const double one_minus_sq = -std::expm1(2 * a * L);  // 1 - rho^{2a}
        // c - rho^a partner = (c - sg partner) + sg (1 - |rho|^a) partner
        const cplx num = (c - sg * partner) + sg * one_minus_abs * partner;
        mu[m] += 2.0 / one_minus_sq * num;
    }
    return [mu](double s) {
        cplx acc = 0;
        for (const auto& [m, c] : mu) acc += c * std::exp(cplx(0, m * s));
        return acc;
    };
}

double mirror_correction(double dt, double eps) { return std::atan(dt / (4 * eps)) / pi; }

namespace {
using clock = std::chrono::steady_clock;

double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

void check_problem(const LaplaceProblem& p) {
    if (!(p.epsilon > 0 && p.epsilon < 1)) throw DomainError("Laplace problem: epsilon must lie in (0,1)");
    if (p.n < 2) throw ConfigError("Laplace problem: N must be at least 2");
}

CVector sample_source(const FourierSource& f, const QuadratureGrid& g) {
    CVector v(g.size());
    for (int i = 0; i < g.size(); ++i) v(i) = f(g.nodes[i]);
    return v;
}

DensitySolution nystrom(const LaplaceProblem& p, bool modified) {
    check_problem(p);
    const auto t0 = clock::now();
    const auto ops = spectral_operators(p.n);
    const auto& g = ops->grid;
    const EllipseShape shape(p.epsilon);
    const int m = g.size();
    CMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = -g.dt * laplace_kernel(g.nodes[i], g.nodes[j], shape);
    if (modified) {
        const double corr = mirror_correction(g.dt, p.epsilon);
        for (int i = 0; i < m; ++i) a(i, g.mirror(i)) = corr;
    }
    for (int i = 0; i < m; ++i) a(i, i) += 0.5;
    const auto sol = lu_solve(a, sample_source(p.source, g));
    DensitySolution out;
    out.mu = sol.x;
    out.method = modified ? "mtr" : "ptr";
    out.ill_conditioned = sol.ill_conditioned;
    out.runtime_ms = ms_since(t0);
    return out;
}
}  // namespace

DensitySolution solve_ptr(const LaplaceProblem& p) { return nystrom(p, false); }
DensitySolution solve_mtr(const LaplaceProblem& p) { return nystrom(p, true); }

DensitySolution solve_qpax_laplace(const LaplaceProblem& p) {
    check_problem(p);
    const auto t0 = clock::now();
    const auto ops = spectral_operators(p.n);
    const auto& g = ops->grid;
    // Parity parts are taken from the coefficients so that a purely even
    // source has an exactly zero odd part (and vice versa).
    const FourierSource fe = p.source.even_part(), fo = p.source.odd_part();
    ParityPair pair;
    pair.even = CVector::Zero(g.n + 1);
    pair.odd = CVector::Zero(g.n - 1);
    if (!fe.is_zero()) {
        CVector v(g.n + 1);
        for (int i = 0; i <= g.n; ++i) v(i) = fe(g.nodes[i]);
        pair.even = v - p.epsilon * (ops->l1_even.cast<cplx>() * v);
    }
    if (!fo.is_zero()) {
        CVector v(g.n - 1);
        for (int i = 1; i < g.n; ++i) v(i - 1) = fo(g.nodes[i]);
        pair.odd = (ops->l1_odd_inv.cast<cplx>() * v) / p.epsilon;
    }
    DensitySolution out;
    out.mu = parity_recombine(pair, g);
    out.method = "qpax";
    out.runtime_ms = ms_since(t0);
    return out;
}

}  // namespace qpax

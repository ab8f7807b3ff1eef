#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"
#include "qpax/laplace.hpp"
#include "qpax/harness.hpp"

using namespace qpax;
using std::numbers::pi;

namespace {
double err_vs_analytic(const DensitySolution& sol, const LaplaceProblem& p) {
    const auto mu = analytic_density(p.source, p.epsilon);
    const auto g = build_grid(p.n);
    CVector ref(g.size());
    for (int i = 0; i < g.size(); ++i) ref(i) = mu(g.nodes[i]);
    return rel_err_inf(sol.mu, ref);
}

double slope(DensitySolution (*solver)(const LaplaceProblem&), const FourierSource& f) {
    std::vector<double> eps, err;
    for (int i = 0; i < 12; ++i) {
        const double e = std::pow(10.0, -6 + 4.0 * i / 11);
        const LaplaceProblem p{e, f, 32};
        eps.push_back(e);
        err.push_back(err_vs_analytic(solver(p), p));
    }
    return fit_slope(eps, err);
}
}  // namespace

TEST_CASE("analytic density closed forms") {
    const double eps = 0.2, rho = (eps - 1) / (eps + 1);
    CHECK(std::abs(analytic_density(FourierSource::constant(2.5), eps)(0.7) - 2.5) <= 1e-15);
    for (int m : {1, 4, 5}) {
        const auto mc = analytic_density(FourierSource::cos_mode(m), eps);
        const auto ms = analytic_density(FourierSource::sin_mode(m), eps);
        for (double s : {-1.0, 0.3, 2.2}) {
            CHECK(std::abs(mc(s) - 2 * std::cos(m * s) / (1 + std::pow(rho, m))) <= 1e-13);
            CHECK(std::abs(ms(s) - 2 * std::sin(m * s) / (1 - std::pow(rho, m))) <= 1e-13);
        }
    }
}

TEST_CASE("Fourier source parity and projection") {
    const auto g = build_grid(16);
    const auto c4 = FourierSource::cos_mode(4), c5 = FourierSource::cos_mode(5);
    CHECK(c4.odd_part().is_zero());
    CHECK(c5.even_part().is_zero());
    CHECK(FourierSource::sin_mode(5).odd_part().is_zero());
    CHECK(FourierSource::sin_mode(4).even_part().is_zero());
    const auto proj = FourierSource::from_callable([](double s) { return cplx(std::cos(3 * s) + 0.5 * std::sin(s)); });
    for (double s : {0.1, 1.7}) CHECK(std::abs(proj(s) - std::cos(3 * s) - 0.5 * std::sin(s)) <= 1e-13);
}

TEST_CASE("PTR is spectrally accurate at moderate eps and fails at tiny eps") {
    const LaplaceProblem p{0.5, FourierSource::cos_mode(4), 32};
    CHECK(err_vs_analytic(solve_ptr(p), p) <= 1e-10);
    const LaplaceProblem thin{1e-6, FourierSource::cos_mode(4), 32};
    CHECK(err_vs_analytic(solve_ptr(thin), thin) >= 0.1);
    const LaplaceProblem zero{0.1, FourierSource{}, 32};
    CHECK(solve_ptr(zero).mu.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("MTR") {
    CHECK(mirror_correction(pi / 32, 1e-4) == doctest::Approx(std::atan(pi / 32 / 4e-4) / pi).epsilon(1e-15));
    const double s = slope(solve_mtr, FourierSource::cos_mode(4));
    CHECK(s >= 0.7);
    CHECK(s <= 1.3);
    const LaplaceProblem odd{1e-4, FourierSource::cos_mode(5), 32};
    CHECK(err_vs_analytic(solve_mtr(odd), odd) >= 0.1);
}

TEST_CASE("QPAX Laplace") {
    const LaplaceProblem p{1e-3, FourierSource::cos_mode(4), 32};
    const auto sol = solve_qpax_laplace(p);
    const auto g = build_grid(32);
    for (int i = 0; i < g.size(); ++i)
        CHECK(std::abs(sol.mu(i) - (1 + 4e-3) * std::cos(4 * g.nodes[i])) <= 1e-5);
    CHECK(err_vs_analytic(sol, p) <= 100 * 1e-9);  // O(eps^3)
    CHECK(slope(solve_qpax_laplace, FourierSource::cos_mode(4)) >= 2.5);

    const LaplaceProblem o{1e-4, FourierSource::cos_mode(5), 32};
    const auto so = solve_qpax_laplace(o);
    for (int i = 0; i < g.size(); ++i)
        CHECK(std::abs(so.mu(i) - std::cos(5 * g.nodes[i]) / 5e-4) <= 1e-3 / 5e-4);
    const double s5 = slope(solve_qpax_laplace, FourierSource::cos_mode(5));
    CHECK(s5 >= 0.7);
    CHECK(s5 <= 1.3);

    const LaplaceProblem c{1e-2, FourierSource::constant(3.0), 32};
    CHECK((solve_qpax_laplace(c).mu.array() - 3.0).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("QPAX preserves parity and performs no LU") {
    const auto before = lu_count_this_thread();
    const auto g = build_grid(32);
    const auto e = solve_qpax_laplace({1e-3, FourierSource::cos_mode(4), 32});
    const auto pe = parity_split(e.mu, g);
    CHECK(pe.odd.cwiseAbs().maxCoeff() <= 1e-15);
    const auto o = solve_qpax_laplace({1e-3, FourierSource::cos_mode(5), 32});
    CHECK(o.mu(0) == cplx(0));
    CHECK(o.mu(32) == cplx(0));
    CHECK(lu_count_this_thread() == before);
}

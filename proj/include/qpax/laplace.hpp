#pragma once
#include <functional>
#include <map>
#include <string>

#include "qpax/parity_spectral.hpp"

namespace qpax {

// f(s) = sum_m c_m e^{ims}, finitely many terms.
struct FourierSource {
    std::map<int, cplx> coeffs;

    cplx operator()(double s) const;
    // Parity under s -> pi - s: e^{ims} maps to (-1)^m e^{-ims}.
    FourierSource even_part() const;
    FourierSource odd_part() const;
    bool is_zero() const;
    FourierSource& operator+=(const FourierSource& other);

    static FourierSource cos_mode(int m);
    static FourierSource sin_mode(int m);
    static FourierSource constant(cplx c);
    // Direct projection on a 4096-point trapezoid grid; drops |c_m| < 1e-14 max|c|.
    static FourierSource from_callable(const std::function<cplx(double)>& f);
};

struct LaplaceProblem {
    double epsilon;
    FourierSource source;
    int n;
};

struct DensitySolution {
    CVector mu;  // samples at the 2N grid nodes
    std::string method;
    double runtime_ms = 0;
    bool ill_conditioned = false;
};

// Exact density for the interior Dirichlet problem on the ellipse.
std::function<cplx(double)> analytic_density(const FourierSource& f, double epsilon);

DensitySolution solve_ptr(const LaplaceProblem& p);
DensitySolution solve_mtr(const LaplaceProblem& p);
DensitySolution solve_qpax_laplace(const LaplaceProblem& p);

// arctan correction that replaces the mirror-point trapezoid weight.
double mirror_correction(double dt, double epsilon);

}  // namespace qpax

#pragma once
#include <complex>
#include <vector>

namespace qpax {

using cplx = std::complex<double>;

// Switchover below which Psi and Phi use their power series.
inline constexpr double kSeriesSwitch = 1e-2;

// Crossover between the ascending series (extended precision) and the
// Hankel asymptotic expansion for J and Y of order 0 and 1.
inline constexpr double kAsymptoticSwitch = 17.0;

double bessel_j(int order, double x);
double bessel_y(int order, double x);
cplx hankel1(int order, double x);

// Psi(z) = (i pi/2) z H1(z) + (z J1(z)/2) ln(4 z^2 / k^2); analytic, Psi(0) = 1.
cplx psi_regularized(double z, double k);
// Phi(z) = J1(z)/z with Phi(0) = 1/2.
double phi_ratio(double z);

// J_0..J_nmax(x) by Miller's backward recurrence, x >= 0.
std::vector<double> bessel_j_sequence(int nmax, double x);
// Y_0..Y_nmax(x) by upward recurrence, x > 0.
std::vector<double> bessel_y_sequence(int nmax, double x);

}  // namespace qpax

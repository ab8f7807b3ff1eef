#pragma once
#include <array>
#include <functional>
#include <vector>

#include "qpax/specfun.hpp"

namespace qpax {

struct Point {
    double x = 0, y = 0;
};

// Ellipse y(t) = (eps cos t, sin t), 0 < eps < 1.
struct EllipseShape {
    double epsilon;
    explicit EllipseShape(double eps);
};

Point ellipse_point(double t, const EllipseShape& shape);
Point ellipse_tangent(double t, const EllipseShape& shape);
double arc_speed(double t, const EllipseShape& shape);

double chord_r(double s, double t, const EllipseShape& shape);
double laplace_kernel(double s, double t, const EllipseShape& shape);
double z_eps(double s, double t, const EllipseShape& shape, double k);

// H(z) K^L with H(z) = (i pi/2) z H1(z); diagonal returns K^L(s,s).
cplx helmholtz_kernel(double s, double t, const EllipseShape& shape, double k);

// Kress split K = K1 ln(4 sin^2((s-t)/2)) + K2.
double kress_k1(double s, double t, const EllipseShape& shape, double k);
cplx kress_k2(double s, double t, const EllipseShape& shape, double k);

cplx psi_s(double s, double t, double k);
double phi_s(double s, double t, double k);

// Curve (eps y1(t), y2(t)) with caller-supplied mirror map sigma.
struct GeneralCurve {
    double period = 0;
    std::function<double(double)> y1, y2, dy1, dy2, ddy1, ddy2;
    std::function<double(double)> sigma;
    std::array<double, 2> degenerate{0, 0};  // self-mirror parameters
};

double general_curve_laplace_kernel(double s, double t, double epsilon, const GeneralCurve& curve);

// (cos t, sin t) with sigma(t) = pi - t; degenerate points +-pi/2.
GeneralCurve ellipse_curve();
// (sin t + a sin 2t, -cos t) with sigma(t) = -t; degenerate points 0 and pi.
GeneralCurve skewed_curve(double a);

}  // namespace qpax

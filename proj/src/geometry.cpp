#include "qpax/geometry.hpp"

#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"

namespace qpax {

using std::numbers::pi;

EllipseShape::EllipseShape(double eps) : epsilon(eps) {
    if (!(eps > 0 && eps < 1)) throw DomainError("EllipseShape: epsilon must lie in (0,1)");
}

Point ellipse_point(double t, const EllipseShape& shape) {
    return {shape.epsilon * std::cos(t), std::sin(t)};
}

Point ellipse_tangent(double t, const EllipseShape& shape) {
    return {-shape.epsilon * std::sin(t), std::cos(t)};
}

double arc_speed(double t, const EllipseShape& shape) {
    const Point d = ellipse_tangent(t, shape);
    return std::hypot(d.x, d.y);
}

double chord_r(double s, double t, const EllipseShape& shape) {
    const double sg = 0.5 * (s + t);
    const double c = std::cos(sg), sn = std::sin(sg);
    const double e = shape.epsilon;
    return 2 * std::abs(std::sin(0.5 * (s - t))) * std::sqrt(c * c + e * e * sn * sn);
}

double laplace_kernel(double s, double t, const EllipseShape& shape) {
    // 1 + e^2 + (1 - e^2) cos(s+t) rewritten as 2(cos^2 + e^2 sin^2) of (s+t)/2;
    // the direct form loses all digits to cancellation near mirror points.
    const double e = shape.epsilon;
    const double c = std::cos(0.5 * (s + t)), sn = std::sin(0.5 * (s + t));
    return -e / (4 * pi * (c * c + e * e * sn * sn));
}

double z_eps(double s, double t, const EllipseShape& shape, double k) {
    if (!(k > 0)) throw DomainError("z_eps: k must be positive");
    return k * chord_r(s, t, shape);
}

cplx helmholtz_kernel(double s, double t, const EllipseShape& shape, double k) {
    const double z = z_eps(s, t, shape, k);
    const double kl = laplace_kernel(s, t, shape);
    if (z == 0) return kl;
    return cplx(0, pi / 2) * z * hankel1(1, z) * kl;
}

double kress_k1(double s, double t, const EllipseShape& shape, double k) {
    const double z = z_eps(s, t, shape, k);
    return -0.5 * z * bessel_j(1, z) * laplace_kernel(s, t, shape);
}

cplx kress_k2(double s, double t, const EllipseShape& shape, double k) {
    // H = Psi - (z J1/2)(ln 4 sin^2((s-t)/2) + ln 4 g), g = cos^2 + eps^2 sin^2 of (s+t)/2,
    // so K2 keeps Psi and the smooth ln 4g part; no cancellation near s = t.
    const double z = z_eps(s, t, shape, k);
    const double kl = laplace_kernel(s, t, shape);
    if (z == 0) return kl;
    const double sg = 0.5 * (s + t);
    const double c = std::cos(sg), sn = std::sin(sg), e = shape.epsilon;
    const double g = c * c + e * e * sn * sn;
    return (psi_regularized(z, k) - 0.5 * z * bessel_j(1, z) * std::log(4 * g)) * kl;
}

namespace {
double mirror_arg(double s, double t, double k) {
    return 2 * k * std::abs(std::sin(0.5 * (s - t)) * std::cos(0.5 * (s + t)));
}
}  // namespace

cplx psi_s(double s, double t, double k) { return psi_regularized(mirror_arg(s, t, k), k); }

double phi_s(double s, double t, double k) {
    const double h = std::sin(0.5 * (s - t));
    return 2 * k * k * h * h * phi_ratio(mirror_arg(s, t, k));
}

double general_curve_laplace_kernel(double s, double t, double epsilon, const GeneralCurve& c) {
    const double d1 = c.y1(s) - c.y1(t);
    const double d2 = c.y2(s) - c.y2(t);
    const double num = c.dy2(t) * d1 - c.dy1(t) * d2;
    const double den = epsilon * epsilon * d1 * d1 + d2 * d2;
    return epsilon / (2 * pi) * num / den;
}

GeneralCurve ellipse_curve() {
    GeneralCurve c;
    c.period = 2 * pi;
    c.y1 = [](double t) { return std::cos(t); };
    c.y2 = [](double t) { return std::sin(t); };
    c.dy1 = [](double t) { return -std::sin(t); };
    c.dy2 = [](double t) { return std::cos(t); };
    c.ddy1 = [](double t) { return -std::cos(t); };
    c.ddy2 = [](double t) { return -std::sin(t); };
    c.sigma = [](double t) { return pi - t; };
    c.degenerate = {-pi / 2, pi / 2};
    return c;
}

GeneralCurve skewed_curve(double a) {
    GeneralCurve c;
    c.period = 2 * pi;
    c.y1 = [a](double t) { return std::sin(t) + a * std::sin(2 * t); };
    c.y2 = [](double t) { return -std::cos(t); };
    c.dy1 = [a](double t) { return std::cos(t) + 2 * a * std::cos(2 * t); };
    c.dy2 = [](double t) { return std::sin(t); };
    c.ddy1 = [a](double t) { return -std::sin(t) - 4 * a * std::sin(2 * t); };
    c.ddy2 = [](double t) { return std::cos(t); };
    c.sigma = [](double t) { return -t; };
    c.degenerate = {0, pi};
    return c;
}

}  // namespace qpax

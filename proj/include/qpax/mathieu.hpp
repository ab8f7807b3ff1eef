#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qpax/geometry.hpp"
#include "qpax/specfun.hpp"

namespace qpax {

enum class MathieuFamily { ce, se };

// x = c sinh(xi) sin(eta), y = c cosh(xi) cos(eta).
struct EllipticCoords {
    double xi = 0, eta = 0;
};

EllipticCoords to_elliptic(double x, double y, double c);
Point from_elliptic(const EllipticCoords& e, double c);
double focal_c(double epsilon);
// atanh(eps), computed as 0.5 ln((1+eps)/(1-eps))
double xi_boundary(double epsilon);

// ce_m = sum_r A_r cos(h_r eta) or se_m = sum_r B_r sin(h_r eta),
// h_r = 2r + offset. Normalized to int_0^{2pi} f^2 = pi, dominant coefficient positive.
struct MathieuBasis {
    MathieuFamily family = MathieuFamily::ce;
    int order = 0;
    double q = 0;
    double a = 0;  // characteristic value (a_m or b_m)
    int offset = 0;  // 0, 1 or 2
    std::vector<double> coef;

    int harmonic(std::size_t r) const { return 2 * int(r) + offset; }
    double angular(double eta) const;
    double angular_d1(double eta) const;
    double angular_d2(double eta) const;
};

MathieuBasis mathieu_basis(MathieuFamily family, int m, double q);

struct RadialValue {
    cplx value, deriv;  // derivative with respect to xi
};

// Bessel-product series; kind 1 (J) or 3 (Hankel, outgoing). The joining
// index defaults to the largest coefficient.
RadialValue radial_mathieu(int kind, const MathieuBasis& basis, double xi, int joining = -1);

// Bases cached per (family, m) for one q; safe for concurrent reads.
class MathieuTable {
public:
    explicit MathieuTable(double q) : q_(q) {}
    double q() const { return q_; }
    std::shared_ptr<const MathieuBasis> get(MathieuFamily family, int m) const;

private:
    double q_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const MathieuBasis>> cache_;
};

std::shared_ptr<const MathieuTable> mathieu_table(double q);

// Incident field as a finite sum of Mathieu modes Mc1/Ms1 times ce/se in the
// elliptic coordinates of one ellipse.
struct ModalTerm {
    MathieuFamily family;
    int order;
    cplx coef;
};

struct ModalIncident {
    double epsilon = 0.5, k = 2.0;
    std::vector<ModalTerm> terms;
    std::string tag;

    double q() const;
    cplx value(double x, double y) const;
    bool has_ce() const;
    bool has_se() const;
};

ModalIncident single_mode_incident(MathieuFamily family, int m, double epsilon, double k);
// sum_{m <= mmax} 2 i^m [ce_m(pi/2 - alpha) Mc1_m ce_m + se_m(pi/2 - alpha) Ms1_m se_m]
ModalIncident plane_wave_incident(double alpha, double k, double epsilon, int mmax = 15);

// Incident field evaluators. Derivatives use 6th-order central differences.
// x-parity flags make the x = 0 restrictions exact: ce modes are even in x,
// se modes odd.
struct IncidentFieldModel {
    std::string tag;
    std::function<cplx(double, double)> u;
    bool even_in_x = false;  // no se content
    bool odd_in_x = false;  // no ce content
    double h1 = 5e-3, h2 = 1e-2;

    cplx value(double x, double y) const { return u(x, y); }
    cplx dx(double x, double y) const;
    cplx dy(double x, double y) const;
    cplx dxx(double x, double y) const;
};

IncidentFieldModel make_incident_model(const ModalIncident& inc);
IncidentFieldModel zero_incident_model();

enum class BoundaryKind { sound_hard, sound_soft };

// Exact solution from the separated series. Sound-hard returns total u on the
// boundary; sound-soft returns v = du/dn |y'| = d(u)/d(xi).
struct AnalyticScattering {
    ModalIncident incident;
    BoundaryKind kind;
    std::vector<cplx> scatter_coef;  // one per incident term

    cplx boundary(double s) const;
    cplx total_field(double x, double y) const;
    cplx scattered_field(double x, double y) const;
};

AnalyticScattering analytic_scattering(const ModalIncident& inc, BoundaryKind kind);

// Coefficients recomputed from boundary projections of the incident field
// (Cartesian finite differences, 2048-point trapezoid in eta); for checks.
std::vector<cplx> scatter_coef_by_projection(const ModalIncident& inc, BoundaryKind kind);

}  // namespace qpax

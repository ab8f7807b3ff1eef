#include "qpax/mathieu.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"

namespace qpax {

using std::numbers::pi;

EllipticCoords to_elliptic(double x, double y, double c) {
    const cplx w = std::acosh(cplx(y, x) / c);
    return {w.real(), w.imag()};
}

Point from_elliptic(const EllipticCoords& e, double c) {
    return {c * std::sinh(e.xi) * std::sin(e.eta), c * std::cosh(e.xi) * std::cos(e.eta)};
}

double focal_c(double eps) { return std::sqrt((1 - eps) * (1 + eps)); }

double xi_boundary(double eps) { return 0.5 * std::log((1 + eps) / (1 - eps)); }

double MathieuBasis::angular(double eta) const {
    double acc = 0;
    for (std::size_t r = 0; r < coef.size(); ++r) {
        const double h = harmonic(r);
        acc += coef[r] * (family == MathieuFamily::ce ? std::cos(h * eta) : std::sin(h * eta));
    }
    return acc;
}

double MathieuBasis::angular_d1(double eta) const {
    double acc = 0;
    for (std::size_t r = 0; r < coef.size(); ++r) {
        const double h = harmonic(r);
        acc += coef[r] * h * (family == MathieuFamily::ce ? -std::sin(h * eta) : std::cos(h * eta));
    }
    return acc;
}

double MathieuBasis::angular_d2(double eta) const {
    double acc = 0;
    for (std::size_t r = 0; r < coef.size(); ++r) {
        const double h = harmonic(r);
        acc -= coef[r] * h * h * (family == MathieuFamily::ce ? std::cos(h * eta) : std::sin(h * eta));
    }
    return acc;
}

MathieuBasis mathieu_basis(MathieuFamily family, int m, double q) {
    if (!(q > 0) || !std::isfinite(q)) throw DomainError("mathieu_basis: q must be positive");
    if (m < 0 || m > 25) throw DomainError("mathieu_basis: order must lie in [0, 25]");
    if (family == MathieuFamily::se && m == 0) throw DomainError("mathieu_basis: se_0 does not exist");

    MathieuBasis b;
    b.family = family;
    b.order = m;
    b.q = q;
    // offset of the first harmonic and position of order m within its class
    int index;
    if (family == MathieuFamily::ce) {
        b.offset = m % 2;
        index = m / 2;
    } else if (m % 2 == 1) {
        b.offset = 1;
        index = m / 2;
    } else {
        b.offset = 2;
        index = m / 2 - 1;
    }

    for (int size = index + 24; size <= 512; size *= 2) {
        Eigen::VectorXd diag(size), sub(size - 1);
        for (int r = 0; r < size; ++r) {
            const double h = 2.0 * r + b.offset;
            diag(r) = h * h;
        }
        sub.setConstant(q);
        const bool even_ce = family == MathieuFamily::ce && b.offset == 0;
        if (even_ce) sub(0) = std::sqrt(2.0) * q;  // first unknown scaled by sqrt(2)
        if (b.offset == 1) diag(0) += (family == MathieuFamily::ce ? q : -q);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        if (es.info() != Eigen::Success) throw OracleError("mathieu_basis: eigen solver failed");
        Eigen::VectorXd v = es.eigenvectors().col(index);
        if (std::abs(v(size - 1)) >= 1e-14 || std::abs(v(size - 2)) >= 1e-14) continue;

        b.a = es.eigenvalues()(index);
        if (even_ce) v(0) /= std::sqrt(2.0);
        Eigen::Index dom;
        v.cwiseAbs().maxCoeff(&dom);
        if (v(dom) < 0) v = -v;
        // drop the negligible tail
        int keep = size;
        while (keep > 1 && std::abs(v(keep - 1)) < 1e-18) --keep;
        b.coef.assign(v.data(), v.data() + keep);
        return b;
    }
    throw OracleError("mathieu_basis: truncation did not converge");
}

namespace {

double neg_order_sign(int n) { return (n < 0 && (-n) % 2 == 1) ? -1.0 : 1.0; }

template <class T>
T at_order(const std::vector<T>& seq, int n) {
    return neg_order_sign(n) * seq[std::size_t(std::abs(n))];
}

template <class T>
T deriv_at_order(const std::vector<T>& seq, int n) {
    // C_n' = (C_{n-1} - C_{n+1})/2 holds for all integer n
    return 0.5 * (at_order(seq, n - 1) - at_order(seq, n + 1));
}

}  // namespace

RadialValue radial_mathieu(int kind, const MathieuBasis& b, double xi, int joining) {
    if (kind != 1 && kind != 3) throw DomainError("radial_mathieu: kind must be 1 or 3");
    if (!(xi >= 0) || !std::isfinite(xi)) throw DomainError("radial_mathieu: xi must be nonnegative");
    if (kind == 3 && xi == 0) throw DomainError("radial_mathieu: kind 3 needs xi > 0");

    const double h = std::sqrt(b.q);
    const double u1 = h * std::exp(-xi), u2 = h * std::exp(xi);
    const int nc = int(b.coef.size());
    Eigen::Index s_idx;
    Eigen::Map<const Eigen::VectorXd>(b.coef.data(), nc).cwiseAbs().maxCoeff(&s_idx);
    if (joining >= 0) {
        if (joining >= nc) throw DomainError("radial_mathieu: joining index out of range");
        s_idx = joining;
    }
    const int s = int(s_idx);
    // DLMF 28.24: index shift d between the two Bessel orders, sign of the second product
    const int d = b.offset;  // 0: ce even, 1: odd orders, 2: se even
    const double pm = (b.family == MathieuFamily::ce) ? 1.0 : -1.0;
    const int top = nc + s + d + 2;

    const auto j1 = bessel_j_sequence(top, u1);
    std::vector<cplx> c2(top + 1);
    {
        const auto j2 = bessel_j_sequence(top, u2);
        if (kind == 1) {
            for (int n = 0; n <= top; ++n) c2[n] = j2[n];
        } else {
            const auto y2 = bessel_y_sequence(top, u2);
            for (int n = 0; n <= top; ++n) c2[n] = cplx(j2[n], y2[n]);
        }
    }
    std::vector<cplx> jr(j1.begin(), j1.end());

    // order-m normalization: (-1)^(l + p) with p = floor(m/2) (ce, se odd) or (m-2)/2 (se even)
    const int p = (d == 2) ? (b.order - 2) / 2 : b.order / 2;
    const double eps_s = (d == 0 && s == 0) ? 2.0 : 1.0;
    const double norm = 1.0 / (eps_s * b.coef[s]);

    cplx val = 0, der = 0;
    for (int l = 0; l < nc; ++l) {
        const double w = (((l + p) % 2 == 0) ? 1.0 : -1.0) * b.coef[l] * norm;
        const int a1 = l - s, a2 = l + s + d;
        const cplx ja = at_order(jr, a1), jb = at_order(jr, a2);
        const cplx ca = at_order(c2, a2), cb = at_order(c2, a1);
        const cplx dja = -u1 * deriv_at_order(jr, a1), djb = -u1 * deriv_at_order(jr, a2);
        const cplx dca = u2 * deriv_at_order(c2, a2), dcb = u2 * deriv_at_order(c2, a1);
        val += w * (ja * ca + pm * jb * cb);
        der += w * (dja * ca + ja * dca + pm * (djb * cb + jb * dcb));
    }
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()) || !std::isfinite(der.real()) ||
        !std::isfinite(der.imag()))
        throw OracleError("radial_mathieu: series overflow");
    return {val, der};
}

std::shared_ptr<const MathieuBasis> MathieuTable::get(MathieuFamily family, int m) const {
    std::lock_guard<std::mutex> lock(mu_);
    const auto key = std::make_pair(int(family), m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto b = std::make_shared<const MathieuBasis>(mathieu_basis(family, m, q_));
    cache_.emplace(key, b);
    return b;
}

std::shared_ptr<const MathieuTable> mathieu_table(double q) {
    static std::mutex mu;
    static std::map<double, std::shared_ptr<const MathieuTable>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(q);
    if (it != tables.end()) return it->second;
    auto t = std::make_shared<const MathieuTable>(q);
    tables.emplace(q, t);
    return t;
}

double ModalIncident::q() const {
    const double c = focal_c(epsilon);
    return c * c * k * k / 4;
}

cplx ModalIncident::value(double x, double y) const {
    const double c = focal_c(epsilon);
    const auto e = to_elliptic(x, y, c);
    const auto table = mathieu_table(q());
    cplx acc = 0;
    for (const auto& t : terms) {
        const auto b = table->get(t.family, t.order);
        acc += t.coef * radial_mathieu(1, *b, e.xi).value * b->angular(e.eta);
    }
    return acc;
}

bool ModalIncident::has_ce() const {
    for (const auto& t : terms)
        if (t.family == MathieuFamily::ce && t.coef != cplx(0)) return true;
    return false;
}

bool ModalIncident::has_se() const {
    for (const auto& t : terms)
        if (t.family == MathieuFamily::se && t.coef != cplx(0)) return true;
    return false;
}

ModalIncident single_mode_incident(MathieuFamily family, int m, double epsilon, double k) {
    ModalIncident inc;
    inc.epsilon = epsilon;
    inc.k = k;
    inc.terms.push_back({family, m, 1.0});
    inc.tag = std::string(family == MathieuFamily::ce ? "mce:" : "mse:") + std::to_string(m);
    return inc;
}

ModalIncident plane_wave_incident(double alpha, double k, double epsilon, int mmax) {
    if (!(alpha >= 0 && alpha <= pi / 2 + 1e-15)) throw DomainError("plane_wave_incident: alpha must lie in [0, pi/2]");
    ModalIncident inc;
    inc.epsilon = epsilon;
    inc.k = k;
    inc.tag = "planewave:" + std::to_string(alpha);
    const auto table = mathieu_table(inc.q());
    const double phi = pi / 2 - alpha;
    cplx im = 1;  // i^m
    for (int m = 0; m <= mmax; ++m, im *= cplx(0, 1)) {
        const double ce = table->get(MathieuFamily::ce, m)->angular(phi);
        inc.terms.push_back({MathieuFamily::ce, m, 2.0 * im * ce});
        // se_m(0) = 0, so at alpha = pi/2 the field is purely even in x; the
        // se terms are omitted rather than carried as rounding noise.
        if (m >= 1 && alpha != pi / 2) {
            const double se = table->get(MathieuFamily::se, m)->angular(phi);
            inc.terms.push_back({MathieuFamily::se, m, 2.0 * im * se});
        }
    }
    return inc;
}

cplx IncidentFieldModel::dx(double x, double y) const {
    if (x == 0 && even_in_x) return 0.0;
    const double h = h1;
    return (45.0 * (u(x + h, y) - u(x - h, y)) - 9.0 * (u(x + 2 * h, y) - u(x - 2 * h, y)) +
            (u(x + 3 * h, y) - u(x - 3 * h, y))) /
           (60.0 * h);
}

cplx IncidentFieldModel::dy(double x, double y) const {
    if (x == 0 && odd_in_x) return 0.0;
    const double h = h1;
    return (45.0 * (u(x, y + h) - u(x, y - h)) - 9.0 * (u(x, y + 2 * h) - u(x, y - 2 * h)) +
            (u(x, y + 3 * h) - u(x, y - 3 * h))) /
           (60.0 * h);
}

cplx IncidentFieldModel::dxx(double x, double y) const {
    if (x == 0 && odd_in_x) return 0.0;
    const double h = h2;
    return (2.0 * (u(x + 3 * h, y) + u(x - 3 * h, y)) - 27.0 * (u(x + 2 * h, y) + u(x - 2 * h, y)) +
            270.0 * (u(x + h, y) + u(x - h, y)) - 490.0 * u(x, y)) /
           (180.0 * h * h);
}

IncidentFieldModel make_incident_model(const ModalIncident& inc) {
    IncidentFieldModel m;
    m.tag = inc.tag;
    auto copy = std::make_shared<const ModalIncident>(inc);
    const bool odd = !inc.has_ce();
    // exact zero on the axis x = 0 for fields odd in x
    m.u = [copy, odd](double x, double y) { return odd && x == 0 ? cplx(0) : copy->value(x, y); };
    m.even_in_x = !inc.has_se();
    m.odd_in_x = odd;
    return m;
}

IncidentFieldModel zero_incident_model() {
    IncidentFieldModel m;
    m.tag = "zero";
    m.u = [](double, double) { return cplx(0); };
    m.even_in_x = m.odd_in_x = true;
    return m;
}

namespace {
constexpr cplx kWronskian(0.0, 2.0 / std::numbers::pi);  // W{Mc1, Mc3}

cplx scatter_ratio(const MathieuBasis& b, double xi, BoundaryKind kind) {
    const auto r1 = radial_mathieu(1, b, xi), r3 = radial_mathieu(3, b, xi);
    const cplx num = kind == BoundaryKind::sound_hard ? r1.deriv : r1.value;
    const cplx den = kind == BoundaryKind::sound_hard ? r3.deriv : r3.value;
    if (std::abs(den) < 1e-300) throw OracleError("analytic_scattering: vanishing radial denominator");
    return -num / den;
}
}  // namespace

AnalyticScattering analytic_scattering(const ModalIncident& inc, BoundaryKind kind) {
    AnalyticScattering a{inc, kind, {}};
    const double xi = xi_boundary(inc.epsilon);
    const auto table = mathieu_table(inc.q());
    for (const auto& t : inc.terms) a.scatter_coef.push_back(t.coef * scatter_ratio(*table->get(t.family, t.order), xi, kind));
    return a;
}

cplx AnalyticScattering::boundary(double s) const {
    const double xi = xi_boundary(incident.epsilon);
    const double eta = pi / 2 - s;
    const auto table = mathieu_table(incident.q());
    cplx acc = 0;
    for (const auto& t : incident.terms) {
        const auto b = table->get(t.family, t.order);
        const auto r3 = radial_mathieu(3, *b, xi);
        // Wronskian form: Mc1 Mc3' - Mc1' Mc3 = 2i/pi avoids cancellation
        const cplx radial = kind == BoundaryKind::sound_hard ? kWronskian / r3.deriv : -kWronskian / r3.value;
        acc += t.coef * radial * b->angular(eta);
    }
    return acc;
}

cplx AnalyticScattering::scattered_field(double x, double y) const {
    const auto e = to_elliptic(x, y, focal_c(incident.epsilon));
    const auto table = mathieu_table(incident.q());
    cplx acc = 0;
    for (std::size_t i = 0; i < incident.terms.size(); ++i) {
        const auto b = table->get(incident.terms[i].family, incident.terms[i].order);
        acc += scatter_coef[i] * radial_mathieu(3, *b, e.xi).value * b->angular(e.eta);
    }
    return acc;
}

cplx AnalyticScattering::total_field(double x, double y) const {
    return incident.value(x, y) + scattered_field(x, y);
}

std::vector<cplx> scatter_coef_by_projection(const ModalIncident& inc, BoundaryKind kind) {
    const double c = focal_c(inc.epsilon), xi = xi_boundary(inc.epsilon);
    const auto model = make_incident_model(inc);
    const auto table = mathieu_table(inc.q());
    constexpr int M = 2048;
    std::vector<cplx> data(M);
    for (int j = 0; j < M; ++j) {
        const double eta = 2 * pi * j / M;
        const Point p = from_elliptic({xi, eta}, c);
        if (kind == BoundaryKind::sound_hard) {
            const double xx = c * std::cosh(xi) * std::sin(eta), yx = c * std::sinh(xi) * std::cos(eta);
            data[j] = model.dx(p.x, p.y) * xx + model.dy(p.x, p.y) * yx;  // d/dxi
        } else {
            data[j] = model.value(p.x, p.y);
        }
    }
    std::vector<cplx> out;
    for (const auto& t : inc.terms) {
        const auto b = table->get(t.family, t.order);
        cplx proj = 0;
        for (int j = 0; j < M; ++j) proj += data[j] * b->angular(2 * pi * j / M);
        proj *= 2 * pi / M / pi;  // int f^2 = pi
        const auto r3 = radial_mathieu(3, *b, xi);
        out.push_back(-proj / (kind == BoundaryKind::sound_hard ? r3.deriv : r3.value));
    }
    return out;
}

}  // namespace qpax

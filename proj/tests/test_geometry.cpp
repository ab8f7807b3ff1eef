#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"
#include "qpax/geometry.hpp"

using namespace qpax;
using std::numbers::pi;

TEST_CASE("ellipse points and chords") {
    const EllipseShape e(0.01);
    CHECK(ellipse_point(0, e).x == doctest::Approx(0.01));
    CHECK(ellipse_point(0, e).y == 0.0);
    CHECK(std::abs(ellipse_point(pi / 2, e).x) < 1e-17);
    CHECK(ellipse_point(pi / 2, e).y == 1.0);
    CHECK(arc_speed(0, e) == 1.0);
    CHECK(chord_r(0.4, 0.4, e) == 0.0);
    CHECK(chord_r(0, pi, e) == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(chord_r(pi / 2, -pi / 2, e) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(EllipseShape(0.0), DomainError);
    CHECK_THROWS_AS(EllipseShape(1.0), DomainError);
}

TEST_CASE("chord is symmetric and equals the Euclidean distance") {
    for (double eps : {0.3, 1e-3}) {
        const EllipseShape e(eps);
        for (int i = 0; i < 17; ++i)
            for (int j = 0; j < 17; ++j) {
                const double s = -3 + 0.37 * i, t = -2.9 + 0.41 * j;
                const Point a = ellipse_point(s, e), b = ellipse_point(t, e);
                CHECK(std::abs(chord_r(s, t, e) - chord_r(t, s, e)) <= 1e-14);
                CHECK(std::abs(chord_r(s, t, e) - std::hypot(a.x - b.x, a.y - b.y)) <= 1e-14);
            }
    }
}

TEST_CASE("Laplace kernel values") {
    const EllipseShape e(0.02);
    for (double s : {-1.0, 0.3, 2.0}) {
        CHECK(laplace_kernel(s, pi - s, e) == doctest::Approx(-1 / (4 * pi * 0.02)).epsilon(1e-13));
        CHECK(laplace_kernel(s, -s, e) == doctest::Approx(-0.02 / (4 * pi)).epsilon(1e-13));
        // depends on s + t only
        CHECK(laplace_kernel(s, 0.7, e) == doctest::Approx(laplace_kernel(s + 0.2, 0.5, e)).epsilon(1e-14));
    }
    const EllipseShape m(0.3);
    const int n = 4096;
    double sum = 0;
    for (int j = 0; j < n; ++j) sum += laplace_kernel(0.8, 2 * pi * j / n, m);
    CHECK(std::abs(sum * 2 * pi / n + 0.5) <= 1e-10);
}

TEST_CASE("z_eps") {
    const EllipseShape e(0.05);
    CHECK(z_eps(1.0, 1.0, e, 2.0) == 0.0);
    CHECK(z_eps(0, pi, e, 2.0) == doctest::Approx(0.2).epsilon(1e-14));
    for (double s : {-0.4, 0.3, 1.2})
        CHECK(z_eps(s, pi - s, e, 2.0) == doctest::Approx(2 * 2 * std::abs(std::cos(s)) * 0.05).epsilon(1e-13));
}

TEST_CASE("Helmholtz kernel limits") {
    const EllipseShape e(0.2);
    for (double s : {-1.1, 0.4}) {
        CHECK(helmholtz_kernel(s, s, e, 2.0) == cplx(laplace_kernel(s, s, e)));
        for (double d : {1e-6, -1e-6})
            CHECK(std::abs(helmholtz_kernel(s, s + d, e, 2.0) - laplace_kernel(s, s, e)) <= 1e-4);
        CHECK(std::abs(helmholtz_kernel(s, 0.3, e, 1e-6) - laplace_kernel(s, 0.3, e)) <= 1e-10);
    }
    const EllipseShape thin(1e-6);
    const double s = 0.6;
    CHECK(std::abs(helmholtz_kernel(s, pi - s, thin, 2.0)) * 4 * pi * 1e-6 == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("Kress split reproduces the kernel") {
    const EllipseShape e(0.1);
    const double s = 0.3, t = 1.7;
    const cplx split = kress_k1(s, t, e, 2.0) * std::log(4 * std::pow(std::sin((s - t) / 2), 2)) + kress_k2(s, t, e, 2.0);
    CHECK(std::abs(split - helmholtz_kernel(s, t, e, 2.0)) <= 1e-12 * std::abs(helmholtz_kernel(s, t, e, 2.0)));
    CHECK(kress_k1(0.5, 0.5, e, 2.0) == 0.0);
    CHECK(kress_k2(0.5, 0.5, e, 2.0) == cplx(laplace_kernel(0.5, 0.5, e)));
    for (int n : {16, 32}) {
        double worst = 0;
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j) {
                if (i == j) continue;
                const double si = i * pi / n - pi / 2, tj = j * pi / n - pi / 2;
                const cplx a = kress_k1(si, tj, e, 2.0) * std::log(4 * std::pow(std::sin((si - tj) / 2), 2)) +
                               kress_k2(si, tj, e, 2.0);
                const cplx b = helmholtz_kernel(si, tj, e, 2.0);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
            }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("K1 is O(eps)") {
    auto max_k1 = [](double eps) {
        const EllipseShape e(eps);
        double m = 0;
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j)
                m = std::max(m, std::abs(kress_k1(i * pi / 32 - pi / 2, j * pi / 32 - pi / 2, e, 2.0)));
        return m;
    };
    CHECK(max_k1(1e-3) / max_k1(1e-4) == doctest::Approx(10.0).epsilon(0.01));
}

TEST_CASE("psi_s and phi_s") {
    CHECK(psi_s(0.7, 0.7, 2.0) == cplx(1.0));
    // Continuous limit at the mirror point: k^2 cos^2 s (see README on the removable case).
    for (double s : {-0.3, 0.9}) {
        CHECK(phi_s(s, pi - s, 2.0) == doctest::Approx(4 * std::pow(std::cos(s), 2)).epsilon(1e-14));
        CHECK(phi_s(s, pi - s + 1e-7, 2.0) == doctest::Approx(phi_s(s, pi - s, 2.0)).epsilon(1e-6));
    }
    const double s = 0.2, t = 1.1, k = 2.0;
    const double arg = 2 * k * std::abs(std::sin((s - t) / 2) * std::cos((s + t) / 2));
    const double branch = k * std::abs(std::sin((s - t) / 2) / std::cos((s + t) / 2)) * bessel_j(1, arg);
    CHECK(std::abs(phi_s(s, t, k) - branch) <= 1e-12);
}

TEST_CASE("general curve kernel") {
    const auto ell = ellipse_curve();
    for (double eps : {0.3, 1e-3}) {
        const EllipseShape e(eps);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                const double s = -3.0 + 0.31 * i, t = -2.95 + 0.3 * j;
                if (std::abs(std::sin((s - t) / 2)) < 1e-3) continue;
                const double ref = laplace_kernel(s, t, e);
                CHECK(std::abs(general_curve_laplace_kernel(s, t, eps, ell) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
            }
    }
    const auto sk = skewed_curve(0.2);
    // mirror points: eps K(s, sigma(s)) is eps-independent and equals the asymptote
    for (double s : {0.5, 1.3, 2.4}) {
        const double sig = sk.sigma(s);
        const double asym = sk.dy2(sig) / (2 * pi * (sk.y1(s) - sk.y1(sig)));
        for (double eps : {1e-2, 1e-5})
            CHECK(eps * general_curve_laplace_kernel(s, sig, eps, sk) == doctest::Approx(asym).epsilon(1e-12));
        // and nearby (|t - sigma| << eps not needed at a mirror point of order 1 width)
        CHECK(1e-6 * general_curve_laplace_kernel(s, sig + 1e-9, 1e-6, sk) == doctest::Approx(asym).epsilon(1e-3));
    }
    // degenerate points: t -> s with |t - s| << eps
    for (double s0 : sk.degenerate) {
        const double sig = sk.sigma(s0);
        const double asym = -sk.ddy2(sig) / (4 * pi * sk.dy1(sig));
        const double eps = 1e-2;
        CHECK(eps * general_curve_laplace_kernel(s0, s0 + 1e-5, eps, sk) == doctest::Approx(asym).epsilon(1e-4));
    }
}

#include "qpax/specfun.hpp"

#include <cmath>
#include <numbers>

#include "qpax/errors.hpp"

namespace qpax {
namespace {

using ld = long double;
constexpr ld kPiL = std::numbers::pi_v<long double>;
constexpr ld kEulerL = std::numbers::egamma_v<long double>;

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

void require_order(int order, const char* who) {
    if (order != 0 && order != 1) throw DomainError(std::string(who) + ": order must be 0 or 1");
}

// Ascending series for J_n, n in {0,1}.
ld j_series(int n, ld x) {
    const ld t = x * x / 4;
    ld term = (n == 0) ? 1.0L : x / 2;
    ld sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -t / (ld(k) * ld(k + n));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > x) break;
    }
    return sum;
}

// Log series for Y_0 and Y_1.
ld y_series(int n, ld x) {
    const ld t = x * x / 4;
    const ld lg = std::log(x / 2);
    if (n == 0) {
        ld term = 1.0L, harm = 0.0L, sum = 0.0L;
        for (int k = 1; k < 200; ++k) {
            term *= -t / (ld(k) * ld(k));
            harm += 1.0L / k;
            const ld add = -term * harm;
            sum += add;
            if (std::fabs(add) < 1e-22L * (std::fabs(sum) + 1) && k > x) break;
        }
        return (2 / kPiL) * ((lg + kEulerL) * j_series(0, x) + sum);
    }
    // sum_k (psi(k+1) + psi(k+2)) (-t)^k / (k!(k+1)!)
    ld term = 1.0L, hk = 0.0L;
    ld sum = (-kEulerL) + (1.0L - kEulerL);
    for (int k = 1; k < 200; ++k) {
        term *= -t / (ld(k) * ld(k + 1));
        hk += 1.0L / k;
        const ld add = term * ((-kEulerL + hk) + (-kEulerL + hk + 1.0L / (k + 1)));
        sum += add;
        if (std::fabs(add) < 1e-22L * (std::fabs(sum) + 1) && k > x) break;
    }
    return -2 / (kPiL * x) + (2 / kPiL) * lg * j_series(1, x) - x / (2 * kPiL) * sum;
}

// Hankel large-argument expansion; returns (J_n, Y_n).
std::pair<ld, ld> jy_asymptotic(int n, ld x) {
    const ld mu = 4.0L * n * n;
    ld term = 1.0L;
    ld p = 1.0L, q = 0.0L;
    ld last = 1.0L;
    for (int k = 1; k < 60; ++k) {
        const ld odd = 2.0L * k - 1;
        const ld next = term * (mu - odd * odd) / (ld(k) * 8 * x);
        if (std::fabs(next) > std::fabs(last) && k > 2) break;
        term = next;
        last = next;
        const int r = k % 4;
        if (r == 1) q += term;
        else if (r == 2) p -= term;
        else if (r == 3) q -= term;
        else p += term;
        if (std::fabs(term) < 1e-19L) break;
    }
    const ld chi = x - (2 * n + 1) * kPiL / 4;
    const ld amp = std::sqrt(2 / (kPiL * x));
    const ld c = std::cos(chi), s = std::sin(chi);
    return {amp * (p * c - q * s), amp * (p * s + q * c)};
}

}  // namespace

double bessel_j(int order, double x) {
    require_order(order, "bessel_j");
    require_finite(x, "bessel_j");
    if (x < 0) throw DomainError("bessel_j: negative argument");
    if (x <= kAsymptoticSwitch) return double(j_series(order, x));
    return double(jy_asymptotic(order, x).first);
}

double bessel_y(int order, double x) {
    require_order(order, "bessel_y");
    require_finite(x, "bessel_y");
    if (x <= 0) throw DomainError("bessel_y: argument must be positive");
    if (x <= kAsymptoticSwitch) return double(y_series(order, x));
    return double(jy_asymptotic(order, x).second);
}

cplx hankel1(int order, double x) {
    require_order(order, "hankel1");
    require_finite(x, "hankel1");
    if (x <= 0) throw DomainError("hankel1: argument must be positive");
    if (x <= kAsymptoticSwitch) return {double(j_series(order, x)), double(y_series(order, x))};
    const auto [j, y] = jy_asymptotic(order, x);
    return {double(j), double(y)};
}

cplx psi_regularized(double z, double k) {
    require_finite(z, "psi_regularized");
    if (z < 0) throw DomainError("psi_regularized: z must be nonnegative");
    if (!(k > 0)) throw DomainError("psi_regularized: k must be positive");
    if (z == 0) return {1.0, 0.0};
    if (z < kSeriesSwitch) {
        const ld zl = z;
        const ld t = zl * zl / 4;
        const ld zj1 = zl * j_series(1, zl);
        // (z^2/4) sum_j (psi(j+1) + psi(j+2)) (-t)^j / (j!(j+1)!)
        ld term = 1.0L, hk = 0.0L;
        ld sum = 1.0L - 2 * kEulerL;
        for (int j = 1; j < 40; ++j) {
            term *= -t / (ld(j) * ld(j + 1));
            hk += 1.0L / j;
            const ld add = term * (2 * (hk - kEulerL) + 1.0L / (j + 1));
            sum += add;
            if (std::fabs(add) < 1e-22L) break;
        }
        const ld re = 1 + zj1 * std::log(4 / ld(k)) + t * sum;
        const ld im = zj1 * kPiL / 2;
        return {double(re), double(im)};
    }
    const cplx h = cplx(0.0, std::numbers::pi / 2) * z * hankel1(1, z);
    return h + 0.5 * z * bessel_j(1, z) * std::log(4 * z * z / (k * k));
}

double phi_ratio(double z) {
    require_finite(z, "phi_ratio");
    if (z < 0) throw DomainError("phi_ratio: z must be nonnegative");
    if (z < kSeriesSwitch) {
        const ld t = ld(z) * z / 4;
        ld term = 0.5L, sum = 0.5L;
        for (int k = 1; k < 20; ++k) {
            term *= -t / (ld(k) * ld(k + 1));
            sum += term;
            if (std::fabs(term) < 1e-22L) break;
        }
        return double(sum);
    }
    return bessel_j(1, z) / z;
}

std::vector<double> bessel_j_sequence(int nmax, double x) {
    if (nmax < 0) throw DomainError("bessel_j_sequence: negative order");
    require_finite(x, "bessel_j_sequence");
    if (x < 0) throw DomainError("bessel_j_sequence: negative argument");
    std::vector<double> out(std::size_t(nmax) + 1, 0.0);
    if (x == 0) {
        out[0] = 1.0;
        return out;
    }
    const int top = std::max(nmax, int(x)) + 30 + int(std::sqrt(40.0 * std::max(nmax, int(x) + 1)));
    std::vector<ld> v(std::size_t(top) + 2, 0.0L);
    v[top + 1] = 0.0L;
    v[top] = 1e-300L;
    for (int m = top; m >= 1; --m) {
        v[m - 1] = (2.0L * m / x) * v[m] - v[m + 1];
        if (std::fabs(v[m - 1]) > 1e300L) {
            for (int i = m - 1; i <= top; ++i) v[i] *= 1e-300L;
        }
    }
    // Scale against whichever of J0, J1 is larger for best relative accuracy.
    const ld j0 = bessel_j(0, x), j1 = bessel_j(1, x);
    const ld scale = (std::fabs(j0) >= std::fabs(j1)) ? j0 / v[0] : j1 / v[1];
    for (int n = 0; n <= nmax; ++n) out[n] = double(v[n] * scale);
    return out;
}

std::vector<double> bessel_y_sequence(int nmax, double x) {
    if (nmax < 0) throw DomainError("bessel_y_sequence: negative order");
    require_finite(x, "bessel_y_sequence");
    if (x <= 0) throw DomainError("bessel_y_sequence: argument must be positive");
    std::vector<double> out(std::size_t(nmax) + 1);
    ld prev = bessel_y(0, x);
    out[0] = double(prev);
    if (nmax == 0) return out;
    ld cur = bessel_y(1, x);
    out[1] = double(cur);
    for (int n = 1; n < nmax; ++n) {
        const ld next = (2.0L * n / x) * cur - prev;
        prev = cur;
        cur = next;
        out[n + 1] = double(cur);
    }
    return out;
}

}  // namespace qpax

#include "qpax/parity_spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "qpax/errors.hpp"

namespace qpax {

using std::numbers::pi;

namespace {
void require_n(int n, const char* who) {
    if (n < 2) throw ConfigError(std::string(who) + ": N must be at least 2");
}
}  // namespace

QuadratureGrid build_grid(int n) {
    require_n(n, "build_grid");
    QuadratureGrid g;
    g.n = n;
    g.dt = pi / n;
    g.nodes.resize(2 * std::size_t(n));
    for (int i = 0; i < 2 * n; ++i) g.nodes[i] = i * g.dt - pi / 2;
    return g;
}

ParityPair parity_split(const CVector& f, const QuadratureGrid& g) {
    if (f.size() != g.size()) throw DomainError("parity_split: expected 2N samples");
    ParityPair p;
    p.even.resize(g.n + 1);
    p.odd.resize(g.n - 1);
    for (int i = 0; i <= g.n; ++i) p.even(i) = 0.5 * (f(i) + f(g.mirror(i)));
    for (int i = 1; i < g.n; ++i) p.odd(i - 1) = 0.5 * (f(i) - f(g.mirror(i)));
    return p;
}

CVector parity_recombine(const ParityPair& p, const QuadratureGrid& g) {
    if (p.even.size() != g.n + 1 || p.odd.size() != g.n - 1)
        throw DomainError("parity_recombine: size mismatch");
    CVector f(g.size());
    f(0) = p.even(0);
    f(g.n) = p.even(g.n);
    for (int i = 1; i < g.n; ++i) {
        f(i) = p.even(i) + p.odd(i - 1);
        // odd part changes sign under s -> pi - s
        f(2 * g.n - i) = p.even(i) - p.odd(i - 1);
    }
    return f;
}

RMatrix dct_matrix(int n) {
    require_n(n, "dct_matrix");
    const double sc = std::sqrt(2.0 / n);
    RMatrix c(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double v = sc * std::cos(pi * ((i * j) % (2 * n)) / n);
            if (j == 0 || j == n) v *= 0.5;
            c(i, j) = v;
        }
    return c;
}

RMatrix dst_matrix(int n) {
    require_n(n, "dst_matrix");
    const double sc = std::sqrt(2.0 / n);
    RMatrix s(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) s(i - 1, j - 1) = sc * std::sin(pi * ((i * j) % (2 * n)) / n);
    return s;
}

// With theta = s + pi/2, even functions are cosine series in theta and
// L1[cos m theta] = -m cos m theta, L1[sin m theta] = +m sin m theta.
RMatrix l1_even(int n) {
    const RMatrix c = dct_matrix(n);
    RVector d(n + 1);
    for (int m = 0; m <= n; ++m) d(m) = -m;
    return c * d.asDiagonal() * c;
}

RMatrix l1_odd(int n) {
    const RMatrix s = dst_matrix(n);
    RVector d(n - 1);
    for (int m = 1; m < n; ++m) d(m - 1) = m;
    return s * d.asDiagonal() * s;
}

RMatrix l1_odd_inverse(int n) {
    const RMatrix s = dst_matrix(n);
    RVector d(n - 1);
    for (int m = 1; m < n; ++m) d(m - 1) = 1.0 / m;
    return s * d.asDiagonal() * s;
}

std::vector<double> kress_weights(int n) {
    require_n(n, "kress_weights");
    std::vector<double> r(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double sum = 0;
        for (int m = 1; m < n; ++m) sum += std::cos(pi * ((m * k) % (2 * n)) / n) / m;
        r[k] = -((k % 2 == 0) ? 1.0 : -1.0) * pi / (double(n) * n) - 2 * pi / n * sum;
    }
    return r;
}

int kress_index(int i, int j, int n) {
    int d = std::abs(i - j) % (2 * n);
    return d > n ? 2 * n - d : d;
}

RMatrix w_even(int n) {
    const RMatrix c = dct_matrix(n);
    RVector d(n + 1);
    d(0) = 0;
    for (int m = 1; m <= n; ++m) d(m) = -2 * pi / m;
    return c * d.asDiagonal() * c;
}

std::shared_ptr<const SpectralOperators> spectral_operators(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const SpectralOperators>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ops = std::make_shared<SpectralOperators>(SpectralOperators{
        n, build_grid(n), dct_matrix(n), dst_matrix(n), l1_even(n), l1_odd(n), l1_odd_inverse(n),
        kress_weights(n), w_even(n)});
    cache.emplace(n, ops);
    return ops;
}

}  // namespace qpax

#pragma once
#include <memory>
#include <vector>

#include "qpax/linalg.hpp"

namespace qpax {

// 2N nodes s_i = i pi/N - pi/2. Mirror index (2N - i) mod 2N maps s to pi - s.
struct QuadratureGrid {
    int n = 0;
    double dt = 0;
    std::vector<double> nodes;
    int size() const { return 2 * n; }
    int mirror(int i) const { return (2 * n - i) % (2 * n); }
};

QuadratureGrid build_grid(int n);

// Even part on s_0..s_N, odd part on s_1..s_{N-1}.
struct ParityPair {
    CVector even;
    CVector odd;
};

ParityPair parity_split(const CVector& samples, const QuadratureGrid& grid);
CVector parity_recombine(const ParityPair& pair, const QuadratureGrid& grid);

RMatrix dct_matrix(int n);  // (N+1)^2, involution
RMatrix dst_matrix(int n);  // (N-1)^2, involution

RMatrix l1_even(int n);
RMatrix l1_odd(int n);
RMatrix l1_odd_inverse(int n);

// R_k for k in [0, N].
std::vector<double> kress_weights(int n);
// Fold a grid offset into the weight index [0, N].
int kress_index(int i, int j, int n);

RMatrix w_even(int n);

// Immutable per-N bundle shared across solves.
struct SpectralOperators {
    int n;
    QuadratureGrid grid;
    RMatrix c, s;
    RMatrix l1_even, l1_odd, l1_odd_inv;
    std::vector<double> kress;
    RMatrix w_even;
};

std::shared_ptr<const SpectralOperators> spectral_operators(int n);

}  // namespace qpax

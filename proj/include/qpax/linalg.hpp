#pragma once
#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qpax {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct LuSolution {
    CVector x;
    double cond_estimate = 1.0;  // one-norm estimate of cond(A)
    bool ill_conditioned = false;  // cond_estimate > kCondWarn
    double residual = 0.0;  // |Ax-b|_inf / (|A|_inf |x|_inf + |b|_inf)
};

inline constexpr double kCondWarn = 1e12;

// Partial-pivoting LU. Throws SingularMatrixError on an exactly zero pivot or
// non-finite input.
LuSolution lu_solve(const CMatrix& a, const CVector& b);

// Number of LU factorizations performed by the calling thread so far.
std::uint64_t lu_count_this_thread();

// |u - ref|_inf / |ref|_inf; DomainError if ref is zero or sizes differ.
double rel_err_inf(const CVector& u, const CVector& ref);

}  // namespace qpax

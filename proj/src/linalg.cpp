#include "qpax/linalg.hpp"

#include "qpax/errors.hpp"

namespace qpax {
namespace {
thread_local std::uint64_t lu_counter = 0;
}

std::uint64_t lu_count_this_thread() { return lu_counter; }

LuSolution lu_solve(const CMatrix& a, const CVector& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw DomainError("lu_solve: dimension mismatch");
    if (!a.allFinite() || !b.allFinite()) throw SingularMatrixError("lu_solve: non-finite entries");
    ++lu_counter;
    Eigen::PartialPivLU<CMatrix> lu(a);
    const auto& packed = lu.matrixLU();
    for (Eigen::Index i = 0; i < packed.rows(); ++i)
        if (packed(i, i) == std::complex<double>(0.0, 0.0))
            throw SingularMatrixError("lu_solve: zero pivot at row " + std::to_string(i));

    LuSolution out;
    out.x = lu.solve(b);
    const double rc = lu.rcond();
    out.cond_estimate = rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    out.ill_conditioned = out.cond_estimate > kCondWarn;
    const double denom = a.cwiseAbs().rowwise().sum().maxCoeff() * out.x.cwiseAbs().maxCoeff() +
                         b.cwiseAbs().maxCoeff();
    out.residual = denom > 0 ? (a * out.x - b).cwiseAbs().maxCoeff() / denom : 0.0;
    return out;
}

double rel_err_inf(const CVector& u, const CVector& ref) {
    if (u.size() != ref.size()) throw DomainError("rel_err_inf: size mismatch");
    const double nref = ref.cwiseAbs().maxCoeff();
    if (!(nref > 0)) throw DomainError("rel_err_inf: zero reference norm");
    return (u - ref).cwiseAbs().maxCoeff() / nref;
}

}  // namespace qpax

#pragma once
#include <stdexcept>
#include <string>

namespace qpax {

// Bad argument to a numerical routine (negative order, x <= 0 for Y, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathieu table or series failed to converge, or a resonance-like denominator.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qpax

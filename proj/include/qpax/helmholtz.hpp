#pragma once
#include <string>
#include <vector>

#include "qpax/geometry.hpp"
#include "qpax/mathieu.hpp"
#include "qpax/parity_spectral.hpp"

namespace qpax {

struct ScatteringProblem {
    double epsilon = 0.1;
    double k = 2.0;
    BoundaryKind kind = BoundaryKind::sound_hard;
    IncidentFieldModel incident;
    int n = 32;
};

// Sound-hard: total u at the 2N nodes. Sound-soft: v = du/dn |y'|.
struct BoundaryFieldSolution {
    CVector values;
    std::string method;
    double runtime_ms = 0;
    bool ill_conditioned = false;
    double cond_estimate = 1.0;
};

BoundaryFieldSolution solve_pqr(const ScatteringProblem& p);
BoundaryFieldSolution solve_mpqr(const ScatteringProblem& p);
BoundaryFieldSolution qpax_sound_hard(const ScatteringProblem& p);
BoundaryFieldSolution qpax_sound_soft(const ScatteringProblem& p);
// Dispatches on p.kind.
BoundaryFieldSolution solve_qpax_helmholtz(const ScatteringProblem& p);

enum class Parity { even, odd };

// Discrete first-order operator of the Helmholtz expansion: (N+1)^2 for the
// even block on s_0..s_N, (N-1)^2 for the odd block on s_1..s_{N-1}.
// Independent of epsilon.
CMatrix assemble_h1(Parity parity, double k, int n);

// Incident samples on the boundary nodes: u^in for sound-hard,
// (cos s, eps sin s) . grad u^in for sound-soft.
CVector boundary_source(const ScatteringProblem& p);

// Exact boundary field sampled at the grid nodes.
CVector sample_boundary(const AnalyticScattering& a, int n);

// Representation formula by the trapezoid rule. Points closer than 5 dt to
// the boundary are refused with DomainError.
std::vector<cplx> evaluate_exterior_field(const BoundaryFieldSolution& sol, const ScatteringProblem& p,
                                          const std::vector<Point>& points);

// Distance from a point to the ellipse (eps cos t, sin t).
double distance_to_ellipse(const Point& x, double epsilon);

}  // namespace qpax

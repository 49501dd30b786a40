#pragma once

#include <vector>

namespace fracstat {

/// Quadrature rule for integrals with an algebraic endpoint singularity,
///
///     integral_0^L u^(-alpha) g(u) du  ~=  sum_i w_i g(u_i),
///
/// i.e. a Gauss-Jacobi rule with weight (1+x)^(-alpha) mapped from [-1,1]
/// onto [0,L]. The weights absorb the singular factor, so g only needs to be
/// smooth; the rule is exact for g polynomial of degree <= 2n-1.
struct SingularQuadRule {
    std::vector<double> nodes;    // in (0, L]
    std::vector<double> weights;  // positive, sum = L^(1-alpha)/(1-alpha)
};

/// Build the n-point rule for weight u^(-alpha) on [0, L]. Requires
/// 0 <= alpha < 1 and n >= 1. Nodes/weights come from the Golub-Welsch
/// eigendecomposition of the Jacobi recurrence matrix.
SingularQuadRule singular_quad_rule(int n, double alpha, double L);

/// Cached variant: rules are memoized per (n, alpha) and rescaled to L.
/// Safe for concurrent use.
const SingularQuadRule& cached_singular_rule(int n, double alpha, double L);

}  // namespace fracstat

#pragma once

#include <vector>

namespace dfsbary {

/// Gauss-Legendre rule of a given degree on [-1, 1]: nodes are the Legendre
/// roots, plus the matching quadrature weights and polynomial barycentric
/// weights at those nodes.
struct GLRule {
  int degree = 0;
  std::vector<double> nodes;         // ascending, strictly inside (-1, 1)
  std::vector<double> quad_weights;  // positive, sum to 2
  std::vector<double> bary_weights;  // strictly alternating sign, max |w| = 1
};

/// Computes the degree-N rule by Newton iteration on the three-term Legendre
/// recurrence from Chebyshev-based initial guesses.  Nodes are symmetrized
/// about 0 (the middle node of an odd rule is exactly 0).  The barycentric
/// weights are (-1)^j * sqrt((1 - x_j^2) * quad_weight_j), normalized so the
/// largest magnitude is 1; they equal the direct product-formula weights up
/// to one common scale factor.
///
/// Valid for 1 <= N <= 10^4; throws size_error otherwise and numerical_error
/// if Newton fails to converge (it must not for admissible N).
GLRule gl_nodes(int degree);

/// Legendre polynomial value P_N(x); used by tests to verify node residuals.
double legendre_value(int degree, double x);

}  // namespace dfsbary

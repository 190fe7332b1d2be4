#include "dfsbary/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dfsbary/errors.hpp"

namespace dfsbary {

namespace {

// P_N(x) and P_N'(x) from the three-term recurrence.
void legendre_pair(int degree, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (degree == 0) {
    p = p0;
    dp = 0.0;
    return;
  }
  for (int k = 1; k < degree; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  // derivative identity, valid for |x| < 1 (all Newton iterates stay inside)
  dp = degree * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

double legendre_value(int degree, double x) {
  double p, dp;
  legendre_pair(degree, x, p, dp);
  return p;
}

GLRule gl_nodes(int degree) {
  if (degree < 1 || degree > 10000) {
    throw size_error("gl_nodes: degree must be in [1, 10000], got " + std::to_string(degree));
  }

  GLRule rule;
  rule.degree = degree;
  rule.nodes.assign(degree, 0.0);
  rule.quad_weights.assign(degree, 0.0);
  rule.bary_weights.assign(degree, 0.0);

  const int half = degree / 2;
  const double pi = std::numbers::pi;

  // Find the `half` positive roots and mirror them; the middle root of an
  // odd rule is exactly 0.
  for (int k = 0; k < half; ++k) {
    // k-th largest root; Chebyshev-based initial guess
    double x = std::cos(pi * (k + 0.75) / (degree + 0.5));
    double p = 0.0, dp = 1.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(degree, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw numerical_error("gl_nodes: Newton failed to converge for degree " +
                            std::to_string(degree));
    }
    legendre_pair(degree, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[degree - 1 - k] = x;
    rule.nodes[k] = -x;
    rule.quad_weights[degree - 1 - k] = w;
    rule.quad_weights[k] = w;
  }
  if (degree % 2 == 1) {
    const int mid = half;
    rule.nodes[mid] = 0.0;
    double p, dp;
    legendre_pair(degree, 0.0, p, dp);
    rule.quad_weights[mid] = 2.0 / (dp * dp);
  }

  // Barycentric weights from the quadrature weights, normalized so the
  // largest magnitude is 1 (the formulas are homogeneous in the weights).
  double maxw = 0.0;
  for (int j = 0; j < degree; ++j) {
    const double x = rule.nodes[j];
    double w = std::sqrt((1.0 - x * x) * rule.quad_weights[j]);
    if (j % 2 == 1) w = -w;
    rule.bary_weights[j] = w;
    maxw = std::max(maxw, std::abs(w));
  }
  for (double& w : rule.bary_weights) w /= maxw;

  return rule;
}

}  // namespace dfsbary

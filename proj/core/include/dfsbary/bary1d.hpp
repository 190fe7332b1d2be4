#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dfsbary/grids.hpp"

namespace dfsbary {

/// Relative tolerance of the exact-hit detection at interpolation nodes.
/// Within it the evaluators return the closed-form limit value instead of
/// forming a nearly singular ratio.
inline constexpr double kNodeHitTol = 1e-13;

/// Precomputed weights for one 1D barycentric kernel.  All per-term constant
/// factors (signs, endpoint halving, sin/rho factors) are folded into the
/// stored weights at construction, so each evaluator is a single weighted-sum
/// loop.  Nodes whose folded weight would be exactly zero (the poles of the
/// odd trigonometric kernel, the origin of the odd radial kernel) are not
/// stored; lead_drop/tail_drop record how many were skipped at either end so
/// sample vectors keep their natural length.
struct WeightTable {
  enum class Kind { TrigEven, TrigOdd, PolyEven, PolyOdd, PiPeriodic, PiAntiperiodic };

  Kind kind = Kind::TrigEven;
  std::vector<double> nodes;    // theta_j or rho_j actually used by the kernel
  std::vector<double> weights;  // folded numerator weights, finite and nonzero
  // Odd kernels have distinct denominator weights (= weights[j] * sin(theta_j)
  // or weights[j] * rho_j); empty means "same as weights".
  std::vector<double> denom_weights;
  std::vector<double> tnodes;  // cos(theta_j) or rho_j^2, the kernel abscissae
  bool contains_zero = false;  // 0 is an interpolation node
  bool contains_pi = false;    // pi is an interpolation node (trig kinds)
  int lead_drop = 0;
  int tail_drop = 0;

  std::size_t sample_count() const {
    return nodes.size() + static_cast<std::size_t>(lead_drop + tail_drop);
  }
};

/// Weights of the even (cosine-polynomial) kernel on colatitude nodes.
///   EQ  : (-1)^j with both endpoint terms halved
///   SEQ : (-1)^j sin(theta_j)
///   GL  : inverse products of (cos theta_j - cos theta_i), normalized so
///         max |w| = 1 (also the general-node path)
/// Nodes must be strictly increasing in [0, pi].
WeightTable trig_even_weights(std::span<const double> theta_nodes, SphereGridKind kind);

/// Value at theta of the unique cosine polynomial interpolant of the samples.
double trig_even_eval(const WeightTable& table, std::span<const double> samples, double theta);

/// Weights of the odd (sine-polynomial) kernel.  When the node set contains
/// the poles their terms vanish identically and are dropped.
WeightTable trig_odd_weights(std::span<const double> theta_nodes, SphereGridKind kind);

double trig_odd_eval(const WeightTable& table, std::span<const double> samples, double theta);

/// pi-periodic interpolant of column values on phi_k = pi*k/m, evaluated at
/// phi.  m even uses the cot form, m odd the csc form.
double pi_periodic_eval(std::span<const double> phi_nodes,
                        std::span<const double> column_values, double phi);

/// pi-antiperiodic counterpart (csc numerator / cot denominator for m even,
/// swapped for m odd).
double pi_antiperiodic_eval(std::span<const double> phi_nodes,
                            std::span<const double> column_values, double phi);

/// Weights of the even polynomial kernel on radii rho_0 > ... > rho_n in
/// [0, 1], working in the variable rho^2.  CH1/CH2 use the closed-form
/// alternating weights (with the endpoint halving folded in); GLRadial (and
/// any other node set) uses inverse products of (rho_j^2 - rho_i^2),
/// normalized so max |w| = 1.
WeightTable poly_even_weights(std::span<const double> rho_nodes, DiskGridKind kind,
                              bool include_origin);

double poly_even_eval(const WeightTable& table, std::span<const double> samples, double rho);

/// Weights of the odd polynomial kernel.  With the origin included its term
/// vanishes identically and is dropped; without it the numerator weights
/// carry a 1/rho_j factor.
WeightTable poly_odd_weights(std::span<const double> rho_nodes, DiskGridKind kind,
                             bool include_origin);

double poly_odd_eval(const WeightTable& table, std::span<const double> samples, double rho);

namespace detail {
/// Inverse products w_j = 1 / prod_{i != j} (x_j - x_i), computed with
/// per-factor exponent extraction so intermediate products can neither
/// overflow nor underflow, then normalized so max |w| = 1.
std::vector<double> scaled_inverse_products(std::span<const double> x);
}  // namespace detail

}  // namespace dfsbary

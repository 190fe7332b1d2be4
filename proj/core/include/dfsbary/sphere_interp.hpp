#pragma once

#include <span>
#include <vector>

#include "dfsbary/bary1d.hpp"
#include "dfsbary/grids.hpp"

namespace dfsbary {

/// Constancy report along the two pole lines theta = 0 and theta = pi.
/// EQ-grid interpolants of data that is constant on each pole row must be
/// constant there (BMC-I symmetry); for SEQ/GL grids the numbers are
/// diagnostic only, since those interpolants need not be single-valued at
/// the poles.
struct PoleReport {
  double north_spread = 0.0;  // max - min of s(phi, 0) over sampled phi
  double south_spread = 0.0;
  double north_mean = 0.0;
  double south_mean = 0.0;
  bool within_tol = false;
};

/// Bivariate barycentric interpolant of samples on a sphere grid.
///
/// Samples are an n x 2m row-major array: row j is colatitude theta_j
/// (ascending), column k is longitude phi_k.  Construction splits them into
/// the pi-periodic/even part f+ and pi-antiperiodic/odd part f-
///   f+[j][k] = (f[j][k] + f[j][k+m]) / 2,
///   f-[j][k] = (f[j][k] - f[j][k+m]) / 2,   k = 0..m-1,
/// and precomputes the latitude weight tables for the grid kind.  Evaluation
/// combines the m per-column latitude interpolants with the pi-periodic /
/// pi-antiperiodic longitude formulas; cost O(m n) per point, no coefficient
/// transform.
class SphereInterpolant {
 public:
  SphereInterpolant(SphereGrid grid, std::span<const double> samples);

  /// Value at (phi, theta).  phi is reduced mod 2pi internally; theta may be
  /// any real (the interpolant is a bivariate trigonometric polynomial, so
  /// values outside [0, pi] follow its doubled-up extension).  Evaluation at
  /// a grid node returns the raw sample bit-for-bit.
  double eval(double phi, double theta) const;

  /// Element-wise eval over point arrays; out.size() must match.  Results are
  /// identical for any thread count (threads == 0 means all hardware threads).
  void eval_many(std::span<const double> phi, std::span<const double> theta,
                 std::span<double> out, unsigned threads = 1) const;
  std::vector<double> eval_many(std::span<const double> phi, std::span<const double> theta,
                                unsigned threads = 1) const;

  const SphereGrid& grid() const { return grid_; }
  int m() const { return grid_.m; }
  int n() const { return grid_.n; }

  /// Raw samples, n x 2m row-major (kept for node short-circuits and
  /// diagnostics).
  const std::vector<double>& raw_samples() const { return raw_; }

  double f_plus(int j, int k) const { return fplus_[static_cast<std::size_t>(k) * grid_.n + j]; }
  double f_minus(int j, int k) const { return fminus_[static_cast<std::size_t>(k) * grid_.n + j]; }

  const WeightTable& lat_even_table() const { return even_; }
  const WeightTable& lat_odd_table() const { return odd_; }

 private:
  struct Scratch;
  double eval_impl(double phi, double theta, Scratch& scratch) const;

  SphereGrid grid_;
  std::vector<double> raw_;     // n x 2m row-major
  std::vector<double> fplus_;   // m x n column-major: fplus_[k*n + j]
  std::vector<double> fminus_;  // m x n column-major
  WeightTable even_;
  WeightTable odd_;
  std::vector<double> cos_phi_;  // cos/sin of phi_k, k = 0..m-1
  std::vector<double> sin_phi_;
};

inline SphereInterpolant build_sphere_interpolant(SphereGrid grid,
                                                  std::span<const double> samples) {
  return SphereInterpolant(std::move(grid), samples);
}

inline double eval_sphere(const SphereInterpolant& s, double phi, double theta) {
  return s.eval(phi, theta);
}

/// Samples the interpolant along both poles at `angles` equally spaced
/// longitudes and reports the deviation from constancy.
PoleReport check_pole_constancy(const SphereInterpolant& s, double tol, int angles = 64);

}  // namespace dfsbary

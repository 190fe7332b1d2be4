#pragma once

#include <span>
#include <vector>

#include "dfsbary/bary1d.hpp"
#include "dfsbary/grids.hpp"

namespace dfsbary {

/// Constancy report at the origin (rho = 0).  Origin-included grids built
/// from continuous data must be constant there (BMC-II symmetry);
/// origin-excluded grids are diagnostic only.
struct OriginReport {
  double spread = 0.0;
  double mean = 0.0;
  bool within_tol = false;
};

/// Bivariate barycentric interpolant of samples on a disk grid: the radial
/// direction uses the even/odd polynomial kernels in rho^2, the angular
/// direction the pi-periodic / pi-antiperiodic formulas.  Samples are an
/// (n+1) x 2m row-major array: row j is radius rho_j (descending), column k
/// is angle phi_k.
class DiskInterpolant {
 public:
  DiskInterpolant(DiskGrid grid, std::span<const double> samples);

  /// Value at (phi, rho).  phi is reduced mod 2pi; rho may lie in [-1, 1]
  /// (negative radii follow the interpolant's doubled-up extension).
  /// |rho| > 1 throws domain_error.  Grid nodes return the raw sample
  /// bit-for-bit.
  double eval(double phi, double rho) const;

  void eval_many(std::span<const double> phi, std::span<const double> rho,
                 std::span<double> out, unsigned threads = 1) const;
  std::vector<double> eval_many(std::span<const double> phi, std::span<const double> rho,
                                unsigned threads = 1) const;

  const DiskGrid& grid() const { return grid_; }
  int m() const { return grid_.m; }
  int rows() const { return grid_.n + 1; }

  const std::vector<double>& raw_samples() const { return raw_; }
  double f_plus(int j, int k) const {
    return fplus_[static_cast<std::size_t>(k) * rows() + j];
  }
  double f_minus(int j, int k) const {
    return fminus_[static_cast<std::size_t>(k) * rows() + j];
  }

  const WeightTable& rad_even_table() const { return even_; }
  const WeightTable& rad_odd_table() const { return odd_; }

 private:
  struct Scratch;
  double eval_impl(double phi, double rho, Scratch& scratch) const;

  DiskGrid grid_;
  std::vector<double> raw_;     // (n+1) x 2m row-major
  std::vector<double> fplus_;   // m x (n+1) column-major
  std::vector<double> fminus_;  // m x (n+1) column-major
  WeightTable even_;
  WeightTable odd_;
  std::vector<double> cos_phi_;
  std::vector<double> sin_phi_;
};

inline DiskInterpolant build_disk_interpolant(DiskGrid grid, std::span<const double> samples) {
  return DiskInterpolant(std::move(grid), samples);
}

inline double eval_disk(const DiskInterpolant& s, double phi, double rho) {
  return s.eval(phi, rho);
}

OriginReport check_origin_constancy(const DiskInterpolant& s, double tol, int angles = 64);

}  // namespace dfsbary

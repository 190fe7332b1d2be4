#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dfsbary/grids.hpp"

namespace dfsbary {

struct ConvergenceRow {
  std::string grid;
  int m = 0;
  long long dof = 0;
  double rel_max_err = 0.0;
};

/// Interpolates the sphere target field on grids with n = m for each m in
/// m_list and returns the relative max-norm error over eval_count seeded
/// low-discrepancy points (the same points for every m).  constant_field
/// replaces the target by 1.0 (debug path; errors should be at rounding
/// level).
std::vector<ConvergenceRow> sphere_convergence(SphereGridKind kind, std::span<const int> m_list,
                                               int eval_count, std::uint64_t seed,
                                               bool constant_field = false,
                                               unsigned threads = 1);

/// Disk counterpart with the disk target field; grids use n = m.
std::vector<ConvergenceRow> disk_convergence(DiskGridKind kind, std::span<const int> m_list,
                                             int eval_count, std::uint64_t seed,
                                             bool include_origin = true,
                                             bool constant_field = false, unsigned threads = 1);

/// Geometric-decay verdict: every consecutive pair above the floor must
/// shrink by more than `ratio`; once a value reaches the floor the ratio
/// obligation lapses, but later values must stay at or below it.
bool geometric_decay(std::span<const double> errors, double ratio, double floor);

}  // namespace dfsbary

#pragma once

#include <span>

#include "dfsbary/grids.hpp"

namespace dfsbary::oracles {

/// Slow, obviously-correct reference evaluators used by tests and by the
/// CLI's --oracle cross-check.  Each evaluates one classical closed form
/// directly, O(n^2) per point, with no precomputed weights.
enum class OracleKind {
  CosineLagrange,  // Lagrange form of the even trigonometric interpolant
  SineLagrange,    // Lagrange form of the odd trigonometric interpolant
  FullTrigBary,    // full-period trigonometric barycentric formula (even
                   // number of equispaced nodes)
  FullPolyBary,    // polynomial barycentric formula with product weights
};

/// Direct evaluation of the chosen closed form at x.  Node counts are
/// limited to 64; FullTrigBary requires an even node count.  An x that
/// coincides with a node returns the sample.
double oracle_eval(OracleKind kind, std::span<const double> nodes,
                   std::span<const double> samples, double x);

/// Reference bivariate evaluation on the sphere: per-column Lagrange cosine /
/// sine interpolants in latitude, combined by the full-period trigonometric
/// barycentric formula applied to the periodically / antiperiodically
/// extended column values.  samples is n x 2m row-major.
double eval_sphere_reference(const SphereGrid& grid, std::span<const double> samples,
                             double phi, double theta);

/// Disk counterpart: full polynomial barycentric formulas over the mirrored
/// radial nodes per column, then the full-period angular combination.
double eval_disk_reference(const DiskGrid& grid, std::span<const double> samples,
                           double phi, double rho);

}  // namespace dfsbary::oracles

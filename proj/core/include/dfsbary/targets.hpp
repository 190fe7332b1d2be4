#pragma once

#include <cmath>
#include <numbers>

namespace dfsbary {

/// Oscillatory target fields used by the convergence studies.  Both are
/// smooth on their domains, so interpolation errors should decay
/// geometrically once the grid resolves the highest active frequency.

inline double sphere_target(double phi, double theta) {
  const double pi = std::numbers::pi;
  return std::cos(1.0 + 8.0 * pi * (std::cos(phi) + std::sin(phi)) * std::sin(theta) +
                  5.0 * std::sin(3.0 * pi * std::cos(theta)));
}

inline double disk_target(double phi, double rho) {
  const double pi = std::numbers::pi;
  const double r2 = rho * rho;
  const double r5 = r2 * r2 * rho;
  return std::sin(21.0 * pi * (1.0 + std::cos(pi * rho)) *
                  (r2 - 2.0 * r5 * std::cos(5.0 * (phi - 0.11))));
}

}  // namespace dfsbary

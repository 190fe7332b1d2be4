#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace dfsbary {

/// Additive (Kronecker / R2) low-discrepancy sequence in [0,1)^2 with a
/// seed-dependent offset, so "seeded" runs are reproducible but distinct.
class QuasiRandom2D {
 public:
  explicit QuasiRandom2D(std::uint64_t seed) {
    // splitmix64 to decorrelate the two offsets from the seed
    auto next = [&seed]() {
      seed += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = seed;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    s_[0] = static_cast<double>(next() >> 11) * 0x1.0p-53;
    s_[1] = static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::array<double, 2> next() {
    // generalized golden ratio (plastic constant) increments
    constexpr double a1 = 0.7548776662466927;
    constexpr double a2 = 0.5698402909980532;
    s_[0] += a1;
    if (s_[0] >= 1.0) s_[0] -= 1.0;
    s_[1] += a2;
    if (s_[1] >= 1.0) s_[1] -= 1.0;
    return s_;
  }

 private:
  std::array<double, 2> s_{};
};

struct SpherePoint {
  double phi;    // longitude in [0, 2pi)
  double theta;  // colatitude in [0, pi]
};

struct DiskPoint {
  double phi;  // angle in [0, 2pi)
  double rho;  // radius in [0, 1]
};

/// Area-preserving map of the unit square onto the sphere:
/// phi = 2*pi*u, theta = acos(1 - 2*v).
inline std::vector<SpherePoint> sphere_eval_points(int count, std::uint64_t seed) {
  QuasiRandom2D q(seed);
  std::vector<SpherePoint> pts(static_cast<std::size_t>(count));
  for (auto& p : pts) {
    const auto u = q.next();
    p.phi = 2.0 * M_PI * u[0];
    p.theta = std::acos(1.0 - 2.0 * u[1]);
  }
  return pts;
}

/// Area-preserving map onto the disk: phi = 2*pi*u, rho = sqrt(v).
inline std::vector<DiskPoint> disk_eval_points(int count, std::uint64_t seed) {
  QuasiRandom2D q(seed);
  std::vector<DiskPoint> pts(static_cast<std::size_t>(count));
  for (auto& p : pts) {
    const auto u = q.next();
    p.phi = 2.0 * M_PI * u[0];
    p.rho = std::sqrt(u[1]);
  }
  return pts;
}

}  // namespace dfsbary

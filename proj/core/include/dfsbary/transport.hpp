#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "dfsbary/grids.hpp"

namespace dfsbary {

/// Period of the deformational flow.
inline constexpr double kFlowPeriod = 5.0;

/// The velocity equations and initial conditions below use LATITUDE in
/// [-pi/2, pi/2]; the interpolation modules use COLATITUDE in [0, pi].
/// These two functions own the conversion.
inline double colatitude_from_latitude(double lat) { return 0.5 * std::numbers::pi - lat; }
inline double latitude_from_colatitude(double colat) { return 0.5 * std::numbers::pi - colat; }

struct VelocitySample {
  double u;  // longitudinal (zonal) component
  double v;  // latitudinal (meridional) component
};

/// Time-dependent deformational flow on the unit sphere with a zonal
/// background rotation:
///   u = (10/T) cos(pi t/T) sin^2(lon - 2 pi t/T) sin(2 lat) + (2 pi/T) cos(lat)
///   v = (10/T) cos(pi t/T) sin(2 (lon - 2 pi t/T)) cos(lat)
/// The deformation reverses at t = T/2, so the continuous solution of the
/// transport equation returns to its initial state at t = T.
class VelocityField {
 public:
  explicit VelocityField(double period = kFlowPeriod, double scale = 1.0)
      : period_(period), scale_(scale) {}

  VelocitySample operator()(double lon, double lat, double t) const {
    const double pi = std::numbers::pi;
    const double k = 10.0 / period_;
    const double ct = std::cos(pi * t / period_);
    const double lonp = lon - 2.0 * pi * t / period_;
    const double u = k * ct * std::sin(lonp) * std::sin(lonp) * std::sin(2.0 * lat) +
                     (2.0 * pi / period_) * std::cos(lat);
    const double v = k * ct * std::sin(2.0 * lonp) * std::cos(lat);
    return {scale_ * u, scale_ * v};
  }

  double period() const { return period_; }
  double scale() const { return scale_; }

 private:
  double period_;
  double scale_;
};

enum class InitialCondition { CosineBells, GaussianBells };

bool parse_initial_condition(const std::string& name, InitialCondition& out);
std::string to_string(InitialCondition ic);

/// Two-bell tracer fields centered at (pi/6, 0) and (-pi/6, 0); lon/lat in
/// radians, latitude convention.
double initial_condition(InitialCondition kind, double lon, double lat);

struct LonLat {
  double lon;
  double lat;
};

namespace detail {
std::array<double, 3> to_cartesian(double lon, double lat);
LonLat to_lonlat(const std::array<double, 3>& p);
}  // namespace detail

/// Integrates the backward trajectory from t_arrive to t_arrive - dt with
/// fixed-step Cash-Karp (fifth order) stages in Cartesian coordinates,
/// renormalizing to the unit sphere after every substep.  A negative dt
/// integrates forward instead (used to test time reversibility).  If the
/// field moves the point by exactly zero, the inputs are returned unchanged.
template <typename Field>
LonLat trace_departure(double lon, double lat, double t_arrive, double dt,
                       const Field& field, int substeps = 1) {
  namespace d = detail;
  const std::array<double, 3> start = d::to_cartesian(lon, lat);
  std::array<double, 3> p = start;

  // velocity of the backward problem dp/ds = -V(p, t_arrive - s)
  auto rhs = [&](const std::array<double, 3>& q, double s) -> std::array<double, 3> {
    const LonLat ll = d::to_lonlat(q);
    const VelocitySample w = field(ll.lon, ll.lat, t_arrive - s);
    const double cl = std::cos(ll.lon), sl = std::sin(ll.lon);
    const double ct = std::cos(ll.lat), st = std::sin(ll.lat);
    // unit east and north tangent vectors
    const double ex = -sl, ey = cl;
    const double nx = -st * cl, ny = -st * sl, nz = ct;
    return {-(w.u * ex + w.v * nx), -(w.u * ey + w.v * ny), -(w.v * nz)};
  };

  if (substeps < 1) substeps = 1;
  const double h = dt / substeps;
  // Cash-Karp tableau (fifth-order solution weights)
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 3.0 / 5, c5 = 1.0, c6 = 7.0 / 8;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 3.0 / 10, a42 = -9.0 / 10, a43 = 6.0 / 5;
  constexpr double a51 = -11.0 / 54, a52 = 5.0 / 2, a53 = -70.0 / 27, a54 = 35.0 / 27;
  constexpr double a61 = 1631.0 / 55296, a62 = 175.0 / 512, a63 = 575.0 / 13824,
                   a64 = 44275.0 / 110592, a65 = 253.0 / 4096;
  constexpr double b1 = 37.0 / 378, b3 = 250.0 / 621, b4 = 125.0 / 594, b6 = 512.0 / 1771;

  auto axpy = [](const std::array<double, 3>& q, double a,
                 const std::array<double, 3>& k) -> std::array<double, 3> {
    return {q[0] + a * k[0], q[1] + a * k[1], q[2] + a * k[2]};
  };

  for (int step = 0; step < substeps; ++step) {
    const double s0 = step * h;
    const auto k1 = rhs(p, s0);
    const auto k2 = rhs(axpy(p, h * a21, k1), s0 + c2 * h);
    std::array<double, 3> q{};
    for (int i = 0; i < 3; ++i) q[i] = p[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const auto k3 = rhs(q, s0 + c3 * h);
    for (int i = 0; i < 3; ++i) q[i] = p[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const auto k4 = rhs(q, s0 + c4 * h);
    for (int i = 0; i < 3; ++i)
      q[i] = p[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const auto k5 = rhs(q, s0 + c5 * h);
    for (int i = 0; i < 3; ++i)
      q[i] = p[i] +
             h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const auto k6 = rhs(q, s0 + c6 * h);

    std::array<double, 3> delta{};
    for (int i = 0; i < 3; ++i)
      delta[i] = h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b6 * k6[i]);
    if (delta[0] == 0.0 && delta[1] == 0.0 && delta[2] == 0.0) continue;
    for (int i = 0; i < 3; ++i) p[i] += delta[i];
    const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (int i = 0; i < 3; ++i) p[i] /= norm;
  }

  if (p == start) return {lon, lat};
  return d::to_lonlat(p);
}

/// Semi-Lagrangian transport run on the sphere: grid kind and m (the grid
/// always has 2m longitudes and n = m+1 latitudes), initial condition, and
/// time stepping.  velocity_scale is a debug knob (0 freezes the field).
struct TransportConfig {
  SphereGridKind kind = SphereGridKind::EQ;
  int m = 0;
  InitialCondition ic = InitialCondition::CosineBells;
  int num_steps = 0;
  double t_final = kFlowPeriod;
  int substeps = 1;
  unsigned threads = 1;  // 0 = all hardware threads
  double velocity_scale = 1.0;
};

struct TracerField {
  std::vector<double> values;  // n x 2m row-major, matching SphereInterpolant
  double time = 0.0;
};

struct TransportResult {
  TracerField final_field;
  double rel_l2_error = 0.0;   // sqrt(sum (q - q0)^2 / sum q0^2) over all nodes
  double rel_max_error = 0.0;  // max |q - q0| / max |q0|
  double tracer_min = 0.0;
  double tracer_max = 0.0;
  double wall_seconds = 0.0;
  std::vector<double> step_seconds;
  int dof = 0;
  double dt = 0.0;
};

/// Called after each completed step (and once with step = 0 for the initial
/// field); used by the CLI to dump snapshots.
using SnapshotFn = std::function<void(int step, const TracerField&)>;

/// Runs the scheme: per step, trace every grid node back over one dt, build
/// the interpolant of the current tracer values, evaluate it at the departure
/// points, and assign the results as the next values.  Errors are measured
/// against the initial condition, which is the exact solution at t = T.
/// Throws divergence_error (naming the step) if the tracer turns NaN.
TransportResult run_transport(const TransportConfig& config, const SnapshotFn& snapshot = {});

}  // namespace dfsbary

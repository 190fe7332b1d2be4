#include "dfsbary/transport.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "dfsbary/errors.hpp"
#include "dfsbary/parallel.hpp"
#include "dfsbary/sphere_interp.hpp"

namespace dfsbary {

namespace detail {

std::array<double, 3> to_cartesian(double lon, double lat) {
  const double cl = std::cos(lat);
  return {std::cos(lon) * cl, std::sin(lon) * cl, std::sin(lat)};
}

LonLat to_lonlat(const std::array<double, 3>& p) {
  double z = p[2];
  if (z > 1.0) z = 1.0;
  if (z < -1.0) z = -1.0;
  return {std::atan2(p[1], p[0]), std::asin(z)};
}

}  // namespace detail

bool parse_initial_condition(const std::string& name, InitialCondition& out) {
  if (name == "cosine_bells") out = InitialCondition::CosineBells;
  else if (name == "gaussian_bells") out = InitialCondition::GaussianBells;
  else return false;
  return true;
}

std::string to_string(InitialCondition ic) {
  return ic == InitialCondition::CosineBells ? "cosine_bells" : "gaussian_bells";
}

namespace {

constexpr double kBellCenterLon1 = std::numbers::pi / 6.0;
constexpr double kBellCenterLon2 = -std::numbers::pi / 6.0;

// cosine of the great-circle distance to a bell center on the equator
double center_cos(double lon, double lat, double center_lon) {
  return std::cos(lat) * std::cos(lon - center_lon);
}

double cosine_bell(double r_cos) {
  const double dist = std::acos(std::min(1.0, std::max(-1.0, r_cos)));
  if (dist >= 0.5) return 0.0;
  return 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * dist));
}

}  // namespace

double initial_condition(InitialCondition kind, double lon, double lat) {
  const double r1 = center_cos(lon, lat, kBellCenterLon1);
  const double r2 = center_cos(lon, lat, kBellCenterLon2);
  if (kind == InitialCondition::CosineBells) {
    return 0.1 + 0.9 * (cosine_bell(r1) + cosine_bell(r2));
  }
  return 0.95 * (std::exp(-10.0 * (1.0 - r1)) + std::exp(-10.0 * (1.0 - r2)));
}

TransportResult run_transport(const TransportConfig& config, const SnapshotFn& snapshot) {
  if (config.m < 1) throw size_error("run_transport: m must be >= 1");
  if (config.num_steps < 1) throw size_error("run_transport: num_steps must be >= 1");
  if (!(config.t_final > 0.0)) throw size_error("run_transport: t_final must be > 0");
  if (config.substeps < 1) throw size_error("run_transport: substeps must be >= 1");

  const SphereGrid grid = make_sphere_grid(config.kind, config.m, config.m + 1);
  const int n = grid.n;
  const int m = grid.m;
  const std::size_t dof = static_cast<std::size_t>(n) * (2 * m);
  const double dt = config.t_final / config.num_steps;
  const VelocityField field(kFlowPeriod, config.velocity_scale);

  std::vector<double> lon(dof), colat(dof), lat(dof);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 2 * m; ++k) {
      const std::size_t i = static_cast<std::size_t>(j) * (2 * m) + k;
      lon[i] = grid.phi[k];
      colat[i] = grid.theta[j];
      lat[i] = latitude_from_colatitude(grid.theta[j]);
    }
  }

  TracerField tracer;
  tracer.values.resize(dof);
  tracer.time = 0.0;
  for (std::size_t i = 0; i < dof; ++i) {
    tracer.values[i] = initial_condition(config.ic, lon[i], lat[i]);
  }
  const std::vector<double> initial = tracer.values;
  if (snapshot) snapshot(0, tracer);

  std::vector<double> dep_lon(dof), dep_colat(dof), next(dof);
  std::vector<char> at_node(dof);

  TransportResult result;
  result.dof = static_cast<int>(dof);
  result.dt = dt;
  result.step_seconds.reserve(config.num_steps);

  const auto t_start = std::chrono::steady_clock::now();
  for (int step = 0; step < config.num_steps; ++step) {
    const auto s_start = std::chrono::steady_clock::now();
    const double t_arrive = (step + 1) * dt;

    parallel_for(dof, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const LonLat d = trace_departure(lon[i], lat[i], t_arrive, dt, field, config.substeps);
        if (d.lon == lon[i] && d.lat == lat[i]) {
          at_node[i] = 1;
        } else {
          at_node[i] = 0;
          dep_lon[i] = d.lon;
          dep_colat[i] = colatitude_from_latitude(d.lat);
        }
      }
    });

    const SphereInterpolant interp(grid, tracer.values);
    parallel_for(dof, config.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        // a particle that did not move carries the node's own value
        next[i] = at_node[i] ? tracer.values[i] : 0.0;
      }
    });
    // gather the moving points and evaluate them in order
    {
      std::vector<std::size_t> idx;
      idx.reserve(dof);
      for (std::size_t i = 0; i < dof; ++i) {
        if (!at_node[i]) idx.push_back(i);
      }
      std::vector<double> ep(idx.size()), et(idx.size()), ev(idx.size());
      for (std::size_t q = 0; q < idx.size(); ++q) {
        ep[q] = dep_lon[idx[q]];
        et[q] = dep_colat[idx[q]];
      }
      interp.eval_many(ep, et, ev, config.threads);
      for (std::size_t q = 0; q < idx.size(); ++q) next[idx[q]] = ev[q];
    }

    for (std::size_t i = 0; i < dof; ++i) {
      if (std::isnan(next[i])) {
        throw divergence_error("run_transport: NaN in tracer at step " + std::to_string(step + 1),
                               step + 1);
      }
    }

    tracer.values.swap(next);
    tracer.time = t_arrive;
    result.step_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - s_start).count());
    if (snapshot) snapshot(step + 1, tracer);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  double num = 0.0, den = 0.0, max_diff = 0.0, max_ref = 0.0;
  double tmin = tracer.values[0], tmax = tracer.values[0];
  for (std::size_t i = 0; i < dof; ++i) {
    const double d = tracer.values[i] - initial[i];
    num += d * d;
    den += initial[i] * initial[i];
    max_diff = std::max(max_diff, std::abs(d));
    max_ref = std::max(max_ref, std::abs(initial[i]));
    tmin = std::min(tmin, tracer.values[i]);
    tmax = std::max(tmax, tracer.values[i]);
  }
  result.rel_l2_error = num == 0.0 ? 0.0 : std::sqrt(num / den);
  result.rel_max_error = max_ref == 0.0 ? max_diff : max_diff / max_ref;
  result.tracer_min = tmin;
  result.tracer_max = tmax;
  result.final_field = std::move(tracer);
  return result;
}

}  // namespace dfsbary

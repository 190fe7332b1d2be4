#include "dfsbary/converge.hpp"

#include <cmath>

#include "dfsbary/disk_interp.hpp"
#include "dfsbary/quasirandom.hpp"
#include "dfsbary/sphere_interp.hpp"
#include "dfsbary/targets.hpp"

namespace dfsbary {

std::vector<ConvergenceRow> sphere_convergence(SphereGridKind kind, std::span<const int> m_list,
                                               int eval_count, std::uint64_t seed,
                                               bool constant_field, unsigned threads) {
  const std::vector<SpherePoint> pts = sphere_eval_points(eval_count, seed);
  std::vector<double> ep(pts.size()), et(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ep[i] = pts[i].phi;
    et[i] = pts[i].theta;
  }
  auto f = [&](double phi, double theta) {
    return constant_field ? 1.0 : sphere_target(phi, theta);
  };

  std::vector<ConvergenceRow> rows;
  for (int m : m_list) {
    const int n = m;
    const SphereGrid grid = make_sphere_grid(kind, m, n);
    std::vector<double> samples(static_cast<std::size_t>(n) * (2 * m));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < 2 * m; ++k) {
        samples[static_cast<std::size_t>(j) * (2 * m) + k] = f(grid.phi[k], grid.theta[j]);
      }
    }
    const SphereInterpolant interp(grid, samples);
    const std::vector<double> values = interp.eval_many(ep, et, threads);

    double max_diff = 0.0, max_ref = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double ref = f(ep[i], et[i]);
      max_diff = std::max(max_diff, std::abs(values[i] - ref));
      max_ref = std::max(max_ref, std::abs(ref));
    }
    rows.push_back({to_string(kind), m, static_cast<long long>(samples.size()),
                    max_ref == 0.0 ? max_diff : max_diff / max_ref});
  }
  return rows;
}

std::vector<ConvergenceRow> disk_convergence(DiskGridKind kind, std::span<const int> m_list,
                                             int eval_count, std::uint64_t seed,
                                             bool include_origin, bool constant_field,
                                             unsigned threads) {
  const std::vector<DiskPoint> pts = disk_eval_points(eval_count, seed);
  std::vector<double> ep(pts.size()), er(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ep[i] = pts[i].phi;
    er[i] = pts[i].rho;
  }
  auto f = [&](double phi, double rho) { return constant_field ? 1.0 : disk_target(phi, rho); };

  std::vector<ConvergenceRow> rows;
  for (int m : m_list) {
    const int n = m;
    const DiskGrid grid = make_disk_grid(kind, m, n, include_origin);
    std::vector<double> samples(static_cast<std::size_t>(n + 1) * (2 * m));
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k < 2 * m; ++k) {
        samples[static_cast<std::size_t>(j) * (2 * m) + k] = f(grid.phi[k], grid.rho[j]);
      }
    }
    const DiskInterpolant interp(grid, samples);
    const std::vector<double> values = interp.eval_many(ep, er, threads);

    double max_diff = 0.0, max_ref = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double ref = f(ep[i], er[i]);
      max_diff = std::max(max_diff, std::abs(values[i] - ref));
      max_ref = std::max(max_ref, std::abs(ref));
    }
    rows.push_back({to_string(kind), m, static_cast<long long>(samples.size()),
                    max_ref == 0.0 ? max_diff : max_diff / max_ref});
  }
  return rows;
}

bool geometric_decay(std::span<const double> errors, double ratio, double floor) {
  if (errors.empty()) return false;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    if (errors[i] > floor) {
      if (!(errors[i + 1] < errors[i] / ratio)) return false;
    } else {
      // once at the floor the ratio obligation lapses, but the error may not
      // resurge above it
      if (!(errors[i + 1] <= floor)) return false;
    }
  }
  return true;
}

}  // namespace dfsbary

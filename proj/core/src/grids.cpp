#include "dfsbary/grids.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dfsbary/errors.hpp"
#include "dfsbary/gauss_legendre.hpp"

namespace dfsbary {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> equispaced_longitudes(int m) {
  std::vector<double> phi(static_cast<std::size_t>(2 * m));
  for (int k = 0; k < 2 * m; ++k) phi[k] = kPi * static_cast<double>(k) / m;
  return phi;
}

}  // namespace

SphereGrid make_sphere_grid(SphereGridKind kind, int m, int n) {
  if (m < 1) throw size_error("make_sphere_grid: m must be >= 1, got " + std::to_string(m));
  if (n < 2) throw size_error("make_sphere_grid: n must be >= 2, got " + std::to_string(n));

  SphereGrid g;
  g.kind = kind;
  g.m = m;
  g.n = n;
  g.phi = equispaced_longitudes(m);
  g.theta.assign(static_cast<std::size_t>(n), 0.0);

  switch (kind) {
    case SphereGridKind::EQ:
      for (int j = 0; j < n; ++j) g.theta[j] = kPi * static_cast<double>(j) / (n - 1);
      g.theta[0] = 0.0;  // pin the poles exactly
      g.theta[n - 1] = kPi;
      break;
    case SphereGridKind::SEQ:
      // symmetric about pi/2: fill half and mirror
      for (int j = 0; j < n / 2; ++j) {
        const double t = kPi * (j + 0.5) / n;
        g.theta[j] = t;
        g.theta[n - 1 - j] = kPi - t;
      }
      if (n % 2 == 1) g.theta[n / 2] = 0.5 * kPi;
      break;
    case SphereGridKind::GL: {
      const GLRule rule = gl_nodes(n);
      // z descending so theta is ascending
      for (int j = 0; j < n; ++j) g.theta[j] = std::acos(rule.nodes[n - 1 - j]);
      break;
    }
  }
  return g;
}

DiskGrid make_disk_grid(DiskGridKind kind, int m, int n, bool include_origin) {
  if (m < 1) throw size_error("make_disk_grid: m must be >= 1, got " + std::to_string(m));
  if (n < 1) throw size_error("make_disk_grid: n must be >= 1, got " + std::to_string(n));

  DiskGrid g;
  g.kind = kind;
  g.m = m;
  g.n = n;
  g.include_origin = include_origin;
  g.ell = include_origin ? 2 * n : 2 * n + 1;
  g.phi = equispaced_longitudes(m);
  g.rho.assign(static_cast<std::size_t>(n + 1), 0.0);

  switch (kind) {
    case DiskGridKind::CH1:
      for (int j = 0; j <= n; ++j) g.rho[j] = std::cos((j + 0.5) * kPi / (g.ell + 1));
      break;
    case DiskGridKind::CH2:
      for (int j = 0; j <= n; ++j) g.rho[j] = std::cos(static_cast<double>(j) * kPi / g.ell);
      g.rho[0] = 1.0;
      break;
    case DiskGridKind::GLRadial: {
      const GLRule rule = gl_nodes(g.ell + 1);
      // the n+1 largest roots, descending
      for (int j = 0; j <= n; ++j) g.rho[j] = rule.nodes[g.ell - j];
      break;
    }
  }
  // The odd radial formulas divide by rho_j, so the origin must be a literal
  // zero rather than a ~1e-17 residue of cos(pi/2).
  if (include_origin) g.rho[n] = 0.0;
  return g;
}

std::string to_string(SphereGridKind kind) {
  switch (kind) {
    case SphereGridKind::EQ: return "eq";
    case SphereGridKind::SEQ: return "seq";
    case SphereGridKind::GL: return "gl";
  }
  return "?";
}

std::string to_string(DiskGridKind kind) {
  switch (kind) {
    case DiskGridKind::CH1: return "ch1";
    case DiskGridKind::CH2: return "ch2";
    case DiskGridKind::GLRadial: return "glr";
  }
  return "?";
}

bool parse_sphere_grid_kind(const std::string& name, SphereGridKind& out) {
  if (name == "eq") out = SphereGridKind::EQ;
  else if (name == "seq") out = SphereGridKind::SEQ;
  else if (name == "gl") out = SphereGridKind::GL;
  else return false;
  return true;
}

bool parse_disk_grid_kind(const std::string& name, DiskGridKind& out) {
  if (name == "ch1") out = DiskGridKind::CH1;
  else if (name == "ch2") out = DiskGridKind::CH2;
  else if (name == "glr") out = DiskGridKind::GLRadial;
  else return false;
  return true;
}

}  // namespace dfsbary

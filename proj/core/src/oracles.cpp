#include "dfsbary/oracles.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dfsbary/errors.hpp"

namespace dfsbary::oracles {

namespace {

constexpr std::size_t kMaxNodes = 64;

void check_sizes(std::span<const double> nodes, std::span<const double> samples,
                 const char* who) {
  if (nodes.empty()) throw size_error(std::string(who) + ": empty node set");
  if (nodes.size() > kMaxNodes) {
    throw size_error(std::string(who) + ": oracle node count limited to 64");
  }
  if (nodes.size() != samples.size()) {
    throw size_error(std::string(who) + ": node/sample size mismatch");
  }
}

double cosine_lagrange(std::span<const double> nodes, std::span<const double> samples,
                       double theta) {
  const std::size_t n = nodes.size();
  const double x = std::cos(theta);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = std::cos(nodes[j]);
    if (x == xj) return samples[j];
    double term = samples[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double xi = std::cos(nodes[i]);
      term *= (x - xi) / (xj - xi);
    }
    acc += term;
  }
  return acc;
}

double sine_lagrange(std::span<const double> nodes, std::span<const double> samples,
                     double theta) {
  const std::size_t n = nodes.size();
  const double x = std::cos(theta);
  const double st = std::sin(theta);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = std::cos(nodes[j]);
    if (x == xj) return samples[j] * (st / std::sin(nodes[j]));
    double term = samples[j] * st / std::sin(nodes[j]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double xi = std::cos(nodes[i]);
      term *= (x - xi) / (xj - xi);
    }
    acc += term;
  }
  return acc;
}

double full_trig_bary(std::span<const double> nodes, std::span<const double> samples,
                      double phi) {
  const std::size_t n = nodes.size();
  if (n % 2 != 0) {
    throw size_error("oracle_eval: the full trigonometric formula needs an even node count");
  }
  double num = 0.0, den = 0.0, sign = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double h = 0.5 * (phi - nodes[k]);
    const double s = std::sin(h);
    if (std::abs(s) < 1e-13) return samples[k];
    const double w = std::cos(h) / s;
    num += sign * w * samples[k];
    den += sign * w;
    sign = -sign;
  }
  return num / den;
}

double full_poly_bary(std::span<const double> nodes, std::span<const double> samples, double x) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double d = nodes[j] - nodes[i];
      if (d == 0.0) throw degeneracy_error("oracle_eval: coincident nodes");
      w[j] /= d;
    }
  }
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x == nodes[j]) return samples[j];
    const double r = w[j] / (x - nodes[j]);
    num += r * samples[j];
    den += r;
  }
  return num / den;
}

}  // namespace

double oracle_eval(OracleKind kind, std::span<const double> nodes,
                   std::span<const double> samples, double x) {
  check_sizes(nodes, samples, "oracle_eval");
  switch (kind) {
    case OracleKind::CosineLagrange: return cosine_lagrange(nodes, samples, x);
    case OracleKind::SineLagrange: return sine_lagrange(nodes, samples, x);
    case OracleKind::FullTrigBary: return full_trig_bary(nodes, samples, x);
    case OracleKind::FullPolyBary: return full_poly_bary(nodes, samples, x);
  }
  throw size_error("oracle_eval: unknown kind");
}

double eval_sphere_reference(const SphereGrid& grid, std::span<const double> samples,
                             double phi, double theta) {
  const int n = grid.n;
  const int m = grid.m;
  if (samples.size() != static_cast<std::size_t>(n) * (2 * m)) {
    throw size_error("eval_sphere_reference: samples must be n x 2m");
  }
  if (n > static_cast<int>(kMaxNodes) || 2 * m > static_cast<int>(kMaxNodes)) {
    throw size_error("eval_sphere_reference: oracle node count limited to 64 per direction");
  }

  std::vector<double> fplus(n), fminus(n);
  std::vector<double> uc(2 * m), us(2 * m);
  const bool poles = grid.kind == SphereGridKind::EQ;
  std::vector<double> interior_nodes;
  if (poles) {
    interior_nodes.assign(grid.theta.begin() + 1, grid.theta.end() - 1);
  }

  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < n; ++j) {
      const double a = samples[static_cast<std::size_t>(j) * (2 * m) + k];
      const double b = samples[static_cast<std::size_t>(j) * (2 * m) + k + m];
      fplus[j] = 0.5 * (a + b);
      fminus[j] = 0.5 * (a - b);
    }
    const double c = cosine_lagrange(grid.theta, fplus, theta);
    double s = 0.0;
    if (poles) {
      // the pole samples of the odd part do not contribute (sine basis
      // vanishes there)
      if (n > 2) {
        std::span<const double> inner(fminus.data() + 1, static_cast<std::size_t>(n - 2));
        s = sine_lagrange(interior_nodes, inner, theta);
      }
    } else {
      s = sine_lagrange(grid.theta, fminus, theta);
    }
    uc[k] = c;
    uc[k + m] = c;
    us[k] = s;
    us[k + m] = -s;
  }
  return full_trig_bary(grid.phi, uc, phi) + full_trig_bary(grid.phi, us, phi);
}

double eval_disk_reference(const DiskGrid& grid, std::span<const double> samples, double phi,
                           double rho) {
  const int rows = grid.n + 1;
  const int m = grid.m;
  if (samples.size() != static_cast<std::size_t>(rows) * (2 * m)) {
    throw size_error("eval_disk_reference: samples must be (n+1) x 2m");
  }
  if (2 * rows > static_cast<int>(kMaxNodes) || 2 * m > static_cast<int>(kMaxNodes)) {
    throw size_error("eval_disk_reference: oracle node count limited to 64 per direction");
  }

  // mirrored radial node set over [-1, 1]
  std::vector<double> ext;
  for (int j = 0; j < rows; ++j) ext.push_back(grid.rho[j]);
  for (int j = grid.include_origin ? rows - 2 : rows - 1; j >= 0; --j) {
    ext.push_back(-grid.rho[j]);
  }

  std::vector<double> feven(ext.size()), fodd(ext.size());
  std::vector<double> vc(2 * m), vs(2 * m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < rows; ++j) {
      const double a = samples[static_cast<std::size_t>(j) * (2 * m) + k];
      const double b = samples[static_cast<std::size_t>(j) * (2 * m) + k + m];
      const double p = 0.5 * (a + b);
      const double q = 0.5 * (a - b);
      feven[j] = p;
      fodd[j] = (grid.include_origin && j == rows - 1) ? 0.0 : q;
      const std::size_t mirror = ext.size() - 1 - static_cast<std::size_t>(j);
      if (mirror >= static_cast<std::size_t>(rows)) {
        feven[mirror] = p;
        fodd[mirror] = -fodd[j];
      }
    }
    const double e = full_poly_bary(ext, feven, rho);
    const double o = full_poly_bary(ext, fodd, rho);
    vc[k] = e;
    vc[k + m] = e;
    vs[k] = o;
    vs[k + m] = -o;
  }
  return full_trig_bary(grid.phi, vc, phi) + full_trig_bary(grid.phi, vs, phi);
}

}  // namespace dfsbary::oracles

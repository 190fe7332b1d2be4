#include "dfsbary/bary1d.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dfsbary/errors.hpp"

namespace dfsbary {

namespace {

constexpr double kPi = std::numbers::pi;
// Exact-equality would be too strict for node-set membership of the poles /
// origin; anything this close behaves as a boundary node.
constexpr double kBoundaryTol = 1e-14;
// Loose check that the nodes actually follow the closed-form pattern the
// requested grid kind assumes.
constexpr double kPatternTol = 1e-9;

void require_increasing(std::span<const double> nodes, const char* who) {
  if (nodes.empty()) throw size_error(std::string(who) + ": empty node set");
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    if (!(nodes[j] > nodes[j - 1])) {
      throw degeneracy_error(std::string(who) + ": nodes must be strictly increasing");
    }
  }
}

void require_decreasing(std::span<const double> nodes, const char* who) {
  if (nodes.empty()) throw size_error(std::string(who) + ": empty node set");
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    if (!(nodes[j] < nodes[j - 1])) {
      throw degeneracy_error(std::string(who) + ": nodes must be strictly decreasing");
    }
  }
}

void require_theta_range(std::span<const double> nodes, const char* who) {
  if (nodes.front() < 0.0 || nodes.back() > kPi) {
    throw size_error(std::string(who) + ": nodes must lie in [0, pi]");
  }
}

void require_pattern(bool ok, const char* who, const char* pattern) {
  if (!ok) {
    throw size_error(std::string(who) + ": nodes do not match the " + pattern + " pattern");
  }
}

bool matches_eq(std::span<const double> t) {
  const std::size_t n = t.size();
  if (n < 2) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(t[j] - kPi * static_cast<double>(j) / static_cast<double>(n - 1)) > kPatternTol)
      return false;
  }
  return true;
}

bool matches_seq(std::span<const double> t) {
  const std::size_t n = t.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(t[j] - kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n)) >
        kPatternTol)
      return false;
  }
  return true;
}

void checked_sample_size(const WeightTable& t, std::span<const double> samples,
                         const char* who) {
  if (samples.size() != t.sample_count()) {
    throw size_error(std::string(who) + ": expected " + std::to_string(t.sample_count()) +
                     " samples, found " + std::to_string(samples.size()));
  }
}

void require_phi_pattern(std::span<const double> phi, const char* who) {
  if (phi.empty()) throw size_error(std::string(who) + ": empty node set");
  const std::size_t m = phi.size();
  for (std::size_t k = 0; k < m; ++k) {
    if (std::abs(phi[k] - kPi * static_cast<double>(k) / static_cast<double>(m)) > kPatternTol) {
      throw size_error(std::string(who) + ": nodes must be pi*k/m");
    }
  }
}

}  // namespace

namespace detail {

std::vector<double> scaled_inverse_products(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) throw size_error("scaled_inverse_products: empty node set");
  std::vector<double> mant(n);
  std::vector<long> expo(n);
  for (std::size_t j = 0; j < n; ++j) {
    double m = 1.0;
    long e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double d = x[j] - x[i];
      if (d == 0.0) throw degeneracy_error("barycentric weights: coincident nodes");
      int k = 0;
      m = std::frexp(m * d, &k);
      e += k;
    }
    // w_j = 1 / (m * 2^e); renormalize the mantissa into [0.5, 1)
    int k = 0;
    mant[j] = std::frexp(1.0 / m, &k);
    expo[j] = -e + k;
  }
  std::size_t jmax = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (expo[j] > expo[jmax] ||
        (expo[j] == expo[jmax] && std::abs(mant[j]) > std::abs(mant[jmax]))) {
      jmax = j;
    }
  }
  std::vector<double> w(n);
  const double mmax = std::abs(mant[jmax]);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = std::ldexp(mant[j] / mmax, static_cast<int>(expo[j] - expo[jmax]));
  }
  return w;
}

}  // namespace detail

WeightTable trig_even_weights(std::span<const double> theta_nodes, SphereGridKind kind) {
  require_increasing(theta_nodes, "trig_even_weights");
  require_theta_range(theta_nodes, "trig_even_weights");

  WeightTable t;
  t.kind = WeightTable::Kind::TrigEven;
  t.nodes.assign(theta_nodes.begin(), theta_nodes.end());
  t.contains_zero = theta_nodes.front() < kBoundaryTol;
  t.contains_pi = kPi - theta_nodes.back() < kBoundaryTol;
  const std::size_t n = theta_nodes.size();
  t.weights.resize(n);

  switch (kind) {
    case SphereGridKind::EQ: {
      require_pattern(matches_eq(theta_nodes), "trig_even_weights", "EQ");
      for (std::size_t j = 0; j < n; ++j) {
        const double delta = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        t.weights[j] = (j % 2 == 0) ? delta : -delta;
      }
      break;
    }
    case SphereGridKind::SEQ: {
      require_pattern(matches_seq(theta_nodes), "trig_even_weights", "SEQ");
      for (std::size_t j = 0; j < n; ++j) {
        const double s = std::sin(theta_nodes[j]);
        t.weights[j] = (j % 2 == 0) ? s : -s;
      }
      break;
    }
    case SphereGridKind::GL: {
      // general-node path: inverse products over cos(theta)
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = std::cos(theta_nodes[j]);
      t.weights = detail::scaled_inverse_products(x);
      break;
    }
  }

  t.tnodes.resize(n);
  for (std::size_t j = 0; j < n; ++j) t.tnodes[j] = std::cos(theta_nodes[j]);
  return t;
}

double trig_even_eval(const WeightTable& t, std::span<const double> samples, double theta) {
  checked_sample_size(t, samples, "trig_even_eval");
  const double x = std::cos(theta);
  const double tol = kNodeHitTol * (1.0 + std::abs(x));
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < t.tnodes.size(); ++j) {
    const double d = x - t.tnodes[j];
    if (std::abs(d) < tol) return samples[j];
    const double r = t.weights[j] / d;
    num += r * samples[j];
    den += r;
  }
  return num / den;
}

WeightTable trig_odd_weights(std::span<const double> theta_nodes, SphereGridKind kind) {
  require_increasing(theta_nodes, "trig_odd_weights");
  require_theta_range(theta_nodes, "trig_odd_weights");

  WeightTable t;
  t.kind = WeightTable::Kind::TrigOdd;
  const std::size_t n = theta_nodes.size();
  const bool has_zero = theta_nodes.front() < kBoundaryTol;
  const bool has_pi = kPi - theta_nodes.back() < kBoundaryTol;
  t.contains_zero = has_zero;
  t.contains_pi = has_pi;

  // base must be proportional to the generic product weights w_j of the node
  // set.  with_poles: numerator w_j sin(theta_j), denominator
  // w_j sin^2(theta_j), the pole terms vanish and are dropped; otherwise
  // numerator w_j / sin(theta_j), denominator w_j.
  auto fold = [&](std::span<const double> base, bool with_poles) {
    t.lead_drop = with_poles && has_zero ? 1 : 0;
    t.tail_drop = with_poles && has_pi ? 1 : 0;
    const std::size_t lo = static_cast<std::size_t>(t.lead_drop);
    const std::size_t hi = n - static_cast<std::size_t>(t.tail_drop);
    for (std::size_t j = lo; j < hi; ++j) {
      const double s = std::sin(theta_nodes[j]);
      const double b = with_poles ? base[j] * s : base[j] / s;
      t.nodes.push_back(theta_nodes[j]);
      t.tnodes.push_back(std::cos(theta_nodes[j]));
      t.weights.push_back(b);
      t.denom_weights.push_back(b * s);
    }
  };

  switch (kind) {
    case SphereGridKind::EQ: {
      require_pattern(matches_eq(theta_nodes), "trig_odd_weights", "EQ");
      // EQ product weights are proportional to (-1)^j delta_j; the endpoint
      // halving only touches the pole terms, which are dropped anyway
      std::vector<double> sign(n);
      for (std::size_t j = 0; j < n; ++j) sign[j] = (j % 2 == 0) ? 1.0 : -1.0;
      fold(sign, /*with_poles=*/true);
      break;
    }
    case SphereGridKind::SEQ: {
      require_pattern(matches_seq(theta_nodes), "trig_odd_weights", "SEQ");
      // SEQ product weights are proportional to (-1)^j sin(theta_j)
      std::vector<double> base(n);
      for (std::size_t j = 0; j < n; ++j) {
        base[j] = ((j % 2 == 0) ? 1.0 : -1.0) * std::sin(theta_nodes[j]);
      }
      fold(base, /*with_poles=*/false);
      break;
    }
    case SphereGridKind::GL: {
      if (has_zero != has_pi) {
        throw degeneracy_error(
            "trig_odd_weights: node sets containing exactly one pole are not supported");
      }
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = std::cos(theta_nodes[j]);
      const std::vector<double> w = detail::scaled_inverse_products(x);
      fold(w, /*with_poles=*/has_zero);
      break;
    }
  }
  return t;
}

double trig_odd_eval(const WeightTable& t, std::span<const double> samples, double theta) {
  checked_sample_size(t, samples, "trig_odd_eval");
  if (t.nodes.empty()) return 0.0;
  const double x = std::cos(theta);
  const double st = std::sin(theta);
  const double tol = kNodeHitTol * (1.0 + std::abs(x));
  const std::size_t lead = static_cast<std::size_t>(t.lead_drop);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < t.tnodes.size(); ++j) {
    const double d = x - t.tnodes[j];
    if (std::abs(d) < tol) return samples[j + lead] * (st / std::sin(t.nodes[j]));
    const double inv = 1.0 / d;
    num += t.weights[j] * inv * samples[j + lead];
    den += t.denom_weights[j] * inv;
  }
  return st * num / den;
}

double pi_periodic_eval(std::span<const double> phi_nodes, std::span<const double> column_values,
                        double phi) {
  require_phi_pattern(phi_nodes, "pi_periodic_eval");
  const std::size_t m = phi_nodes.size();
  if (column_values.size() != m) {
    throw size_error("pi_periodic_eval: expected " + std::to_string(m) + " values, found " +
                     std::to_string(column_values.size()));
  }
  const bool even = (m % 2 == 0);
  double num = 0.0, den = 0.0, sign = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double d = phi - phi_nodes[k];
    const double s = std::sin(d);
    if (std::abs(s) < kNodeHitTol) return column_values[k];
    const double w = even ? std::cos(d) / s : 1.0 / s;
    num += sign * w * column_values[k];
    den += sign * w;
    sign = -sign;
  }
  return num / den;
}

double pi_antiperiodic_eval(std::span<const double> phi_nodes,
                            std::span<const double> column_values, double phi) {
  require_phi_pattern(phi_nodes, "pi_antiperiodic_eval");
  const std::size_t m = phi_nodes.size();
  if (column_values.size() != m) {
    throw size_error("pi_antiperiodic_eval: expected " + std::to_string(m) + " values, found " +
                     std::to_string(column_values.size()));
  }
  const bool even = (m % 2 == 0);
  double num = 0.0, den = 0.0, sign = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double d = phi - phi_nodes[k];
    const double s = std::sin(d);
    const double c = std::cos(d);
    if (std::abs(s) < kNodeHitTol) return c > 0.0 ? column_values[k] : -column_values[k];
    const double csc = 1.0 / s;
    const double cot = c * csc;
    if (even) {
      num += sign * csc * column_values[k];
      den += sign * cot;
    } else {
      num += sign * cot * column_values[k];
      den += sign * csc;
    }
    sign = -sign;
  }
  return num / den;
}

namespace {

bool matches_ch1(std::span<const double> rho, int ell) {
  const std::size_t count = rho.size();
  for (std::size_t j = 0; j < count; ++j) {
    if (std::abs(rho[j] - std::cos((static_cast<double>(j) + 0.5) * kPi / (ell + 1))) >
        kPatternTol)
      return false;
  }
  return true;
}

bool matches_ch2(std::span<const double> rho, int ell) {
  const std::size_t count = rho.size();
  for (std::size_t j = 0; j < count; ++j) {
    if (std::abs(rho[j] - std::cos(static_cast<double>(j) * kPi / ell)) > kPatternTol)
      return false;
  }
  return true;
}

void validate_radial(std::span<const double> rho, bool include_origin, const char* who) {
  require_decreasing(rho, who);
  if (rho.front() > 1.0 || rho.back() < 0.0) {
    throw size_error(std::string(who) + ": nodes must lie in [0, 1]");
  }
  if (include_origin && rho.back() != 0.0) {
    throw size_error(std::string(who) + ": include_origin requires the last radius to be 0");
  }
  if (!include_origin && rho.back() == 0.0) {
    throw size_error(std::string(who) + ": unexpected origin node");
  }
}

}  // namespace

WeightTable poly_even_weights(std::span<const double> rho_nodes, DiskGridKind kind,
                              bool include_origin) {
  validate_radial(rho_nodes, include_origin, "poly_even_weights");

  WeightTable t;
  t.kind = WeightTable::Kind::PolyEven;
  t.nodes.assign(rho_nodes.begin(), rho_nodes.end());
  t.contains_zero = include_origin;
  const std::size_t count = rho_nodes.size();
  const std::size_t last = count - 1;
  const int n = static_cast<int>(last);
  const int ell = include_origin ? 2 * n : 2 * n + 1;
  t.weights.resize(count);

  switch (kind) {
    case DiskGridKind::CH1: {
      require_pattern(matches_ch1(rho_nodes, ell), "poly_even_weights", "CH1");
      if (include_origin) {
        for (std::size_t j = 0; j < count; ++j) {
          const double xi = std::sin((2.0 * j + 1.0) * kPi / (4.0 * n + 2.0));
          const double halve = (j == last) ? 0.5 : 1.0;
          t.weights[j] = ((j % 2 == 0) ? 1.0 : -1.0) * xi * halve;
        }
      } else {
        for (std::size_t j = 0; j < count; ++j) {
          const double gamma = std::sin((2.0 * j + 1.0) * kPi / (4.0 * n + 4.0));
          t.weights[j] = ((j % 2 == 0) ? 1.0 : -1.0) * rho_nodes[j] * gamma;
        }
      }
      break;
    }
    case DiskGridKind::CH2: {
      require_pattern(matches_ch2(rho_nodes, ell), "poly_even_weights", "CH2");
      if (include_origin) {
        for (std::size_t j = 0; j < count; ++j) {
          const double halve = (j == 0 || j == last) ? 0.5 : 1.0;
          t.weights[j] = ((j % 2 == 0) ? 1.0 : -1.0) * halve;
        }
      } else {
        for (std::size_t j = 0; j < count; ++j) {
          const double halve = (j == 0) ? 0.5 : 1.0;
          t.weights[j] = ((j % 2 == 0) ? 1.0 : -1.0) * rho_nodes[j] * halve;
        }
      }
      break;
    }
    case DiskGridKind::GLRadial: {
      std::vector<double> x(count);
      for (std::size_t j = 0; j < count; ++j) x[j] = rho_nodes[j] * rho_nodes[j];
      t.weights = detail::scaled_inverse_products(x);
      break;
    }
  }

  t.tnodes.resize(count);
  for (std::size_t j = 0; j < count; ++j) t.tnodes[j] = rho_nodes[j] * rho_nodes[j];
  return t;
}

double poly_even_eval(const WeightTable& t, std::span<const double> samples, double rho) {
  checked_sample_size(t, samples, "poly_even_eval");
  const double x = rho * rho;
  const double tol = kNodeHitTol * (1.0 + std::abs(x));
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < t.tnodes.size(); ++j) {
    const double d = x - t.tnodes[j];
    if (std::abs(d) < tol) return samples[j];
    const double r = t.weights[j] / d;
    num += r * samples[j];
    den += r;
  }
  return num / den;
}

WeightTable poly_odd_weights(std::span<const double> rho_nodes, DiskGridKind kind,
                             bool include_origin) {
  validate_radial(rho_nodes, include_origin, "poly_odd_weights");

  WeightTable t;
  t.kind = WeightTable::Kind::PolyOdd;
  t.contains_zero = include_origin;
  const std::size_t count = rho_nodes.size();
  const std::size_t last = count - 1;
  const int n = static_cast<int>(last);
  const int ell = include_origin ? 2 * n : 2 * n + 1;
  // the origin term of the origin-included formulas carries a rho_j factor
  // and vanishes identically
  t.tail_drop = include_origin ? 1 : 0;
  const std::size_t kept = count - static_cast<std::size_t>(t.tail_drop);

  auto push = [&](std::size_t j, double b) {
    t.nodes.push_back(rho_nodes[j]);
    t.tnodes.push_back(rho_nodes[j] * rho_nodes[j]);
    t.weights.push_back(b);
    t.denom_weights.push_back(b * rho_nodes[j]);
  };

  switch (kind) {
    case DiskGridKind::CH1: {
      require_pattern(matches_ch1(rho_nodes, ell), "poly_odd_weights", "CH1");
      if (include_origin) {
        for (std::size_t j = 0; j < kept; ++j) {
          const double xi = std::sin((2.0 * j + 1.0) * kPi / (4.0 * n + 2.0));
          push(j, ((j % 2 == 0) ? 1.0 : -1.0) * xi * rho_nodes[j]);
        }
      } else {
        for (std::size_t j = 0; j < kept; ++j) {
          const double gamma = std::sin((2.0 * j + 1.0) * kPi / (4.0 * n + 4.0));
          push(j, ((j % 2 == 0) ? 1.0 : -1.0) * gamma);
        }
      }
      break;
    }
    case DiskGridKind::CH2: {
      require_pattern(matches_ch2(rho_nodes, ell), "poly_odd_weights", "CH2");
      if (include_origin) {
        for (std::size_t j = 0; j < kept; ++j) {
          const double halve = (j == 0) ? 0.5 : 1.0;
          push(j, ((j % 2 == 0) ? 1.0 : -1.0) * rho_nodes[j] * halve);
        }
      } else {
        for (std::size_t j = 0; j < kept; ++j) {
          const double halve = (j == 0) ? 0.5 : 1.0;
          push(j, ((j % 2 == 0) ? 1.0 : -1.0) * halve);
        }
      }
      break;
    }
    case DiskGridKind::GLRadial: {
      std::vector<double> x(count);
      for (std::size_t j = 0; j < count; ++j) x[j] = rho_nodes[j] * rho_nodes[j];
      const std::vector<double> w = detail::scaled_inverse_products(x);
      if (include_origin) {
        for (std::size_t j = 0; j < kept; ++j) push(j, w[j] * rho_nodes[j]);
      } else {
        for (std::size_t j = 0; j < kept; ++j) push(j, w[j] / rho_nodes[j]);
      }
      break;
    }
  }
  return t;
}

double poly_odd_eval(const WeightTable& t, std::span<const double> samples, double rho) {
  checked_sample_size(t, samples, "poly_odd_eval");
  if (t.nodes.empty() || rho == 0.0) return 0.0;
  const double x = rho * rho;
  const double tol = kNodeHitTol * (1.0 + std::abs(x));
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < t.tnodes.size(); ++j) {
    const double d = x - t.tnodes[j];
    if (std::abs(d) < tol) return samples[j] * (rho / t.nodes[j]);
    const double inv = 1.0 / d;
    num += t.weights[j] * inv * samples[j];
    den += t.denom_weights[j] * inv;
  }
  return rho * num / den;
}

}  // namespace dfsbary

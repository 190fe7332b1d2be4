#include "dfsbary/disk_interp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dfsbary/errors.hpp"
#include "dfsbary/parallel.hpp"

namespace dfsbary {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double phi) {
  if (phi >= 0.0 && phi < kTwoPi) return phi;
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace

struct DiskInterpolant::Scratch {
  std::vector<double> ucol;  // per-column even radial values
  std::vector<double> vcol;  // per-column odd radial values
  std::vector<double> re;
  std::vector<double> so;
};

DiskInterpolant::DiskInterpolant(DiskGrid grid, std::span<const double> samples)
    : grid_(std::move(grid)) {
  const int rows = grid_.n + 1;
  const int m = grid_.m;
  const std::size_t expected = static_cast<std::size_t>(rows) * (2 * m);
  if (samples.size() != expected) {
    throw size_error("disk samples: expected " + std::to_string(rows) + "x" +
                     std::to_string(2 * m) + " ((n+1) x 2m), found " +
                     std::to_string(samples.size()) + " values");
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw size_error("disk samples: non-finite value");
  }
  raw_.assign(samples.begin(), samples.end());

  fplus_.resize(static_cast<std::size_t>(m) * rows);
  fminus_.resize(static_cast<std::size_t>(m) * rows);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < rows; ++j) {
      const double a = raw_[static_cast<std::size_t>(j) * (2 * m) + k];
      const double b = raw_[static_cast<std::size_t>(j) * (2 * m) + k + m];
      fplus_[static_cast<std::size_t>(k) * rows + j] = 0.5 * (a + b);
      fminus_[static_cast<std::size_t>(k) * rows + j] = 0.5 * (a - b);
    }
  }

  even_ = poly_even_weights(grid_.rho, grid_.kind, grid_.include_origin);
  odd_ = poly_odd_weights(grid_.rho, grid_.kind, grid_.include_origin);

  cos_phi_.resize(m);
  sin_phi_.resize(m);
  for (int k = 0; k < m; ++k) {
    cos_phi_[k] = std::cos(grid_.phi[k]);
    sin_phi_[k] = std::sin(grid_.phi[k]);
  }
}

double DiskInterpolant::eval_impl(double phi, double rho, Scratch& sc) const {
  const int nr = rows();
  const int m = grid_.m;
  sc.ucol.resize(m);
  sc.vcol.resize(m);

  const double r = wrap_two_pi(phi);
  const double x = rho * rho;
  const double tolx = kNodeHitTol * (1.0 + std::abs(x));

  int je = -1;
  for (int j = 0; j < nr; ++j) {
    if (std::abs(x - even_.tnodes[j]) < tolx) {
      je = j;
      break;
    }
  }
  const int no = static_cast<int>(odd_.tnodes.size());
  int jo = -1;
  for (int j = 0; j < no; ++j) {
    if (std::abs(x - odd_.tnodes[j]) < tolx) {
      jo = j;
      break;
    }
  }

  if (je >= 0) {
    for (int k = 0; k < m; ++k) sc.ucol[k] = fplus_[static_cast<std::size_t>(k) * nr + je];
  } else {
    sc.re.resize(nr);
    double de = 0.0;
    for (int j = 0; j < nr; ++j) {
      const double v = even_.weights[j] / (x - even_.tnodes[j]);
      sc.re[j] = v;
      de += v;
    }
    const double inv_de = 1.0 / de;
    for (int k = 0; k < m; ++k) {
      const double* col = fplus_.data() + static_cast<std::size_t>(k) * nr;
      double acc = 0.0;
      for (int j = 0; j < nr; ++j) acc += sc.re[j] * col[j];
      sc.ucol[k] = acc * inv_de;
    }
  }

  if (no == 0 || rho == 0.0) {
    for (int k = 0; k < m; ++k) sc.vcol[k] = 0.0;
  } else if (jo >= 0) {
    const double q = rho / odd_.nodes[jo];
    // odd tables only ever drop the trailing origin node
    for (int k = 0; k < m; ++k) {
      sc.vcol[k] = fminus_[static_cast<std::size_t>(k) * nr + jo] * q;
    }
  } else {
    sc.so.resize(no);
    double d_odd = 0.0;
    for (int j = 0; j < no; ++j) {
      const double inv = 1.0 / (x - odd_.tnodes[j]);
      sc.so[j] = odd_.weights[j] * inv;
      d_odd += odd_.denom_weights[j] * inv;
    }
    const double f = rho / d_odd;
    for (int k = 0; k < m; ++k) {
      const double* col = fminus_.data() + static_cast<std::size_t>(k) * nr;
      double acc = 0.0;
      for (int j = 0; j < no; ++j) acc += sc.so[j] * col[j];
      sc.vcol[k] = acc * f;
    }
  }

  const double sr = std::sin(r);
  const double cr = std::cos(r);
  const bool m_even = (m % 2 == 0);
  double num = 0.0, den = 0.0, sign = 1.0;
  for (int k = 0; k < m; ++k) {
    const double s = sr * cos_phi_[k] - cr * sin_phi_[k];
    const double c = cr * cos_phi_[k] + sr * sin_phi_[k];
    if (std::abs(s) < kNodeHitTol) {
      const bool front = c > 0.0;
      if (je >= 0) {
        const double rj = even_.nodes[je];
        if (rj != 0.0) {
          const double ratio = rho / rj;
          if (ratio == 1.0) {
            return raw_[static_cast<std::size_t>(je) * (2 * m) + (front ? k : k + m)];
          }
          if (ratio == -1.0) {
            return raw_[static_cast<std::size_t>(je) * (2 * m) + (front ? k + m : k)];
          }
        }
      }
      return front ? sc.ucol[k] + sc.vcol[k] : sc.ucol[k] - sc.vcol[k];
    }
    const double csc = 1.0 / s;
    const double cot = c * csc;
    if (m_even) {
      num += sign * (cot * sc.ucol[k] + csc * sc.vcol[k]);
      den += sign * cot;
    } else {
      num += sign * (csc * sc.ucol[k] + cot * sc.vcol[k]);
      den += sign * csc;
    }
    sign = -sign;
  }
  return num / den;
}

double DiskInterpolant::eval(double phi, double rho) const {
  if (std::abs(rho) > 1.0) {
    throw domain_error("eval_disk: |rho| = " + std::to_string(std::abs(rho)) + " exceeds 1");
  }
  Scratch sc;
  return eval_impl(phi, rho, sc);
}

void DiskInterpolant::eval_many(std::span<const double> phi, std::span<const double> rho,
                                std::span<double> out, unsigned threads) const {
  if (phi.size() != rho.size() || phi.size() != out.size()) {
    throw size_error("eval_many: phi/rho/out sizes must match");
  }
  for (double r : rho) {
    if (std::abs(r) > 1.0) {
      throw domain_error("eval_disk: |rho| = " + std::to_string(std::abs(r)) + " exceeds 1");
    }
  }
  parallel_for(phi.size(), threads, [&](std::size_t begin, std::size_t end) {
    Scratch sc;
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = eval_impl(phi[i], rho[i], sc);
    }
  });
}

std::vector<double> DiskInterpolant::eval_many(std::span<const double> phi,
                                               std::span<const double> rho,
                                               unsigned threads) const {
  std::vector<double> out(phi.size());
  eval_many(phi, rho, out, threads);
  return out;
}

OriginReport check_origin_constancy(const DiskInterpolant& s, double tol, int angles) {
  OriginReport rep;
  if (angles < 1) angles = 1;
  double vmin = 0.0, vmax = 0.0, sum = 0.0;
  for (int i = 0; i < angles; ++i) {
    const double phi = kTwoPi * i / angles;
    const double v = s.eval(phi, 0.0);
    if (i == 0) {
      vmin = vmax = v;
    } else {
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
    sum += v;
  }
  rep.spread = vmax - vmin;
  rep.mean = sum / angles;
  rep.within_tol = rep.spread <= tol;
  return rep;
}

}  // namespace dfsbary

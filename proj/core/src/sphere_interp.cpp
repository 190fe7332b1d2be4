#include "dfsbary/sphere_interp.hpp"

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

struct SphereInterpolant::Scratch {
  std::vector<double> ucol;  // per-column even (cosine) interpolant values
  std::vector<double> vcol;  // per-column odd (sine) interpolant values
  std::vector<double> re;    // even weights / (x - x_j)
  std::vector<double> so;    // odd numerator weights / (x - x_j)
};

SphereInterpolant::SphereInterpolant(SphereGrid grid, std::span<const double> samples)
    : grid_(std::move(grid)) {
  const int n = grid_.n;
  const int m = grid_.m;
  const std::size_t expected = static_cast<std::size_t>(n) * (2 * m);
  if (samples.size() != expected) {
    throw size_error("sphere samples: expected " + std::to_string(n) + "x" +
                     std::to_string(2 * m) + " (n x 2m), found " +
                     std::to_string(samples.size()) + " values");
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw size_error("sphere samples: non-finite value");
  }
  raw_.assign(samples.begin(), samples.end());

  fplus_.resize(static_cast<std::size_t>(m) * n);
  fminus_.resize(static_cast<std::size_t>(m) * n);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < n; ++j) {
      const double a = raw_[static_cast<std::size_t>(j) * (2 * m) + k];
      const double b = raw_[static_cast<std::size_t>(j) * (2 * m) + k + m];
      fplus_[static_cast<std::size_t>(k) * n + j] = 0.5 * (a + b);
      fminus_[static_cast<std::size_t>(k) * n + j] = 0.5 * (a - b);
    }
  }

  even_ = trig_even_weights(grid_.theta, grid_.kind);
  odd_ = trig_odd_weights(grid_.theta, grid_.kind);

  cos_phi_.resize(m);
  sin_phi_.resize(m);
  for (int k = 0; k < m; ++k) {
    cos_phi_[k] = std::cos(grid_.phi[k]);
    sin_phi_[k] = std::sin(grid_.phi[k]);
  }
}

double SphereInterpolant::eval_impl(double phi, double theta, Scratch& sc) const {
  const int n = grid_.n;
  const int m = grid_.m;
  sc.ucol.resize(m);
  sc.vcol.resize(m);

  const double r = wrap_two_pi(phi);
  const double x = std::cos(theta);
  const double st = std::sin(theta);
  const double tolx = kNodeHitTol * (1.0 + std::abs(x));

  // latitude node hits are detected per table: the odd table may not contain
  // the poles even when the even table does
  int je = -1;
  for (int j = 0; j < n; ++j) {
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
    for (int k = 0; k < m; ++k) sc.ucol[k] = fplus_[static_cast<std::size_t>(k) * n + je];
  } else {
    sc.re.resize(n);
    double de = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = even_.weights[j] / (x - even_.tnodes[j]);
      sc.re[j] = v;
      de += v;
    }
    const double inv_de = 1.0 / de;
    for (int k = 0; k < m; ++k) {
      const double* col = fplus_.data() + static_cast<std::size_t>(k) * n;
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += sc.re[j] * col[j];
      sc.ucol[k] = acc * inv_de;
    }
  }

  if (no == 0) {
    for (int k = 0; k < m; ++k) sc.vcol[k] = 0.0;
  } else if (jo >= 0) {
    const double q = st / std::sin(odd_.nodes[jo]);
    const int row = jo + odd_.lead_drop;
    for (int k = 0; k < m; ++k) {
      sc.vcol[k] = fminus_[static_cast<std::size_t>(k) * n + row] * q;
    }
  } else {
    sc.so.resize(no);
    double d_odd = 0.0;
    for (int j = 0; j < no; ++j) {
      const double inv = 1.0 / (x - odd_.tnodes[j]);
      sc.so[j] = odd_.weights[j] * inv;
      d_odd += odd_.denom_weights[j] * inv;
    }
    const double f = st / d_odd;
    const int lead = odd_.lead_drop;
    for (int k = 0; k < m; ++k) {
      const double* col = fminus_.data() + static_cast<std::size_t>(k) * n + lead;
      double acc = 0.0;
      for (int j = 0; j < no; ++j) acc += sc.so[j] * col[j];
      sc.vcol[k] = acc * f;
    }
  }

  // longitude combination
  const double sr = std::sin(r);
  const double cr = std::cos(r);
  const bool m_even = (m % 2 == 0);
  double num = 0.0, den = 0.0, sign = 1.0;
  for (int k = 0; k < m; ++k) {
    const double s = sr * cos_phi_[k] - cr * sin_phi_[k];  // sin(r - phi_k)
    const double c = cr * cos_phi_[k] + sr * sin_phi_[k];  // cos(r - phi_k)
    if (std::abs(s) < kNodeHitTol) {
      const bool front = c > 0.0;
      if (je >= 0) {
        // exact node hit: return the raw sample bit-for-bit
        const double sj = std::sin(even_.nodes[je]);
        if (sj != 0.0) {
          const double ratio = st / sj;
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

double SphereInterpolant::eval(double phi, double theta) const {
  Scratch sc;
  return eval_impl(phi, theta, sc);
}

void SphereInterpolant::eval_many(std::span<const double> phi, std::span<const double> theta,
                                  std::span<double> out, unsigned threads) const {
  if (phi.size() != theta.size() || phi.size() != out.size()) {
    throw size_error("eval_many: phi/theta/out sizes must match");
  }
  parallel_for(phi.size(), threads, [&](std::size_t begin, std::size_t end) {
    Scratch sc;
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = eval_impl(phi[i], theta[i], sc);
    }
  });
}

std::vector<double> SphereInterpolant::eval_many(std::span<const double> phi,
                                                 std::span<const double> theta,
                                                 unsigned threads) const {
  std::vector<double> out(phi.size());
  eval_many(phi, theta, out, threads);
  return out;
}

PoleReport check_pole_constancy(const SphereInterpolant& s, double tol, int angles) {
  PoleReport rep;
  if (angles < 1) angles = 1;
  double nmin = 0.0, nmax = 0.0, nsum = 0.0;
  double smin = 0.0, smax = 0.0, ssum = 0.0;
  for (int i = 0; i < angles; ++i) {
    const double phi = kTwoPi * i / angles;
    const double vn = s.eval(phi, 0.0);
    const double vs = s.eval(phi, std::numbers::pi);
    if (i == 0) {
      nmin = nmax = vn;
      smin = smax = vs;
    } else {
      nmin = std::min(nmin, vn);
      nmax = std::max(nmax, vn);
      smin = std::min(smin, vs);
      smax = std::max(smax, vs);
    }
    nsum += vn;
    ssum += vs;
  }
  rep.north_spread = nmax - nmin;
  rep.south_spread = smax - smin;
  rep.north_mean = nsum / angles;
  rep.south_mean = ssum / angles;
  rep.within_tol = std::max(rep.north_spread, rep.south_spread) <= tol;
  return rep;
}

}  // namespace dfsbary

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

inline double rel_diff(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> uni(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = uni(rng);
  return v;
}

/// Dyadic rationals k/64, k in [-64, 64]: halving, adding, and subtracting
/// them is exact in double precision, which lets tests assert algebraic
/// identities bit-for-bit.
inline std::vector<double> random_dyadic_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> k(-64, 64);
  std::vector<double> v(n);
  for (auto& x : v) x = k(rng) / 64.0;
  return v;
}

struct MirroredRadialData {
  std::vector<double> nodes;  // over [-1, 1]
  std::vector<double> even;
  std::vector<double> odd;
};

/// Extends radial samples on rho_0 > ... > rho_n in [0, 1] to the full
/// [-1, 1] node set, evenly and oddly.  With the origin included, the odd
/// extension pins 0 there.
inline MirroredRadialData mirror_radial(const std::vector<double>& rho,
                                        const std::vector<double>& data, bool include_origin) {
  MirroredRadialData out;
  const std::size_t rows = rho.size();
  out.nodes.assign(rho.begin(), rho.end());
  for (std::size_t j = include_origin ? rows - 1 : rows; j-- > 0;) {
    out.nodes.push_back(-rho[j]);
  }
  out.even.resize(out.nodes.size());
  out.odd.resize(out.nodes.size());
  for (std::size_t j = 0; j < rows; ++j) {
    out.even[j] = data[j];
    out.odd[j] = (include_origin && j == rows - 1) ? 0.0 : data[j];
    const std::size_t mirror = out.nodes.size() - 1 - j;
    if (mirror >= rows) {
      out.even[mirror] = data[j];
      out.odd[mirror] = -out.odd[j];
    }
  }
  return out;
}

}  // namespace testutil

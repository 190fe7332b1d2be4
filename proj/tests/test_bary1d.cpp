#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dfsbary/bary1d.hpp"
#include "dfsbary/errors.hpp"
#include "dfsbary/grids.hpp"
#include "dfsbary/oracles.hpp"
#include "helpers.hpp"

using namespace dfsbary;
using oracles::OracleKind;
using oracles::oracle_eval;
using testutil::mirror_radial;
using testutil::random_vector;
using testutil::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("EQ and SEQ even weights match the closed forms") {
  const std::vector<double> eq{0.0, kPi / 2, kPi};
  const WeightTable teq = trig_even_weights(eq, SphereGridKind::EQ);
  REQUIRE(teq.weights.size() == 3);
  CHECK(teq.weights[0] == 0.5);
  CHECK(teq.weights[1] == -1.0);
  CHECK(teq.weights[2] == 0.5);
  CHECK(teq.contains_zero);
  CHECK(teq.contains_pi);

  const std::vector<double> seq{kPi / 4, 3 * kPi / 4};
  const WeightTable tseq = trig_even_weights(seq, SphereGridKind::SEQ);
  CHECK(tseq.weights[0] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(tseq.weights[1] == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK_FALSE(tseq.contains_zero);
  CHECK_FALSE(tseq.contains_pi);
}

TEST_CASE("even kernel reproduces constants, nodes, and cos(theta)") {
  std::mt19937_64 rng(11);
  for (SphereGridKind kind : {SphereGridKind::EQ, SphereGridKind::SEQ, SphereGridKind::GL}) {
    CAPTURE(to_string(kind));
    const SphereGrid g = make_sphere_grid(kind, 2, 5);
    const WeightTable t = trig_even_weights(g.theta, kind);

    std::vector<double> constant(5, 0.7325);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int i = 0; i < 25; ++i) {
      CHECK(trig_even_eval(t, constant, angle(rng)) ==
            doctest::Approx(0.7325).epsilon(1e-13));
    }

    const std::vector<double> data = random_vector(rng, 5);
    for (int j = 0; j < 5; ++j) {
      CHECK(trig_even_eval(t, data, g.theta[j]) == data[j]);  // bit-for-bit
    }

    std::vector<double> cosdata(5);
    for (int j = 0; j < 5; ++j) cosdata[j] = std::cos(g.theta[j]);
    CHECK(trig_even_eval(t, cosdata, 0.3) == doctest::Approx(std::cos(0.3)).epsilon(1e-13));
  }
}

TEST_CASE("even kernel matches the Lagrange cosine oracle on GL nodes") {
  std::mt19937_64 rng(7);
  const SphereGrid g = make_sphere_grid(SphereGridKind::GL, 2, 6);
  const WeightTable t = trig_even_weights(g.theta, SphereGridKind::GL);
  const std::vector<double> data = random_vector(rng, 6);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int i = 0; i < 50; ++i) {
    const double th = angle(rng);
    CHECK(rel_diff(trig_even_eval(t, data, th),
                   oracle_eval(OracleKind::CosineLagrange, g.theta, data, th)) < 1e-12);
  }
}

TEST_CASE("odd kernel basics") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

  for (SphereGridKind kind : {SphereGridKind::EQ, SphereGridKind::SEQ, SphereGridKind::GL}) {
    CAPTURE(to_string(kind));
    const SphereGrid g = make_sphere_grid(kind, 2, 6);
    const WeightTable t = trig_odd_weights(g.theta, kind);

    const std::vector<double> zeros(6, 0.0);
    for (int i = 0; i < 20; ++i) CHECK(trig_odd_eval(t, zeros, angle(rng)) == 0.0);

    std::vector<double> sindata(6);
    for (int j = 0; j < 6; ++j) sindata[j] = std::sin(g.theta[j]);
    CHECK(trig_odd_eval(t, sindata, 1.1) == doctest::Approx(std::sin(1.1)).epsilon(1e-12));
  }

  // odd 2pi-periodic data vanishes at the poles; the EQ kernel gives ~0 there
  const SphereGrid eq = make_sphere_grid(SphereGridKind::EQ, 2, 6);
  const WeightTable t = trig_odd_weights(eq.theta, SphereGridKind::EQ);
  std::vector<double> data = random_vector(rng, 6);
  data.front() = 0.0;
  data.back() = 0.0;
  CHECK(std::abs(trig_odd_eval(t, data, kPi)) < 1e-13);
  CHECK(std::abs(trig_odd_eval(t, data, 0.0)) < 1e-13);
}

TEST_CASE("odd kernel matches the Lagrange sine oracle") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

  const SphereGrid seq = make_sphere_grid(SphereGridKind::SEQ, 2, 7);
  const WeightTable tseq = trig_odd_weights(seq.theta, SphereGridKind::SEQ);
  const std::vector<double> data = random_vector(rng, 7);
  for (int i = 0; i < 100; ++i) {
    const double th = angle(rng);
    CHECK(rel_diff(trig_odd_eval(tseq, data, th),
                   oracle_eval(OracleKind::SineLagrange, seq.theta, data, th)) < 1e-12);
  }

  // EQ: the sine space excludes the poles, so the oracle runs on the
  // interior nodes
  const SphereGrid eq = make_sphere_grid(SphereGridKind::EQ, 2, 7);
  const WeightTable teq = trig_odd_weights(eq.theta, SphereGridKind::EQ);
  const std::vector<double> full = random_vector(rng, 7);
  const std::vector<double> inner_nodes(eq.theta.begin() + 1, eq.theta.end() - 1);
  const std::vector<double> inner(full.begin() + 1, full.end() - 1);
  for (int i = 0; i < 100; ++i) {
    const double th = angle(rng);
    CHECK(rel_diff(trig_odd_eval(teq, full, th),
                   oracle_eval(OracleKind::SineLagrange, inner_nodes, inner, th)) < 1e-12);
  }
}

TEST_CASE("pi-periodic and pi-antiperiodic evaluation") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

  for (int m : {4, 5}) {
    CAPTURE(m);
    std::vector<double> phi_m(m), vals(m), phi_full(2 * m), per(2 * m), anti(2 * m);
    for (int k = 0; k < m; ++k) {
      phi_m[k] = kPi * k / m;
      vals[k] = 0.1 + 0.3 * k;
    }
    for (int k = 0; k < 2 * m; ++k) {
      phi_full[k] = kPi * k / m;
      per[k] = vals[k % m];
      anti[k] = k < m ? vals[k] : -vals[k - m];
    }

    // exact node behavior
    CHECK(pi_periodic_eval(phi_m, vals, phi_m[2 % m]) == vals[2 % m]);
    CHECK(pi_periodic_eval(phi_m, vals, phi_m[2 % m] + kPi) == vals[2 % m]);
    CHECK(pi_antiperiodic_eval(phi_m, vals, phi_m[1]) == vals[1]);
    CHECK(pi_antiperiodic_eval(phi_m, vals, phi_m[1] + kPi) == -vals[1]);

    // constants / zeros
    const std::vector<double> constant(m, -0.42);
    const std::vector<double> zero(m, 0.0);
    for (int i = 0; i < 20; ++i) {
      const double ph = angle(rng);
      CHECK(pi_periodic_eval(phi_m, constant, ph) == doctest::Approx(-0.42).epsilon(1e-13));
      CHECK(pi_antiperiodic_eval(phi_m, zero, ph) == 0.0);
    }

    // full-formula oracle over the extended data
    std::vector<double> rvals = random_vector(rng, m);
    std::vector<double> rper(2 * m), ranti(2 * m);
    for (int k = 0; k < 2 * m; ++k) {
      rper[k] = rvals[k % m];
      ranti[k] = k < m ? rvals[k] : -rvals[k - m];
    }
    for (int i = 0; i < 100; ++i) {
      const double ph = angle(rng);
      CHECK(rel_diff(pi_periodic_eval(phi_m, rvals, ph),
                     oracle_eval(OracleKind::FullTrigBary, phi_full, rper, ph)) < 1e-12);
      CHECK(rel_diff(pi_antiperiodic_eval(phi_m, rvals, ph),
                     oracle_eval(OracleKind::FullTrigBary, phi_full, ranti, ph)) < 1e-12);
    }
  }
}

TEST_CASE("poly even kernel") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> radius(0.0, 1.0);

  // rho^2 lies in the even space
  const DiskGrid ch2 = make_disk_grid(DiskGridKind::CH2, 2, 4, true);
  const WeightTable t2 = poly_even_weights(ch2.rho, DiskGridKind::CH2, true);
  std::vector<double> sq(ch2.rho.size());
  for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = ch2.rho[j] * ch2.rho[j];
  CHECK(poly_even_eval(t2, sq, 0.5) == doctest::Approx(0.25).epsilon(1e-13));

  // constants
  const std::vector<double> constant(ch2.rho.size(), 3.25);
  CHECK(poly_even_eval(t2, constant, 0.37) == doctest::Approx(3.25).epsilon(1e-13));

  // full mirrored-formula oracle for every kind and origin choice
  for (DiskGridKind kind : {DiskGridKind::CH1, DiskGridKind::CH2, DiskGridKind::GLRadial}) {
    for (bool origin : {true, false}) {
      CAPTURE(to_string(kind));
      CAPTURE(origin);
      const DiskGrid g = make_disk_grid(kind, 2, 5, origin);
      const std::vector<double> data = random_vector(rng, g.rho.size());
      const auto mir = mirror_radial(g.rho, data, origin);
      const WeightTable t = poly_even_weights(g.rho, kind, origin);
      for (int i = 0; i < 100; ++i) {
        const double r = radius(rng);
        CHECK(rel_diff(poly_even_eval(t, data, r),
                       oracle_eval(OracleKind::FullPolyBary, mir.nodes, mir.even, r)) < 1e-12);
      }
      // node reproduction, bit-for-bit
      for (std::size_t j = 0; j < g.rho.size(); ++j) {
        CHECK(poly_even_eval(t, data, g.rho[j]) == data[j]);
      }
    }
  }
}

TEST_CASE("poly odd kernel") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> radius(0.0, 1.0);

  // exact zero at the origin
  const DiskGrid ch1 = make_disk_grid(DiskGridKind::CH1, 2, 4, true);
  const WeightTable t1 = poly_odd_weights(ch1.rho, DiskGridKind::CH1, true);
  const std::vector<double> data = random_vector(rng, ch1.rho.size());
  CHECK(poly_odd_eval(t1, data, 0.0) == 0.0);

  // rho lies in the odd space
  std::vector<double> lin(ch1.rho.begin(), ch1.rho.end());
  CHECK(poly_odd_eval(t1, lin, 0.62) == doctest::Approx(0.62).epsilon(1e-13));

  // rho^3 on an origin-excluded GL radial grid
  const DiskGrid glr = make_disk_grid(DiskGridKind::GLRadial, 2, 5, false);
  const WeightTable t3 = poly_odd_weights(glr.rho, DiskGridKind::GLRadial, false);
  std::vector<double> cube(glr.rho.size());
  for (std::size_t j = 0; j < cube.size(); ++j) cube[j] = std::pow(glr.rho[j], 3);
  CHECK(poly_odd_eval(t3, cube, 0.4) == doctest::Approx(0.064).epsilon(1e-12));

  for (DiskGridKind kind : {DiskGridKind::CH1, DiskGridKind::CH2, DiskGridKind::GLRadial}) {
    for (bool origin : {true, false}) {
      CAPTURE(to_string(kind));
      CAPTURE(origin);
      const DiskGrid g = make_disk_grid(kind, 2, 5, origin);
      const std::vector<double> d = random_vector(rng, g.rho.size());
      const auto mir = mirror_radial(g.rho, d, origin);
      const WeightTable t = poly_odd_weights(g.rho, kind, origin);
      for (int i = 0; i < 100; ++i) {
        const double r = radius(rng);
        CHECK(rel_diff(poly_odd_eval(t, d, r),
                       oracle_eval(OracleKind::FullPolyBary, mir.nodes, mir.odd, r)) < 1e-12);
      }
      for (std::size_t j = 0; j + (origin ? 1 : 0) < g.rho.size(); ++j) {
        CHECK(poly_odd_eval(t, d, g.rho[j]) == d[j]);
      }
    }
  }
}

TEST_CASE("weight-scale invariance") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::uniform_real_distribution<double> radius(0.0, 1.0);

  const SphereGrid g = make_sphere_grid(SphereGridKind::GL, 2, 8);
  const std::vector<double> data = random_vector(rng, 8);

  WeightTable even = trig_even_weights(g.theta, SphereGridKind::GL);
  WeightTable odd = trig_odd_weights(g.theta, SphereGridKind::GL);
  WeightTable even_scaled = even;
  WeightTable odd_scaled = odd;
  for (double& w : even_scaled.weights) w *= 7.3;
  for (double& w : odd_scaled.weights) w *= 7.3;
  for (double& w : odd_scaled.denom_weights) w *= 7.3;

  for (int i = 0; i < 50; ++i) {
    const double th = angle(rng);
    CHECK(rel_diff(trig_even_eval(even_scaled, data, th), trig_even_eval(even, data, th)) <
          1e-14);
    CHECK(rel_diff(trig_odd_eval(odd_scaled, data, th), trig_odd_eval(odd, data, th)) < 1e-14);
  }

  const DiskGrid dg = make_disk_grid(DiskGridKind::GLRadial, 2, 6, false);
  const std::vector<double> rdata = random_vector(rng, dg.rho.size());
  WeightTable pe = poly_even_weights(dg.rho, DiskGridKind::GLRadial, false);
  WeightTable po = poly_odd_weights(dg.rho, DiskGridKind::GLRadial, false);
  WeightTable pe_s = pe;
  WeightTable po_s = po;
  for (double& w : pe_s.weights) w *= 7.3;
  for (double& w : po_s.weights) w *= 7.3;
  for (double& w : po_s.denom_weights) w *= 7.3;
  for (int i = 0; i < 50; ++i) {
    const double r = radius(rng);
    CHECK(rel_diff(poly_even_eval(pe_s, rdata, r), poly_even_eval(pe, rdata, r)) < 1e-14);
    CHECK(rel_diff(poly_odd_eval(po_s, rdata, r), poly_odd_eval(po, rdata, r)) < 1e-14);
  }
}

TEST_CASE("parity of the 1D kernels is exact") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 2, 6);
  const std::vector<double> data = random_vector(rng, 6);
  const WeightTable even = trig_even_weights(g.theta, SphereGridKind::SEQ);
  const WeightTable odd = trig_odd_weights(g.theta, SphereGridKind::SEQ);
  for (int i = 0; i < 50; ++i) {
    const double th = angle(rng);
    CHECK(trig_even_eval(even, data, -th) == trig_even_eval(even, data, th));
    CHECK(trig_odd_eval(odd, data, -th) == -trig_odd_eval(odd, data, th));
  }

  const DiskGrid dg = make_disk_grid(DiskGridKind::CH1, 2, 5, false);
  const std::vector<double> rdata = random_vector(rng, dg.rho.size());
  const WeightTable pe = poly_even_weights(dg.rho, DiskGridKind::CH1, false);
  const WeightTable po = poly_odd_weights(dg.rho, DiskGridKind::CH1, false);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double r = radius(rng);
    CHECK(poly_even_eval(pe, rdata, -r) == poly_even_eval(pe, rdata, r));
    CHECK(poly_odd_eval(po, rdata, -r) == -poly_odd_eval(po, rdata, r));
  }
}

TEST_CASE("evaluation is continuous across the node-hit guard") {
  // the exact-hit shortcut returns the closed-form limit, so values just
  // inside and just outside the guard band must agree to high accuracy
  std::mt19937_64 rng(41);
  const SphereGrid g = make_sphere_grid(SphereGridKind::GL, 2, 9);
  const std::vector<double> data = random_vector(rng, 9);
  const WeightTable even = trig_even_weights(g.theta, SphereGridKind::GL);
  const WeightTable odd = trig_odd_weights(g.theta, SphereGridKind::GL);
  // tolerance scales with eps: the interpolant itself moves by O(|v'| eps)
  auto tol = [](double eps) { return 1e-10 + 100.0 * eps; };
  for (int j : {0, 4, 8}) {
    const double theta = g.theta[j];
    for (double eps : {1e-14, 5e-14, 5e-13, 1e-11, 1e-9}) {
      CAPTURE(j);
      CAPTURE(eps);
      CHECK(std::abs(trig_even_eval(even, data, theta + eps) - data[j]) < tol(eps));
      CHECK(std::abs(trig_odd_eval(odd, data, theta + eps) - data[j]) < tol(eps));
    }
  }

  const DiskGrid dg = make_disk_grid(DiskGridKind::GLRadial, 2, 7, true);
  const std::vector<double> rdata = random_vector(rng, dg.rho.size());
  const WeightTable pe = poly_even_weights(dg.rho, DiskGridKind::GLRadial, true);
  for (int j : {0, 3, 6}) {
    for (double eps : {1e-14, 5e-13, 1e-11, 1e-9}) {
      CAPTURE(j);
      CAPTURE(eps);
      CHECK(std::abs(poly_even_eval(pe, rdata, dg.rho[j] + eps) - rdata[j]) < tol(eps));
    }
  }
}

TEST_CASE("degenerate and mismatched inputs are rejected") {
  const std::vector<double> dup{0.3, 0.3, 0.9};
  CHECK_THROWS_AS(trig_even_weights(dup, SphereGridKind::GL), degeneracy_error);

  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 2, 5);
  const WeightTable t = trig_even_weights(g.theta, SphereGridKind::SEQ);
  const std::vector<double> wrong(4, 1.0);
  CHECK_THROWS_AS(trig_even_eval(t, wrong, 0.5), size_error);

  // nodes that do not match the requested closed-form pattern
  CHECK_THROWS_AS(trig_even_weights(g.theta, SphereGridKind::EQ), size_error);

  const std::vector<double> bad_rho{0.9, 0.5, 0.1};  // origin missing
  CHECK_THROWS_AS(poly_even_weights(bad_rho, DiskGridKind::GLRadial, true), size_error);
}

TEST_CASE("master property: every fast kernel agrees with its oracle") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_int_distribution<int> nsize(3, 12);
    std::uniform_int_distribution<int> msize(1, 12);

    // latitude kernels
    for (SphereGridKind kind : {SphereGridKind::EQ, SphereGridKind::SEQ, SphereGridKind::GL}) {
      const int n = std::max(nsize(rng), kind == SphereGridKind::EQ ? 4 : 3);
      const SphereGrid g = make_sphere_grid(kind, 2, n);
      const std::vector<double> data = random_vector(rng, n);
      const WeightTable even = trig_even_weights(g.theta, kind);
      const WeightTable odd = trig_odd_weights(g.theta, kind);
      std::vector<double> inner_nodes, inner;
      if (kind == SphereGridKind::EQ) {
        inner_nodes.assign(g.theta.begin() + 1, g.theta.end() - 1);
        inner.assign(data.begin() + 1, data.end() - 1);
      }
      for (int i = 0; i < 100; ++i) {
        const double th = angle(rng);
        CHECK(rel_diff(trig_even_eval(even, data, th),
                       oracle_eval(OracleKind::CosineLagrange, g.theta, data, th)) < 1e-12);
        const double ref =
            kind == SphereGridKind::EQ
                ? oracle_eval(OracleKind::SineLagrange, inner_nodes, inner, th)
                : oracle_eval(OracleKind::SineLagrange, g.theta, data, th);
        CHECK(rel_diff(trig_odd_eval(odd, data, th), ref) < 1e-12);
      }
    }

    // longitude kernels, both parities of m
    for (int mbase = 0; mbase < 2; ++mbase) {
      const int m = 2 * msize(rng) + mbase;
      std::vector<double> phi_m(m), phi_full(2 * m);
      for (int k = 0; k < m; ++k) phi_m[k] = kPi * k / m;
      for (int k = 0; k < 2 * m; ++k) phi_full[k] = kPi * k / m;
      const std::vector<double> vals = random_vector(rng, m);
      std::vector<double> per(2 * m), anti(2 * m);
      for (int k = 0; k < 2 * m; ++k) {
        per[k] = vals[k % m];
        anti[k] = k < m ? vals[k] : -vals[k - m];
      }
      for (int i = 0; i < 100; ++i) {
        const double ph = angle(rng);
        CHECK(rel_diff(pi_periodic_eval(phi_m, vals, ph),
                       oracle_eval(OracleKind::FullTrigBary, phi_full, per, ph)) < 1e-12);
        CHECK(rel_diff(pi_antiperiodic_eval(phi_m, vals, ph),
                       oracle_eval(OracleKind::FullTrigBary, phi_full, anti, ph)) < 1e-12);
      }
    }

    // radial kernels
    for (DiskGridKind kind : {DiskGridKind::CH1, DiskGridKind::CH2, DiskGridKind::GLRadial}) {
      for (bool origin : {true, false}) {
        const int n = nsize(rng);
        const DiskGrid g = make_disk_grid(kind, 2, n, origin);
        const std::vector<double> data = random_vector(rng, g.rho.size());
        const auto mir = mirror_radial(g.rho, data, origin);
        const WeightTable even = poly_even_weights(g.rho, kind, origin);
        const WeightTable odd = poly_odd_weights(g.rho, kind, origin);
        for (int i = 0; i < 100; ++i) {
          const double r = radius(rng);
          CHECK(rel_diff(poly_even_eval(even, data, r),
                         oracle_eval(OracleKind::FullPolyBary, mir.nodes, mir.even, r)) < 1e-12);
          CHECK(rel_diff(poly_odd_eval(odd, data, r),
                         oracle_eval(OracleKind::FullPolyBary, mir.nodes, mir.odd, r)) < 1e-12);
        }
      }
    }
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dfsbary/errors.hpp"
#include "dfsbary/grids.hpp"
#include "dfsbary/oracles.hpp"
#include "helpers.hpp"

using namespace dfsbary;
using oracles::OracleKind;
using oracles::oracle_eval;
using testutil::random_vector;
using testutil::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("oracles reproduce constants and nodes") {
  std::mt19937_64 rng(3);
  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 2, 6);

  const std::vector<double> constant(6, 1.5);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int i = 0; i < 20; ++i) {
    CHECK(oracle_eval(OracleKind::CosineLagrange, g.theta, constant, angle(rng)) ==
          doctest::Approx(1.5).epsilon(1e-12));
  }

  std::vector<double> nodes{-0.9, -0.4, 0.1, 0.7};
  const std::vector<double> data = random_vector(rng, 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(oracle_eval(OracleKind::FullPolyBary, nodes, data, nodes[j]) == data[j]);
  }
}

TEST_CASE("cross-oracle agreement: cosine Lagrange equals poly barycentric in cos(theta)") {
  std::mt19937_64 rng(5);
  const SphereGrid g = make_sphere_grid(SphereGridKind::GL, 2, 8);
  const std::vector<double> data = random_vector(rng, 8);
  std::vector<double> x(8);
  for (int j = 0; j < 8; ++j) x[j] = std::cos(g.theta[j]);

  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int i = 0; i < 50; ++i) {
    const double th = angle(rng);
    CHECK(rel_diff(oracle_eval(OracleKind::CosineLagrange, g.theta, data, th),
                   oracle_eval(OracleKind::FullPolyBary, x, data, std::cos(th))) < 1e-12);
  }
}

TEST_CASE("oracle guards") {
  const std::vector<double> odd_nodes{0.0, 1.0, 2.0};
  const std::vector<double> data{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(oracle_eval(OracleKind::FullTrigBary, odd_nodes, data, 0.5), size_error);

  std::vector<double> big(65), bigd(65);
  for (int i = 0; i < 65; ++i) big[i] = i;
  CHECK_THROWS_AS(oracle_eval(OracleKind::FullPolyBary, big, bigd, 0.5), size_error);

  const std::vector<double> mismatch{0.1, 0.2};
  CHECK_THROWS_AS(oracle_eval(OracleKind::CosineLagrange, odd_nodes, mismatch, 0.5), size_error);
}

TEST_CASE("bivariate reference evaluators reject oversized grids") {
  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 40, 4);
  const std::vector<double> samples(static_cast<std::size_t>(4) * 80, 0.0);
  CHECK_THROWS_AS(oracles::eval_sphere_reference(g, samples, 0.1, 0.2), size_error);
}

TEST_CASE("bivariate reference evaluators interpolate") {
  std::mt19937_64 rng(9);
  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 3, 4);
  const std::vector<double> samples = random_vector(rng, static_cast<std::size_t>(4) * 6);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 6; ++k) {
      CHECK(rel_diff(oracles::eval_sphere_reference(g, samples, g.phi[k], g.theta[j]),
                     samples[static_cast<std::size_t>(j) * 6 + k]) < 1e-12);
    }
  }

  const DiskGrid dg = make_disk_grid(DiskGridKind::CH2, 3, 3, false);
  const std::vector<double> dsamples = random_vector(rng, static_cast<std::size_t>(4) * 6);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 6; ++k) {
      CHECK(rel_diff(oracles::eval_disk_reference(dg, dsamples, dg.phi[k], dg.rho[j]),
                     dsamples[static_cast<std::size_t>(j) * 6 + k]) < 1e-12);
    }
  }
}

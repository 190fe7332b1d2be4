#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dfsbary/csv.hpp"
#include "dfsbary/grids.hpp"
#include "dfsbary/targets.hpp"

using namespace dfsbary;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dfsbary_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const TempDir& tmp, const std::string& args) {
  const char* env = std::getenv("DFSBARY_CLI");
  const std::string binary = env ? env : DFSBARY_CLI_PATH;
  const std::string log = tmp.file("cli_log.txt");
  const std::string cmd = "\"" + binary + "\" " + args + " >\"" + log + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: grid export") {
  TempDir tmp;
  const auto r =
      run_cli(tmp, "grid --grid eq --m 2 --n 3 --out " + tmp.file("g"));
  CHECK(r.exit_code == 0);
  const std::string phi = read_file(tmp.file("g.phi.csv"));
  CHECK(phi.find("index,phi") == 0);
  const std::string coord = read_file(tmp.file("g.coord.csv"));
  CHECK(coord.find("index,coord") == 0);
  CHECK(coord.find("1.5707963267948966") != std::string::npos);
}

TEST_CASE("cli: interp round-trips grid nodes and cross-checks the oracle") {
  TempDir tmp;
  const int m = 3, n = 4;
  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, m, n);

  std::vector<double> samples(static_cast<std::size_t>(n) * 2 * m);
  std::mt19937_64 rng(163);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (auto& v : samples) v = uni(rng);
  write_matrix_csv(tmp.file("samples.csv"), samples, n, 2 * m);

  {
    std::ofstream pts(tmp.file("points.csv"));
    pts << "phi,theta\n";
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < 2 * m; ++k) {
        pts << format_double(g.phi[k]) << ',' << format_double(g.theta[j]) << '\n';
      }
    }
  }

  const std::string base = "interp --grid seq --m 3 --n 4 --samples " + tmp.file("samples.csv") +
                           " --points " + tmp.file("points.csv");
  const auto r = run_cli(tmp, base + " --out " + tmp.file("values.csv"));
  REQUIRE(r.exit_code == 0);
  const auto values = read_values_csv(tmp.file("values.csv"));
  REQUIRE(values.size() == samples.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == samples[i]);

  const auto r2 = run_cli(tmp, base + " --oracle --out " + tmp.file("oracle.csv"));
  REQUIRE(r2.exit_code == 0);
  const auto oracle = read_values_csv(tmp.file("oracle.csv"));
  REQUIRE(oracle.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(std::abs(values[i] - oracle[i]) < 1e-12 * (1.0 + std::abs(oracle[i])));
  }
}

TEST_CASE("cli: interp at scattered points agrees with --oracle (disk)") {
  TempDir tmp;
  const int m = 3, n = 3;
  const DiskGrid g = make_disk_grid(DiskGridKind::CH1, m, n, true);
  std::vector<double> samples(static_cast<std::size_t>(n + 1) * 2 * m);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k < 2 * m; ++k) {
      samples[static_cast<std::size_t>(j) * 2 * m + k] =
          std::cos(2.0 * g.rho[j] * std::cos(g.phi[k]));
    }
  }
  write_matrix_csv(tmp.file("samples.csv"), samples, n + 1, 2 * m);
  {
    std::ofstream pts(tmp.file("points.csv"));
    std::mt19937_64 rng(167);
    std::uniform_real_distribution<double> angle(0.0, 6.28), radius(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
      pts << format_double(angle(rng)) << ',' << format_double(radius(rng)) << '\n';
    }
  }
  const std::string base = "interp --grid ch1 --m 3 --n 3 --include-origin --samples " +
                           tmp.file("samples.csv") + " --points " + tmp.file("points.csv");
  REQUIRE(run_cli(tmp, base + " --out " + tmp.file("v.csv")).exit_code == 0);
  REQUIRE(run_cli(tmp, base + " --oracle --out " + tmp.file("o.csv")).exit_code == 0);
  const auto v = read_values_csv(tmp.file("v.csv"));
  const auto o = read_values_csv(tmp.file("o.csv"));
  REQUIRE(v.size() == o.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(std::abs(v[i] - o[i]) < 1e-12 * (1.0 + std::abs(o[i])));
  }
}

TEST_CASE("cli: interp with an empty points file writes only the header") {
  TempDir tmp;
  write_matrix_csv(tmp.file("samples.csv"), std::vector<double>(4 * 8, 1.0), 4, 8);
  std::ofstream(tmp.file("points.csv")) << "phi,theta\n";
  const auto r = run_cli(tmp, "interp --grid seq --m 4 --n 4 --samples " +
                                  tmp.file("samples.csv") + " --points " +
                                  tmp.file("points.csv") + " --out " + tmp.file("v.csv"));
  CHECK(r.exit_code == 0);
  CHECK(read_file(tmp.file("v.csv")) == "value\n");
}

TEST_CASE("cli: interp reports shape mismatches as data errors") {
  TempDir tmp;
  write_matrix_csv(tmp.file("samples.csv"), std::vector<double>(3 * 8, 1.0), 3, 8);
  std::ofstream(tmp.file("points.csv")) << "0.5,0.5\n";
  const auto r = run_cli(tmp, "interp --grid seq --m 4 --n 4 --samples " +
                                  tmp.file("samples.csv") + " --points " +
                                  tmp.file("points.csv") + " --out " + tmp.file("v.csv"));
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("expected 4x8") != std::string::npos);
  CHECK(r.output.find("found 3x8") != std::string::npos);
}

TEST_CASE("cli: converge is deterministic and writes the documented CSV") {
  TempDir tmp;
  const std::string args = "converge --grid eq --m-list 6,8 --eval-count 128 --seed 7 --out ";
  REQUIRE(run_cli(tmp, args + tmp.file("c1.csv")).exit_code == 0);
  REQUIRE(run_cli(tmp, args + tmp.file("c2.csv")).exit_code == 0);
  const std::string c1 = read_file(tmp.file("c1.csv"));
  CHECK(c1 == read_file(tmp.file("c2.csv")));
  CHECK(c1.find("# seed=7,eval_count=128,geometry=sphere") == 0);
  CHECK(c1.find("grid,m,N,rel_max_err") != std::string::npos);
  CHECK(c1.find("eq,6,") != std::string::npos);
  CHECK(c1.find("eq,8,") != std::string::npos);
}

TEST_CASE("cli: converge constant-field debug is exact") {
  TempDir tmp;
  const auto r = run_cli(tmp,
                         "converge --grid ch2 --include-origin --m-list 8 --constant "
                         "--eval-count 100 --out " +
                             tmp.file("c.csv"));
  REQUIRE(r.exit_code == 0);
  const Matrix none{};  // silence unused warnings in some compilers
  (void)none;
  const std::string csv = read_file(tmp.file("c.csv"));
  const auto pos = csv.find("ch2,8,144,");
  REQUIRE(pos != std::string::npos);
  const double err = std::stod(csv.substr(pos + 10));
  CHECK(err < 1e-13);
}

TEST_CASE("cli: sla runs a zero-velocity config exactly") {
  TempDir tmp;
  std::ofstream(tmp.file("run.json")) << R"({
    "grid": "eq", "m": 8, "initial_condition": "cosine_bells",
    "num_steps": 2, "velocity_scale": 0.0,
    "output": ")" << tmp.file("report.json")
                                      << R"("
  })";
  const auto r = run_cli(tmp, "sla --config " + tmp.file("run.json"));
  REQUIRE(r.exit_code == 0);
  const std::string report = read_file(tmp.file("report.json"));
  CHECK(report.find("\"rel_l2_error\": 0.0") != std::string::npos);
  CHECK(report.find("\"diverged\": false") != std::string::npos);
}

TEST_CASE("cli: sla writes snapshot field dumps at the requested times") {
  TempDir tmp;
  const std::string prefix = tmp.file("field");
  std::ofstream(tmp.file("run.json")) << R"({
    "grid": "seq", "m": 6, "initial_condition": "gaussian_bells",
    "num_steps": 4, "snapshot_times": [0.0, 2.5, 5.0],
    "snapshot_prefix": ")" << prefix << R"(",
    "output": ")" << tmp.file("report.json") << R"("
  })";
  const auto r = run_cli(tmp, "sla --config " + tmp.file("run.json"));
  REQUIRE(r.exit_code == 0);
  for (const std::string t : {"0", "2.5", "5"}) {
    const Matrix snap = read_matrix_csv(prefix + "_t" + t + ".csv");
    CHECK(snap.rows == 7);   // n = m + 1
    CHECK(snap.cols == 12);  // 2m
  }
  // the t=0 dump is the initial condition itself; node (theta_3, phi_1) of
  // the SEQ m=6 grid is the first bell center (pi/6, 0)
  const Matrix initial = read_matrix_csv(prefix + "_t0.csv");
  CHECK(initial.at(3, 1) == doctest::Approx(0.95 * (1.0 + std::exp(-5.0))).epsilon(1e-12));
}

TEST_CASE("cli: sla with a missing config exits 3 and names the path") {
  TempDir tmp;
  const auto r = run_cli(tmp, "sla --config " + tmp.file("absent.json"));
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("absent.json") != std::string::npos);
}

TEST_CASE("cli: sla divergence exits 4 and records the step") {
  TempDir tmp;
  std::ofstream(tmp.file("run.json")) << R"({
    "grid": "eq", "m": 6, "initial_condition": "cosine_bells",
    "num_steps": 3, "velocity_scale": 1e308,
    "output": ")" << tmp.file("report.json") << R"("
  })";
  const auto r = run_cli(tmp, "sla --config " + tmp.file("run.json"));
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("step") != std::string::npos);
  const std::string report = read_file(tmp.file("report.json"));
  CHECK(report.find("\"diverged\": true") != std::string::npos);
  CHECK(report.find("divergence_step") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  TempDir tmp;
  CHECK(run_cli(tmp, "frobnicate").exit_code == 2);
  CHECK(run_cli(tmp, "grid --grid eq").exit_code == 2);       // missing required options
  CHECK(run_cli(tmp, "interp --bogus-flag").exit_code == 2);  // unknown flag
  CHECK(run_cli(tmp, "--help").exit_code == 0);
}

TEST_CASE("cli: selftest passes") {
  TempDir tmp;
  const auto r = run_cli(tmp, "selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

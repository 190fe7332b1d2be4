#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfsbary/converge.hpp"
#include "dfsbary/csv.hpp"
#include "dfsbary/disk_interp.hpp"
#include "dfsbary/errors.hpp"
#include "dfsbary/gauss_legendre.hpp"
#include "dfsbary/grids.hpp"
#include "dfsbary/oracles.hpp"
#include "dfsbary/sla_io.hpp"
#include "dfsbary/sphere_interp.hpp"
#include "dfsbary/transport.hpp"

namespace {

using namespace dfsbary;

struct GridChoice {
  bool is_sphere = true;
  SphereGridKind sphere = SphereGridKind::EQ;
  DiskGridKind disk = DiskGridKind::CH2;
};

GridChoice parse_grid_name(const std::string& name) {
  GridChoice c;
  if (parse_sphere_grid_kind(name, c.sphere)) {
    c.is_sphere = true;
    return c;
  }
  if (parse_disk_grid_kind(name, c.disk)) {
    c.is_sphere = false;
    return c;
  }
  throw size_error("unknown grid kind \"" + name + "\" (expected eq|seq|gl|ch1|ch2|glr)");
}

int cmd_grid(const std::string& grid_name, int m, int n, bool include_origin,
             const std::string& out) {
  const GridChoice c = parse_grid_name(grid_name);
  if (c.is_sphere) {
    const SphereGrid g = make_sphere_grid(c.sphere, m, n);
    write_grid_direction_csv(out + ".phi.csv", "phi", g.phi);
    write_grid_direction_csv(out + ".coord.csv", "coord", g.theta);
  } else {
    const DiskGrid g = make_disk_grid(c.disk, m, n, include_origin);
    write_grid_direction_csv(out + ".phi.csv", "phi", g.phi);
    write_grid_direction_csv(out + ".coord.csv", "coord", g.rho);
  }
  std::cout << "wrote " << out << ".phi.csv and " << out << ".coord.csv\n";
  return 0;
}

int cmd_interp(const std::string& grid_name, int m, int n, bool include_origin,
               const std::string& samples_path, const std::string& points_path,
               const std::string& out, bool use_oracle, unsigned threads) {
  const GridChoice c = parse_grid_name(grid_name);
  const Matrix samples = read_matrix_csv(samples_path);
  const auto points = read_points_csv(points_path);

  std::vector<double> values(points.size());
  if (c.is_sphere) {
    const SphereGrid grid = make_sphere_grid(c.sphere, m, n);
    if (samples.rows != static_cast<std::size_t>(n) ||
        samples.cols != static_cast<std::size_t>(2 * m)) {
      throw size_error(samples_path + ": expected " + std::to_string(n) + "x" +
                       std::to_string(2 * m) + " samples, found " + std::to_string(samples.rows) +
                       "x" + std::to_string(samples.cols));
    }
    if (use_oracle) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        values[i] = oracles::eval_sphere_reference(grid, samples.data, points[i][0], points[i][1]);
      }
    } else {
      const SphereInterpolant interp(grid, samples.data);
      std::vector<double> p(points.size()), t(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) {
        p[i] = points[i][0];
        t[i] = points[i][1];
      }
      interp.eval_many(p, t, values, threads);
    }
  } else {
    const DiskGrid grid = make_disk_grid(c.disk, m, n, include_origin);
    if (samples.rows != static_cast<std::size_t>(n + 1) ||
        samples.cols != static_cast<std::size_t>(2 * m)) {
      throw size_error(samples_path + ": expected " + std::to_string(n + 1) + "x" +
                       std::to_string(2 * m) + " samples, found " + std::to_string(samples.rows) +
                       "x" + std::to_string(samples.cols));
    }
    if (use_oracle) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        values[i] = oracles::eval_disk_reference(grid, samples.data, points[i][0], points[i][1]);
      }
    } else {
      const DiskInterpolant interp(grid, samples.data);
      std::vector<double> p(points.size()), r(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) {
        p[i] = points[i][0];
        r[i] = points[i][1];
      }
      interp.eval_many(p, r, values, threads);
    }
  }
  write_values_csv(out, values);
  std::cout << "wrote " << values.size() << " values to " << out << "\n";
  return 0;
}

int cmd_converge(const std::string& grid_name, std::vector<int> m_list, int eval_count,
                 std::uint64_t seed, bool include_origin, bool constant_field,
                 const std::string& out, unsigned threads, double decay_ratio,
                 double decay_floor) {
  if (m_list.empty()) throw size_error("converge: --m-list must not be empty");
  for (std::size_t i = 1; i < m_list.size(); ++i) {
    if (m_list[i] <= m_list[i - 1]) throw size_error("converge: --m-list must be ascending");
  }
  const GridChoice c = parse_grid_name(grid_name);
  const std::vector<ConvergenceRow> rows =
      c.is_sphere
          ? sphere_convergence(c.sphere, m_list, eval_count, seed, constant_field, threads)
          : disk_convergence(c.disk, m_list, eval_count, seed, include_origin, constant_field,
                             threads);

  std::ofstream f(out);
  if (!f) throw size_error("cannot open file for writing: " + out);
  f << "# seed=" << seed << ",eval_count=" << eval_count << ",geometry="
    << (c.is_sphere ? "sphere" : "disk") << "\n";
  f << "grid,m,N,rel_max_err\n";
  std::vector<double> errs;
  for (const auto& r : rows) {
    f << r.grid << ',' << r.m << ',' << r.dof << ',' << format_double(r.rel_max_err) << "\n";
    errs.push_back(r.rel_max_err);
    std::cout << r.grid << " m=" << r.m << " N=" << r.dof
              << " rel_max_err=" << format_double(r.rel_max_err) << "\n";
  }
  const bool decays = geometric_decay(errs, decay_ratio, decay_floor);
  std::cout << "geometric decay (ratio>" << decay_ratio << " down to " << decay_floor
            << "): " << (decays ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sla(const std::string& config_path, const std::string& out_override, unsigned threads,
            bool threads_given) {
  SlaJob job = parse_sla_config(config_path);
  if (!out_override.empty()) job.output_path = out_override;
  if (job.output_path.empty()) {
    throw size_error("sla: no output path (set \"output\" in the config or pass --out)");
  }
  if (threads_given) job.config.threads = threads;

  // map requested snapshot times to step indices
  const double dt = job.config.t_final / job.config.num_steps;
  std::vector<std::pair<int, double>> snaps;
  for (double t : job.snapshot_times) {
    int step = static_cast<int>(std::llround(t / dt));
    if (step < 0) step = 0;
    if (step > job.config.num_steps) step = job.config.num_steps;
    snaps.emplace_back(step, t);
  }
  SnapshotFn snapshot;
  if (!snaps.empty()) {
    const int cols = 2 * job.config.m;
    snapshot = [&snaps, cols, &job](int step, const TracerField& field) {
      for (const auto& [s, t] : snaps) {
        if (s == step) {
          const std::string path = job.snapshot_prefix + "_t" + format_double(t) + ".csv";
          write_matrix_csv(path, field.values, field.values.size() / cols, cols);
        }
      }
    };
  }

  try {
    const TransportResult result = run_transport(job.config, snapshot);
    write_sla_report(job.output_path, job, result);
    std::cout << "rel_l2_error=" << format_double(result.rel_l2_error)
              << " rel_max_error=" << format_double(result.rel_max_error)
              << " tracer_min=" << format_double(result.tracer_min)
              << " tracer_max=" << format_double(result.tracer_max)
              << " wall_seconds=" << format_double(result.wall_seconds) << "\n";
    std::cout << "wrote " << job.output_path << "\n";
  } catch (const divergence_error& e) {
    write_sla_divergence_report(job.output_path, job, e.step());
    throw;
  }
  return 0;
}

// ---- selftest -------------------------------------------------------------

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail = {}) {
  if (ok) {
    std::cout << "ok   " << name << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
  }
}

double rel_diff(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

void selftest_gl() {
  const GLRule r2 = gl_nodes(2);
  report(std::abs(r2.nodes[1] - 0.5773502691896257) < 1e-15 &&
             std::abs(r2.quad_weights[0] - 1.0) < 1e-15,
         "gl_nodes degree 2 analytic");
  const GLRule r6 = gl_nodes(6);
  double worst = 0.0;
  for (int p = 0; p <= 11; ++p) {
    double acc = 0.0;
    for (int j = 0; j < 6; ++j) acc += r6.quad_weights[j] * std::pow(r6.nodes[j], p);
    const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
    worst = std::max(worst, std::abs(acc - exact));
  }
  report(worst < 1e-12, "gl_nodes degree 6 quadrature exactness");
}

void selftest_kernels() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  const int n = 7;
  for (SphereGridKind kind : {SphereGridKind::EQ, SphereGridKind::SEQ, SphereGridKind::GL}) {
    const SphereGrid g = make_sphere_grid(kind, 2, n);
    std::vector<double> data(n);
    for (auto& v : data) v = uni(rng);
    const WeightTable even = trig_even_weights(g.theta, kind);
    const WeightTable odd = trig_odd_weights(g.theta, kind);
    double worst_e = 0.0, worst_o = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double th = angle(rng);
      worst_e = std::max(worst_e, rel_diff(trig_even_eval(even, data, th),
                                           oracles::oracle_eval(oracles::OracleKind::CosineLagrange,
                                                                g.theta, data, th)));
      double ref;
      if (kind == SphereGridKind::EQ) {
        std::vector<double> inner_nodes(g.theta.begin() + 1, g.theta.end() - 1);
        std::vector<double> inner(data.begin() + 1, data.end() - 1);
        ref = oracles::oracle_eval(oracles::OracleKind::SineLagrange, inner_nodes, inner, th);
      } else {
        ref = oracles::oracle_eval(oracles::OracleKind::SineLagrange, g.theta, data, th);
      }
      worst_o = std::max(worst_o, rel_diff(trig_odd_eval(odd, data, th), ref));
    }
    report(worst_e < 1e-12, "trig even kernel vs oracle (" + to_string(kind) + ")");
    report(worst_o < 1e-12, "trig odd kernel vs oracle (" + to_string(kind) + ")");
  }

  for (int m : {4, 5}) {
    std::vector<double> phi_m(m), vals(m), phi_full(2 * m), per(2 * m), anti(2 * m);
    for (int k = 0; k < m; ++k) {
      phi_m[k] = M_PI * k / m;
      vals[k] = uni(rng);
    }
    for (int k = 0; k < 2 * m; ++k) {
      phi_full[k] = M_PI * k / m;
      per[k] = vals[k % m];
      anti[k] = k < m ? vals[k] : -vals[k - m];
    }
    double worst_p = 0.0, worst_a = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double ph = angle(rng);
      worst_p = std::max(
          worst_p, rel_diff(pi_periodic_eval(phi_m, vals, ph),
                            oracles::oracle_eval(oracles::OracleKind::FullTrigBary, phi_full,
                                                 per, ph)));
      worst_a = std::max(
          worst_a, rel_diff(pi_antiperiodic_eval(phi_m, vals, ph),
                            oracles::oracle_eval(oracles::OracleKind::FullTrigBary, phi_full,
                                                 anti, ph)));
    }
    report(worst_p < 1e-12, "pi-periodic kernel vs full formula (m=" + std::to_string(m) + ")");
    report(worst_a < 1e-12,
           "pi-antiperiodic kernel vs full formula (m=" + std::to_string(m) + ")");
  }

  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (DiskGridKind kind : {DiskGridKind::CH1, DiskGridKind::CH2, DiskGridKind::GLRadial}) {
    for (bool origin : {true, false}) {
      const DiskGrid g = make_disk_grid(kind, 2, 6, origin);
      const int rows = g.n + 1;
      std::vector<double> data(rows);
      for (auto& v : data) v = uni(rng);

      std::vector<double> ext(g.rho.begin(), g.rho.end());
      for (int j = origin ? rows - 2 : rows - 1; j >= 0; --j) ext.push_back(-g.rho[j]);
      std::vector<double> mirror_even(ext.size()), mirror_odd(ext.size());
      for (int j = 0; j < rows; ++j) {
        mirror_even[j] = data[j];
        mirror_odd[j] = (origin && j == rows - 1) ? 0.0 : data[j];
        const std::size_t mir = ext.size() - 1 - j;
        if (mir >= static_cast<std::size_t>(rows)) {
          mirror_even[mir] = data[j];
          mirror_odd[mir] = -mirror_odd[j];
        }
      }

      const WeightTable even = poly_even_weights(g.rho, kind, origin);
      const WeightTable odd = poly_odd_weights(g.rho, kind, origin);
      double worst_e = 0.0, worst_o = 0.0;
      for (int i = 0; i < 40; ++i) {
        const double r = radius(rng);
        worst_e = std::max(worst_e,
                           rel_diff(poly_even_eval(even, data, r),
                                    oracles::oracle_eval(oracles::OracleKind::FullPolyBary, ext,
                                                         mirror_even, r)));
        worst_o = std::max(worst_o,
                           rel_diff(poly_odd_eval(odd, data, r),
                                    oracles::oracle_eval(oracles::OracleKind::FullPolyBary, ext,
                                                         mirror_odd, r)));
      }
      report(worst_e < 1e-12, "poly even kernel vs full formula (" + to_string(kind) +
                                  (origin ? ", origin" : ", no origin") + ")");
      report(worst_o < 1e-12, "poly odd kernel vs full formula (" + to_string(kind) +
                                  (origin ? ", origin" : ", no origin") + ")");
    }
  }
}

void selftest_bivariate() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  const SphereGrid g = make_sphere_grid(SphereGridKind::SEQ, 5, 6);
  std::vector<double> samples(static_cast<std::size_t>(g.n) * 2 * g.m);
  for (auto& v : samples) v = uni(rng);
  const SphereInterpolant s(g, samples);
  bool nodes_ok = true;
  for (int j = 0; j < g.n && nodes_ok; ++j) {
    for (int k = 0; k < 2 * g.m; ++k) {
      if (s.eval(g.phi[k], g.theta[j]) != samples[static_cast<std::size_t>(j) * 2 * g.m + k]) {
        nodes_ok = false;
        break;
      }
    }
  }
  report(nodes_ok, "sphere interpolant node reproduction");
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double ph = angle(rng), th = angle(rng) - M_PI;
    worst = std::max(worst, rel_diff(s.eval(ph, -th), s.eval(ph + M_PI, th)));
  }
  report(worst < 1e-12, "sphere interpolant glide reflection");

  const DiskGrid dg = make_disk_grid(DiskGridKind::CH2, 4, 6, true);
  std::vector<double> dsamples(static_cast<std::size_t>(dg.n + 1) * 2 * dg.m);
  for (std::size_t i = 0; i < dsamples.size(); ++i) dsamples[i] = uni(rng);
  // continuous data is constant on the origin row
  for (int k = 0; k < 2 * dg.m; ++k) {
    dsamples[static_cast<std::size_t>(dg.n) * 2 * dg.m + k] = 0.25;
  }
  const DiskInterpolant d(dg, dsamples);
  double worst_d = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double ph = angle(rng);
    const double r = uni(rng);
    worst_d = std::max(worst_d, rel_diff(d.eval(ph, -r), d.eval(ph + M_PI, r)));
  }
  report(worst_d < 1e-12, "disk interpolant glide reflection");
  const OriginReport orep = check_origin_constancy(d, 1e-12);
  report(orep.within_tol, "disk origin constancy");
}

void selftest_transport() {
  TransportConfig cfg;
  cfg.kind = SphereGridKind::EQ;
  cfg.m = 8;
  cfg.ic = InitialCondition::CosineBells;
  cfg.num_steps = 1;
  cfg.velocity_scale = 0.0;
  const TransportResult r = run_transport(cfg);
  report(r.rel_l2_error == 0.0, "zero-velocity transport step is exact");
}

int cmd_selftest() {
  selftest_gl();
  selftest_kernels();
  selftest_bivariate();
  selftest_transport();
  if (g_failures == 0) {
    std::cout << "selftest: all checks passed\n";
    return 0;
  }
  std::cout << "selftest: " << g_failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barycentric interpolation on tensor-product sphere and disk grids"};
  app.require_subcommand(1);

  std::string grid_name, out_path, samples_path, points_path, config_path;
  int m = 0, n = 0;
  bool include_origin = false, use_oracle = false, constant_field = false;
  unsigned threads = 1;
  int eval_count = 2000;
  std::uint64_t seed = 1234;
  std::vector<int> m_list;
  double decay_ratio = 5.0, decay_floor = 1e-10;

  auto* grid = app.add_subcommand("grid", "Generate a grid and export it as CSV");
  grid->add_option("--grid", grid_name, "eq|seq|gl|ch1|ch2|glr")->required();
  grid->add_option("--m", m, "half the longitude count")->required();
  grid->add_option("--n", n, "latitude count (sphere) / radial parameter (disk)")->required();
  grid->add_flag("--include-origin", include_origin, "include rho = 0 (disk grids)");
  grid->add_option("--out", out_path, "output path prefix")->required();

  auto* interp = app.add_subcommand("interp", "Interpolate sampled data at arbitrary points");
  interp->add_option("--grid", grid_name, "eq|seq|gl|ch1|ch2|glr")->required();
  interp->add_option("--m", m)->required();
  interp->add_option("--n", n)->required();
  interp->add_flag("--include-origin", include_origin);
  interp->add_option("--samples", samples_path, "CSV, n x 2m (sphere) or (n+1) x 2m (disk)")
      ->required();
  interp->add_option("--points", points_path, "CSV of phi,theta or phi,rho rows")->required();
  interp->add_option("--out", out_path, "output values CSV")->required();
  interp->add_flag("--oracle", use_oracle, "evaluate with the slow reference formulas");
  interp->add_option("--threads", threads, "worker threads (0 = all)");

  auto* converge = app.add_subcommand("converge", "Run a convergence study on the target field");
  converge->add_option("--grid", grid_name, "eq|seq|gl|ch1|ch2|glr")->required();
  converge->add_option("--m-list", m_list, "ascending grid sizes (n = m)")
      ->required()
      ->delimiter(',');
  converge->add_option("--eval-count", eval_count, "number of evaluation points");
  converge->add_option("--seed", seed, "seed of the evaluation point sequence");
  converge->add_flag("--include-origin", include_origin);
  converge->add_flag("--constant", constant_field, "interpolate 1.0 instead (debug)");
  converge->add_option("--out", out_path, "output CSV")->required();
  converge->add_option("--threads", threads, "worker threads (0 = all)");
  converge->add_option("--decay-ratio", decay_ratio, "required error ratio between rows");
  converge->add_option("--decay-floor", decay_floor, "error floor for the decay verdict");

  auto* sla = app.add_subcommand("sla", "Run a semi-Lagrangian transport experiment");
  sla->add_option("--config", config_path, "JSON run configuration")->required();
  sla->add_option("--out", out_path, "report JSON path (overrides the config)");
  auto* sla_threads = sla->add_option("--threads", threads, "worker threads (0 = all)");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in quick checks");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (grid->parsed()) return cmd_grid(grid_name, m, n, include_origin, out_path);
    if (interp->parsed()) {
      return cmd_interp(grid_name, m, n, include_origin, samples_path, points_path, out_path,
                        use_oracle, threads);
    }
    if (converge->parsed()) {
      return cmd_converge(grid_name, m_list, eval_count, seed, include_origin, constant_field,
                          out_path, threads, decay_ratio, decay_floor);
    }
    if (sla->parsed()) {
      return cmd_sla(config_path, out_path, threads, sla_threads->count() > 0);
    }
    if (selftest->parsed()) return cmd_selftest();
  } catch (const divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

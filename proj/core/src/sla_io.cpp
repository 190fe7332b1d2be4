#include "dfsbary/sla_io.hpp"

#include <fstream>

#include <json.hpp>

#include "dfsbary/errors.hpp"

namespace dfsbary {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& path, const std::string& detail) {
  throw size_error("sla config " + path + ": " + detail);
}

}  // namespace

SlaJob parse_sla_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw size_error("sla config: cannot open file: " + path);

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    config_error(path, std::string("parse error: ") + e.what());
  }

  SlaJob job;
  try {
    if (!doc.contains("grid")) config_error(path, "missing field \"grid\"");
    const std::string grid = doc.at("grid").get<std::string>();
    if (!parse_sphere_grid_kind(grid, job.config.kind)) {
      config_error(path, "field \"grid\" must be one of eq|seq|gl, got \"" + grid + "\"");
    }
    if (!doc.contains("m")) config_error(path, "missing field \"m\"");
    job.config.m = doc.at("m").get<int>();

    if (!doc.contains("initial_condition")) {
      config_error(path, "missing field \"initial_condition\"");
    }
    const std::string ic = doc.at("initial_condition").get<std::string>();
    if (!parse_initial_condition(ic, job.config.ic)) {
      config_error(path, "field \"initial_condition\" must be cosine_bells|gaussian_bells, got \"" +
                             ic + "\"");
    }
    if (!doc.contains("num_steps")) config_error(path, "missing field \"num_steps\"");
    job.config.num_steps = doc.at("num_steps").get<int>();

    job.config.t_final = doc.value("t_final", kFlowPeriod);
    job.config.substeps = doc.value("substeps", 1);
    job.config.threads = doc.value("threads", 1u);
    job.config.velocity_scale = doc.value("velocity_scale", 1.0);
    job.output_path = doc.value("output", std::string{});
    job.snapshot_prefix = doc.value("snapshot_prefix", std::string{"snapshot"});
    if (doc.contains("snapshot_times")) {
      job.snapshot_times = doc.at("snapshot_times").get<std::vector<double>>();
    }
  } catch (const json::exception& e) {
    config_error(path, std::string("bad field type: ") + e.what());
  }
  return job;
}

namespace {

json config_json(const SlaJob& job) {
  const TransportConfig& c = job.config;
  json out{
      {"grid", to_string(c.kind)},
      {"m", c.m},
      {"n", c.m + 1},
      {"initial_condition", to_string(c.ic)},
      {"num_steps", c.num_steps},
      {"t_final", c.t_final},
      {"substeps", c.substeps},
      {"threads", c.threads},
      {"velocity_scale", c.velocity_scale},
  };
  if (!job.snapshot_times.empty()) {
    out["snapshot_times"] = job.snapshot_times;
    out["snapshot_prefix"] = job.snapshot_prefix;
  }
  return out;
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw size_error("sla report: cannot open file for writing: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_sla_report(const std::string& path, const SlaJob& job, const TransportResult& result) {
  double step_min = 0.0, step_max = 0.0, step_sum = 0.0;
  for (std::size_t i = 0; i < result.step_seconds.size(); ++i) {
    const double s = result.step_seconds[i];
    if (i == 0) step_min = step_max = s;
    step_min = std::min(step_min, s);
    step_max = std::max(step_max, s);
    step_sum += s;
  }
  json doc{
      {"config", config_json(job)},
      {"dof", result.dof},
      {"dt", result.dt},
      {"rel_l2_error", result.rel_l2_error},
      {"rel_max_error", result.rel_max_error},
      {"tracer_min", result.tracer_min},
      {"tracer_max", result.tracer_max},
      {"final_time", result.final_field.time},
      {"wall_seconds", result.wall_seconds},
      {"step_seconds",
       {{"mean", result.step_seconds.empty() ? 0.0 : step_sum / result.step_seconds.size()},
        {"min", step_min},
        {"max", step_max},
        {"all", result.step_seconds}}},
      {"diverged", false},
  };
  write_json(path, doc);
}

void write_sla_divergence_report(const std::string& path, const SlaJob& job, int step) {
  json doc{
      {"config", config_json(job)},
      {"diverged", true},
      {"divergence_step", step},
  };
  write_json(path, doc);
}

}  // namespace dfsbary

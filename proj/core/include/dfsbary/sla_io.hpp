#pragma once

#include <string>
#include <vector>

#include "dfsbary/transport.hpp"

namespace dfsbary {

/// A transport run as described by a JSON config file:
///   {
///     "grid": "eq" | "seq" | "gl",
///     "m": 120,
///     "initial_condition": "cosine_bells" | "gaussian_bells",
///     "num_steps": 35,
///     "t_final": 5.0,            // optional, default 5
///     "substeps": 1,             // optional
///     "threads": 0,              // optional, 0 = all hardware threads
///     "velocity_scale": 1.0,     // optional debug knob
///     "output": "report.json",   // optional if the CLI provides --out
///     "snapshot_times": [2.5],   // optional CSV field dumps
///     "snapshot_prefix": "field" // optional, default "snapshot"
///   }
struct SlaJob {
  TransportConfig config;
  std::string output_path;
  std::vector<double> snapshot_times;
  std::string snapshot_prefix = "snapshot";
};

/// Parses the config; errors mention the file path and offending field.
SlaJob parse_sla_config(const std::string& path);

/// Report written after a completed run: errors, tracer extrema, wall time,
/// per-step timing, and the effective configuration.
void write_sla_report(const std::string& path, const SlaJob& job, const TransportResult& result);

/// Report for a run that diverged at `step`.
void write_sla_divergence_report(const std::string& path, const SlaJob& job, int step);

}  // namespace dfsbary

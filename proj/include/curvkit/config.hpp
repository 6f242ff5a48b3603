#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvkit/metric_models.hpp"
#include "curvkit/types.hpp"
#include "curvkit/weighted.hpp"

namespace curvkit {

/// Parsed run configuration. The on-disk format is a JSON document with
/// nested sections; scalar fields can be overridden from the command line.
struct RunConfig {
  std::string model_name = "flat";
  std::map<std::string, double> model_params = {{"n", 2.0}};
  std::string profile;

  // Points: either an explicit list or a seeded sampler.
  std::vector<Vector> explicit_points;
  int sample_count = 3;
  double sample_radius = 2.0;

  // Weight grid.
  double alpha_min = -2.0;
  double alpha_max = 2.0;
  double beta_min = -2.0;
  double beta_max = 2.0;
  int resolution = 20;

  WeightedKind kind = WeightedKind::k1;
  std::uint64_t seed = 42;
  int jobs = 1;
  Tolerances tol;
  std::vector<std::string> checks;  // empty = all groups
  std::string out_dir = "out";
};

/// Loads a config file. Throws ConfigError with field diagnostics.
RunConfig load_config(const std::string& path);

/// Parses a config from JSON text (used by tests and the CLI).
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

/// Grid axis values: `resolution` evenly spaced samples over [lo, hi].
std::vector<double> grid_axis(double lo, double hi, int resolution);

/// Materializes the configured model.
MetricField model_from_config(const RunConfig& config);

/// Explicit points, or `sample_count` seeded random points in the model's
/// chart domain.
std::vector<Vector> points_from_config(const RunConfig& config, const MetricField& field);

const char* to_string(WeightedKind kind);

}  // namespace curvkit

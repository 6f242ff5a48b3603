#include "curvkit/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace curvkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

double number_at(const json& j, const std::string& origin, const std::string& field) {
  if (!j.is_number()) fail(origin, "field '" + field + "' must be a number");
  return j.get<double>();
}

WeightedKind parse_kind(const json& j, const std::string& origin) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "kahler") return WeightedKind::kKahler;
    fail(origin, "field 'kind' must be 1..4 or \"kahler\", got \"" + s + "\"");
  }
  if (j.is_number_integer()) {
    const int k = j.get<int>();
    if (k >= 1 && k <= 4) return static_cast<WeightedKind>(k);
  }
  fail(origin, "field 'kind' must be 1..4 or \"kahler\"");
}

}  // namespace

const char* to_string(WeightedKind kind) {
  switch (kind) {
    case WeightedKind::k1:
      return "1";
    case WeightedKind::k2:
      return "2";
    case WeightedKind::k3:
      return "3";
    case WeightedKind::k4:
      return "4";
    default:
      return "kahler";
  }
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) fail(origin, "top level must be an object");

  RunConfig config;

  if (!root.contains("model")) fail(origin, "missing section 'model'");
  {
    const json& m = root.at("model");
    if (!m.is_object() || !m.contains("name") || !m.at("name").is_string()) {
      fail(origin, "section 'model' must contain a string field 'name'");
    }
    config.model_name = m.at("name").get<std::string>();
    config.model_params.clear();
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (it.key() == "name") continue;
      if (it.key() == "profile") {
        if (!it.value().is_string()) fail(origin, "field 'model.profile' must be a string");
        config.profile = it.value().get<std::string>();
        continue;
      }
      config.model_params[it.key()] = number_at(it.value(), origin, "model." + it.key());
    }
  }

  if (root.contains("points")) {
    const json& p = root.at("points");
    if (p.contains("list")) {
      if (!p.at("list").is_array()) fail(origin, "field 'points.list' must be an array");
      for (const json& entry : p.at("list")) {
        if (!entry.is_array() || entry.size() % 2 != 0 || entry.empty()) {
          fail(origin,
               "each entry of 'points.list' must be a flat array of re/im pairs");
        }
        Vector v(entry.size() / 2);
        for (size_t i = 0; i < entry.size(); i += 2) {
          v(static_cast<int>(i / 2)) =
              cdouble(number_at(entry[i], origin, "points.list[..]"),
                      number_at(entry[i + 1], origin, "points.list[..]"));
        }
        config.explicit_points.push_back(std::move(v));
      }
    }
    if (p.contains("count")) {
      config.sample_count = static_cast<int>(number_at(p.at("count"), origin, "points.count"));
      if (config.sample_count < 1) fail(origin, "'points.count' must be >= 1");
    }
    if (p.contains("radius")) {
      config.sample_radius = number_at(p.at("radius"), origin, "points.radius");
      if (!(config.sample_radius > 0.0)) fail(origin, "'points.radius' must be > 0");
    }
  }

  if (root.contains("weights")) {
    const json& w = root.at("weights");
    auto range = [&](const char* key, double& lo, double& hi) {
      if (!w.contains(key)) return;
      const json& r = w.at(key);
      if (!r.is_object() || !r.contains("min") || !r.contains("max")) {
        fail(origin, std::string("field 'weights.") + key + "' must have 'min' and 'max'");
      }
      lo = number_at(r.at("min"), origin, std::string("weights.") + key + ".min");
      hi = number_at(r.at("max"), origin, std::string("weights.") + key + ".max");
      if (!(lo <= hi)) fail(origin, std::string("'weights.") + key + "': min > max");
    };
    range("alpha", config.alpha_min, config.alpha_max);
    range("beta", config.beta_min, config.beta_max);
    if (w.contains("resolution")) {
      config.resolution =
          static_cast<int>(number_at(w.at("resolution"), origin, "weights.resolution"));
      if (config.resolution < 1) fail(origin, "'weights.resolution' must be >= 1");
    }
  }

  if (root.contains("kind")) config.kind = parse_kind(root.at("kind"), origin);
  if (root.contains("seed")) {
    if (!root.at("seed").is_number_unsigned() && !root.at("seed").is_number_integer()) {
      fail(origin, "field 'seed' must be an integer");
    }
    config.seed = root.at("seed").get<std::uint64_t>();
  }
  if (root.contains("jobs")) {
    config.jobs = static_cast<int>(number_at(root.at("jobs"), origin, "jobs"));
    if (config.jobs < 1) fail(origin, "'jobs' must be >= 1");
  }

  if (root.contains("tolerances")) {
    const json& t = root.at("tolerances");
    auto maybe = [&](const char* key, double& slot) {
      if (t.contains(key)) slot = number_at(t.at(key), origin, std::string("tolerances.") + key);
    };
    maybe("algebraic", config.tol.algebraic);
    maybe("differential", config.tol.differential);
    maybe("positivity", config.tol.positivity);
    maybe("fd_step", config.tol.fd_step);
    maybe("oracle", config.tol.oracle_tol);
    maybe("ke", config.tol.ke_tol);
  }

  if (root.contains("checks")) {
    if (!root.at("checks").is_array()) fail(origin, "field 'checks' must be an array");
    for (const json& c : root.at("checks")) {
      if (!c.is_string()) fail(origin, "entries of 'checks' must be strings");
      config.checks.push_back(c.get<std::string>());
    }
  }

  if (root.contains("output")) {
    const json& o = root.at("output");
    if (o.contains("dir")) {
      if (!o.at("dir").is_string()) fail(origin, "field 'output.dir' must be a string");
      config.out_dir = o.at("dir").get<std::string>();
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

std::vector<double> grid_axis(double lo, double hi, int resolution) {
  std::vector<double> axis;
  axis.reserve(resolution);
  if (resolution == 1) {
    axis.push_back(0.5 * (lo + hi));
    return axis;
  }
  for (int i = 0; i < resolution; ++i) {
    axis.push_back(lo + (hi - lo) * static_cast<double>(i) / (resolution - 1));
  }
  return axis;
}

MetricField model_from_config(const RunConfig& config) {
  return make_model(config.model_name, config.model_params, config.profile);
}

std::vector<Vector> points_from_config(const RunConfig& config, const MetricField& field) {
  if (!config.explicit_points.empty()) {
    for (const Vector& p : config.explicit_points) {
      if (p.size() != field.dim) {
        throw ConfigError("explicit point has dimension " + std::to_string(p.size()) +
                          ", model expects " + std::to_string(field.dim));
      }
    }
    return config.explicit_points;
  }
  Rng rng(config.seed ^ 0xc2b2ae3d27d4eb4fULL);
  std::vector<Vector> points;
  int guard = 0;
  while (static_cast<int>(points.size()) < config.sample_count) {
    if (++guard > 1000 * config.sample_count) {
      throw ConfigError("point sampler failed to find points inside the chart domain");
    }
    Vector p(field.dim);
    for (int i = 0; i < field.dim; ++i) {
      p(i) = cdouble(rng.uniform(-config.sample_radius, config.sample_radius),
                     rng.uniform(-config.sample_radius, config.sample_radius));
    }
    if (p.norm() < 1e-3) continue;  // keep clear of chart singularities
    if (field.in_domain && !field.in_domain(p)) continue;
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace curvkit

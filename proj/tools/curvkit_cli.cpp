// Command-line driver: curvature dumps, cone scans, and the verification
// battery, with deterministic file outputs under --out.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "curvkit/runner.hpp"

namespace fs = std::filesystem;
using namespace curvkit;

namespace {

struct CliOverrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> jobs;
  std::vector<std::string> checks;
};

RunConfig resolve_config(const CliOverrides& cli, bool config_required) {
  RunConfig config;
  if (!cli.config_path.empty()) {
    config = load_config(cli.config_path);
  } else if (config_required) {
    throw ConfigError("--config is required for this command");
  }
  if (cli.seed) config.seed = *cli.seed;
  if (cli.out_dir) config.out_dir = *cli.out_dir;
  if (cli.jobs) config.jobs = *cli.jobs;
  if (!cli.checks.empty()) config.checks = cli.checks;
  return config;
}

void write_outputs(const RunConfig& config, const RunOutputs& outputs) {
  fs::create_directories(config.out_dir);
  const fs::path report_path = fs::path(config.out_dir) / "report.yaml";
  outputs.report.write_file(report_path.string());
  std::cout << "wrote " << report_path.string() << "\n";
  if (!outputs.cone_csv.empty()) {
    const fs::path csv_path = fs::path(config.out_dir) / "cone.csv";
    std::ofstream csv(csv_path, std::ios::binary);
    csv << outputs.cone_csv;
    std::cout << "wrote " << csv_path.string() << "\n";
  }
}

int dispatch(const std::string& command, const CliOverrides& cli) {
  const auto start = std::chrono::steady_clock::now();

  RunOutputs outputs;
  RunConfig config;
  if (command == "models") {
    outputs.report = models_report();
    std::cout << outputs.report.to_text();
    return 0;
  }
  if (command == "curvature") {
    config = resolve_config(cli, /*config_required=*/true);
    outputs = run_curvature(config);
  } else if (command == "scan") {
    config = resolve_config(cli, /*config_required=*/true);
    outputs = run_scan(config);
  } else if (command == "verify") {
    config = resolve_config(cli, /*config_required=*/false);
    outputs = run_verify(config);
    for (const CheckResult& c : outputs.checks) {
      std::printf("[%s] %s/%s: %s\n", c.pass ? "PASS" : "FAIL", c.group.c_str(),
                  c.name.c_str(), c.detail.c_str());
    }
  }

  write_outputs(config, outputs);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  // Wall time goes to the console only; report files stay byte-stable.
  std::printf("wall_time_s: %.3f\n", elapsed.count());
  if (!outputs.ok) {
    std::cout << "verification FAILED\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvkit: curvature computations and positivity-cone analysis for "
               "Hermitian metric models"};
  app.require_subcommand(1);

  CliOverrides cli;
  std::string checks_csv;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", cli.config_path, "Path to a JSON run config");
    if (needs_config) opt->required();
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { cli.seed = s; }, "Override the RNG seed");
    cmd->add_option_function<std::string>(
        "--out", [&](const std::string& s) { cli.out_dir = s; }, "Output directory");
    cmd->add_option_function<int>(
        "--jobs", [&](int j) { cli.jobs = j; }, "Worker count for grid scans");
  };

  CLI::App* curvature = app.add_subcommand("curvature", "Curvature dump at configured points");
  add_common(curvature, true);
  CLI::App* scan = app.add_subcommand("scan", "Cone scan over the (alpha, beta) grid");
  add_common(scan, true);
  CLI::App* verify = app.add_subcommand("verify", "Run the built-in audit battery");
  add_common(verify, false);
  verify->add_option("--checks", checks_csv, "Comma-separated check groups to run");
  CLI::App* models = app.add_subcommand("models", "List the model registry");
  (void)models;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!checks_csv.empty()) {
    std::string token;
    for (char ch : checks_csv + ",") {
      if (ch == ',') {
        if (!token.empty()) cli.checks.push_back(token);
        token.clear();
      } else {
        token += ch;
      }
    }
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), cli);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#pragma once

#include <string>
#include <vector>

#include "curvkit/config.hpp"
#include "curvkit/report.hpp"

namespace curvkit {

inline constexpr const char* kEngineVersion = "0.1.0";

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Result of one CLI command. `report` serializes deterministically for a
/// fixed config and seed; wall time is intentionally left to the caller's
/// console output so report files stay byte-stable.
struct RunOutputs {
  ReportNode report;
  std::string cone_csv;              // scan only
  std::vector<CheckResult> checks;   // verify only
  bool ok = true;
};

/// Full curvature dump at each configured point: tensor norms, the four
/// Ricci contractions, scalar curvatures, HSC extrema, QOBC samples, and the
/// Kaehler-like verdict.
RunOutputs run_curvature(const RunConfig& config);

/// Cone scan over the configured weight grid; fills `cone_csv`.
RunOutputs run_scan(const RunConfig& config);

/// Named audit battery over the built-in models. Check groups: kahler, hopf,
/// uinv, weitzenbock, averaging, prop45, iwasawa, conditions. `ok` is false
/// if any selected check fails.
RunOutputs run_verify(const RunConfig& config);

/// Registry listing.
ReportNode models_report();

}  // namespace curvkit

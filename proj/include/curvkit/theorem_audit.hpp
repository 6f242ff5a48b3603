#pragma once

#include <string>
#include <vector>

#include "curvkit/curvature.hpp"
#include "curvkit/metric_models.hpp"
#include "curvkit/weighted.hpp"

namespace curvkit {

/// Outcome of one strict weight inequality. `margin` is the minimum slack of
/// the defining strict inequalities, so margin > 0 iff satisfied.
struct WeightConditionVerdict {
  std::string condition;
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;  // 0 when not applicable
  int p = 0;  // 0 when not applicable
  bool satisfied = false;
  double margin = 0.0;
};

/// Projectivity weights: alpha > 0 > beta and 3 alpha + 2 beta > 0.
WeightConditionVerdict projectivity_condition(double alpha, double beta);

/// h^{p,0} vanishing weights: alpha > 0, beta < 0, (p+1) alpha + 2 beta > 0.
/// Throws InvalidP for p < 1.
WeightConditionVerdict hodge_vanishing_condition(double alpha, double beta, int p);

/// Balanced-case h^{n,0} vanishing: alpha > 0 > beta, alpha(n+1) + 2 beta > 0.
WeightConditionVerdict balanced_vanishing_condition(double alpha, double beta, int n);

/// Diameter bound pi * sqrt((alpha(2n-1) + beta) / lambda) for a complete
/// metric with the weighted curvature bounded below by lambda > 0. Throws
/// InvalidRegime when alpha(2n-1) + beta <= 0 or lambda <= 0.
double diameter_bound(double alpha, double beta, int n, double lambda);

struct CheungOptions {
  double ke_tol = 1e-6;
  SphereMinOptions sphere;
};

/// Two-part negativity criterion for a Kaehler-Einstein surface. The frame is
/// anchored at the HSC-minimizing direction e_1; part1 tests
/// Ric^perp_{2,-1}(e_1) = 2 lambda - R_{1 1bar 1 1bar} < 0 and part2 tests
/// |R_{1 2bar 1 2bar}|^2 < |2 lambda - R_{1 1bar 1 1bar}|^2. The conclusion
/// (both parts) holds exactly when the pointwise maximum of HSC is negative.
struct CheungVerdict {
  double lambda = 0.0;
  Matrix frame;                 // columns: HSC-minimizing unitary frame
  cdouble r1111, r1122, r1212;  // frame components
  double ric_orth = 0.0;        // 2 lambda - Re r1111
  double einstein_defect = 0.0;
  bool part1 = false;
  bool part2 = false;
  bool conclusion = false;
};

/// Tensor-level entry point (synthetic Kaehler-Einstein tensors allowed).
/// Throws DimensionMismatch unless dim = 2 and NotEinstein when
/// ||Ric - lambda g||_max exceeds opts.ke_tol.
CheungVerdict cheung_criterion(const CurvatureTensor& t, double lambda,
                               const CheungOptions& opts = {}, const Tolerances& tol = {});

CheungVerdict cheung_criterion(const MetricField& field, const Vector& p, double lambda,
                               const CheungOptions& opts = {}, const Tolerances& tol = {});

/// Non-existence audit on a model expected to have no positive weighted
/// curvature in the region alpha > 0 > beta, 3 alpha + 2 beta > 0. Runs a
/// cone scan and counts positive cells inside the region.
struct BalancedObstructionReport {
  struct PerKind {
    WeightedKind kind = WeightedKind::k1;
    int region_cells = 0;
    int positive_region_cells = 0;
    ConeMap map;
  };
  std::vector<PerKind> results;
  bool consistent = true;  // no positive region cell for any kind
  // Hodge numbers of the Iwasawa threefold (fixed reference values).
  int h10 = 3;
  int h20 = 3;
  int h30 = 1;
};

BalancedObstructionReport balanced_obstruction_audit(
    const MetricField& field, const std::vector<Vector>& points,
    const std::vector<double>& alphas, const std::vector<double>& betas,
    const std::vector<WeightedKind>& kinds, const ConeScanOptions& opts = {},
    const Tolerances& tol = {});

}  // namespace curvkit

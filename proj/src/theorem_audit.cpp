#include "curvkit/theorem_audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvkit {

namespace {

WeightConditionVerdict verdict_from_slacks(std::string name, double alpha, double beta,
                                           std::initializer_list<double> slacks) {
  WeightConditionVerdict v;
  v.condition = std::move(name);
  v.alpha = alpha;
  v.beta = beta;
  v.margin = *std::min_element(slacks.begin(), slacks.end());
  v.satisfied = v.margin > 0.0;
  return v;
}

}  // namespace

WeightConditionVerdict projectivity_condition(double alpha, double beta) {
  return verdict_from_slacks("projectivity", alpha, beta,
                             {alpha, -beta, 3.0 * alpha + 2.0 * beta});
}

WeightConditionVerdict hodge_vanishing_condition(double alpha, double beta, int p) {
  if (p < 1) throw InvalidP("hodge_vanishing_condition: p must be >= 1");
  WeightConditionVerdict v = verdict_from_slacks(
      "hodge_vanishing", alpha, beta, {alpha, -beta, (p + 1) * alpha + 2.0 * beta});
  v.p = p;
  return v;
}

WeightConditionVerdict balanced_vanishing_condition(double alpha, double beta, int n) {
  WeightConditionVerdict v = verdict_from_slacks(
      "balanced_vanishing", alpha, beta, {alpha, -beta, alpha * (n + 1) + 2.0 * beta});
  v.n = n;
  return v;
}

double diameter_bound(double alpha, double beta, int n, double lambda) {
  const double numerator = alpha * (2.0 * n - 1.0) + beta;
  if (!(lambda > 0.0)) {
    throw InvalidRegime("diameter_bound: lambda must be > 0");
  }
  if (!(numerator > 0.0)) {
    throw InvalidRegime("diameter_bound: alpha(2n-1) + beta must be > 0");
  }
  return std::numbers::pi * std::sqrt(numerator / lambda);
}

CheungVerdict cheung_criterion(const CurvatureTensor& t, double lambda,
                               const CheungOptions& opts, const Tolerances& tol) {
  if (t.dim() != 2) {
    throw DimensionMismatch("cheung_criterion: requires a surface (dim 2)");
  }
  CheungVerdict verdict;
  verdict.lambda = lambda;

  const Matrix ric = ricci(t, RicciKind::k1);
  verdict.einstein_defect = (ric - lambda * t.g).cwiseAbs().maxCoeff();
  if (verdict.einstein_defect > opts.ke_tol) {
    throw NotEinstein("cheung_criterion: ||Ric - lambda g|| = " +
                      std::to_string(verdict.einstein_defect));
  }

  // Frame anchored at the HSC-minimizing direction.
  const SphereMinResult hsc_min =
      min_over_directions(t, WeightPair{0.0, 1.0}, WeightedKind::k1, opts.sphere, tol);
  verdict.frame = complete_unitary_frame(t.g, hsc_min.argmin, tol);
  const Tensor4 rf = frame_components(t, verdict.frame);
  verdict.r1111 = rf.at(0, 0, 0, 0);
  verdict.r1122 = rf.at(0, 0, 1, 1);
  verdict.r1212 = rf.at(0, 1, 0, 1);

  verdict.ric_orth = 2.0 * lambda - verdict.r1111.real();
  verdict.part1 = verdict.ric_orth < 0.0;
  verdict.part2 = std::norm(verdict.r1212) < verdict.ric_orth * verdict.ric_orth;
  verdict.conclusion = verdict.part1 && verdict.part2;
  return verdict;
}

CheungVerdict cheung_criterion(const MetricField& field, const Vector& p, double lambda,
                               const CheungOptions& opts, const Tolerances& tol) {
  return cheung_criterion(chern_curvature(field, p, tol), lambda, opts, tol);
}

BalancedObstructionReport balanced_obstruction_audit(
    const MetricField& field, const std::vector<Vector>& points,
    const std::vector<double>& alphas, const std::vector<double>& betas,
    const std::vector<WeightedKind>& kinds, const ConeScanOptions& opts,
    const Tolerances& tol) {
  BalancedObstructionReport report;
  const auto in_region = [](double a, double b) {
    return a > 0.0 && b < 0.0 && 3.0 * a + 2.0 * b > 0.0;
  };
  for (const WeightedKind kind : kinds) {
    BalancedObstructionReport::PerKind entry;
    entry.kind = kind;
    if (alphas.empty() || betas.empty()) {
      report.results.push_back(std::move(entry));
      continue;
    }
    entry.map = cone_scan(field, points, alphas, betas, kind, opts, tol);
    for (const ConeCell& cell : entry.map.cells) {
      if (!in_region(cell.alpha, cell.beta)) continue;
      ++entry.region_cells;
      if (cell.cls == ConeClass::kPositive) ++entry.positive_region_cells;
    }
    report.consistent = report.consistent && entry.positive_region_cells == 0;
    report.results.push_back(std::move(entry));
  }
  return report;
}

}  // namespace curvkit

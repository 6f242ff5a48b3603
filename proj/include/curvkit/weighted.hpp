#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvkit/curvature.hpp"
#include "curvkit/types.hpp"

namespace curvkit {

/// Real weights (alpha, beta) of the weighted orthogonal Ricci curvature.
struct WeightPair {
  double alpha = 1.0;
  double beta = -1.0;
};

/// Which curvature functional the weights combine.
///   kDefinition: alpha * Ric(X,Xbar)/|X|^2 + beta * HSC(X)
///   kOrthogonal: alpha * (Ric(X,Xbar)/|X|^2 - HSC(X)) + beta * HSC(X)
/// The second is the reading under which the weights multiply the orthogonal
/// Ricci curvature itself; it equals kDefinition with beta replaced by
/// beta - alpha.
enum class WeightConvention { kDefinition, kOrthogonal };

/// Ricci contraction used by the weighted functional; kKahler selects the
/// first contraction and flags tensors that are not Kaehler-like.
enum class WeightedKind { k1 = 1, k2 = 2, k3 = 3, k4 = 4, kKahler = 5 };

RicciKind ricci_kind_of(WeightedKind kind);

/// alpha * Ric^{(k)}(X,Xbar)/|X|_g^2 + beta * HSC(X); scale invariant in X.
/// With kind = kKahler and a non-Kaehler-like tensor, *kahler_warning is set
/// and the first contraction is used.
double weighted_orth_ricci(const CurvatureTensor& t, const WeightPair& w, const Vector& x,
                           WeightedKind kind, const Tolerances& tol = {},
                           WeightConvention convention = WeightConvention::kDefinition,
                           bool* kahler_warning = nullptr);

struct SphereMinOptions {
  int n_starts = 0;  // 0 -> default 8(n-1) random starts (plus one spectral)
  int max_iters = 400;
  std::uint64_t seed = 12345;
  WeightConvention convention = WeightConvention::kDefinition;
  double grad_tol = 1e-9;
};

struct SphereMinResult {
  double min_value = 0.0;
  Vector argmin;  // unit g-norm
  int n_starts = 0;
  bool converged = false;
  std::vector<double> start_values;  // audit sample: per-start final values
};

/// Minimizes the weighted functional over g-unit (1,0) directions modulo
/// phase (the projective sphere, real dimension 2n-2) by multistart
/// chart-based descent with finite-difference gradients.
/// Throws OptimizationDivergence if no start converges.
SphereMinResult min_over_directions(const CurvatureTensor& t, const WeightPair& w,
                                    WeightedKind kind, const SphereMinOptions& opts = {},
                                    const Tolerances& tol = {});

SphereMinResult min_over_directions(const MetricField& field, const Vector& p,
                                    const WeightPair& w, WeightedKind kind,
                                    const SphereMinOptions& opts = {},
                                    const Tolerances& tol = {});

/// Maximum instead of minimum (the functional is linear in the weights, so
/// this runs the minimizer on negated weights).
SphereMinResult max_over_directions(const CurvatureTensor& t, const WeightPair& w,
                                    WeightedKind kind, const SphereMinOptions& opts = {},
                                    const Tolerances& tol = {});

// Cone scans ------------------------------------------------------------------

enum class ConeClass { kPositive, kNegative, kIndefinite, kDegenerate };

const char* to_string(ConeClass c);

struct ConeCell {
  double alpha = 0.0;
  double beta = 0.0;
  ConeClass cls = ConeClass::kDegenerate;
  double min_value = 0.0;
  double max_value = 0.0;
  int witness_point = 0;      // index of the point realizing min_value
  Vector witness_direction;   // direction realizing min_value
};

struct ConeMap {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<ConeCell> cells;  // row-major: [alpha_index * betas.size() + beta_index]

  const ConeCell& cell(int ai, int bi) const {
    return cells[static_cast<size_t>(ai) * betas.size() + bi];
  }
  int count(ConeClass c) const;
};

struct ConeScanOptions {
  SphereMinOptions sphere;
  double positivity_tol = 1e-7;
  int jobs = 1;
};

/// Classifies every (alpha, beta) grid cell against the sampled points:
/// positive iff the directional minimum exceeds +tol at every point, negative
/// iff the maximum is below -tol everywhere, degenerate if some extremum lies
/// in the [-tol, tol] band, indefinite otherwise. Cells are independent work
/// items; the reduction order is fixed by cell index, so results do not
/// depend on the worker count.
ConeMap cone_scan(const MetricField& field, const std::vector<Vector>& points,
                  const std::vector<double>& alphas, const std::vector<double>& betas,
                  WeightedKind kind, const ConeScanOptions& opts = {},
                  const Tolerances& tol = {});

// Sphere averages ---------------------------------------------------------------

/// Exact average of Ric^{(k)}(X,Xbar)/|X|^2 over the g-unit sphere:
/// trace_g(Ric^{(k)}) / n.
double sphere_average_ricci(const CurvatureTensor& t, RicciKind kind = RicciKind::k1,
                            const Tolerances& tol = {});

/// Exact average of HSC over the g-unit sphere:
/// (Scal + altered Scal) / (n(n+1)).
double sphere_average_hsc(const CurvatureTensor& t, const Tolerances& tol = {});

/// Restricted to a p-dimensional subspace: (Scal_p + altered Scal_p)/(p(p+1)).
double sphere_average_hsc(const CurvatureTensor& t, const Subspace& sigma,
                          const Tolerances& tol = {});

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int n_samples = 0;
};

/// Monte Carlo average of the weighted functional over the g-unit sphere
/// (uniform sampling via complex-normal vectors pushed through the unitary
/// frame), with its standard error.
McEstimate mc_sphere_average(const CurvatureTensor& t, const WeightPair& w,
                             WeightedKind kind, int n_samples, Rng& rng,
                             const Tolerances& tol = {});

// Audits -------------------------------------------------------------------------

/// Dual-reading audit of the sphere-averaging identity
///   avg Ric^perp_{alpha,beta} = (alpha(n+1) + 2 beta) / (2n(n+1)) * Scal.
/// The left side uses exact averages. The right side is evaluated under both
/// readings of Scal (the Chern scalar, and twice the Chern scalar); the audit
/// reports which reading closes the identity.
struct AverageIdentityReport {
  double lhs = 0.0;
  double rhs_chern = 0.0;
  double rhs_twice_chern = 0.0;
  double residual_chern = 0.0;
  double residual_twice_chern = 0.0;
  std::string closes;  // "chern" | "twice_chern" | "both" | "neither"
  bool kahler_like = false;
};

AverageIdentityReport average_identity_audit(const CurvatureTensor& t, const WeightPair& w,
                                             const Tolerances& tol = {});

/// Empirical check of the weight inequality: whenever the sampled weighted
/// curvature and the sampled QOBC are both nonnegative, alpha(n+1) + 2 beta
/// must be nonnegative as well. A counterexample indicates an engine bug.
struct WeightInequalityReport {
  double min_weighted = 0.0;
  double min_qobc = 0.0;
  double weight_combination = 0.0;  // alpha(n+1) + 2 beta
  bool hypothesis_met = false;
  bool conclusion_holds = false;
  bool counterexample = false;
};

WeightInequalityReport weight_inequality_audit(const MetricField& field,
                                               const std::vector<Vector>& points,
                                               const WeightPair& w,
                                               const SphereMinOptions& opts = {},
                                               const Tolerances& tol = {});

}  // namespace curvkit

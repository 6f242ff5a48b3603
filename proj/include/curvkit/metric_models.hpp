#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvkit/tensor_core.hpp"
#include "curvkit/types.hpp"

namespace curvkit {

/// Radial profile of a U(n)-invariant metric g_{i jbar} = f(r) delta_ij +
/// f'(r) zbar_i z_j with r = |z|^2. Derivatives up to third order are used
/// for analytic jets; missing ones are filled by Richardson-extrapolated
/// central differences of f.
struct UInvariantProfile {
  std::string name = "custom";
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
  std::function<double(double)> d3f;

  double h(double r) const { return f(r) + r * df(r); }
  double dh(double r) const { return 2.0 * df(r) + r * d2f(r); }
  double d2h(double r) const { return 3.0 * d2f(r) + r * d3f(r); }
  double xi(double r) const { return -r * dh(r) / h(r); }
  double dxi(double r) const;

  /// Throws ProfileInvalid unless f > 0 and h > 0 at radius r.
  void require_metric_valid(double r) const;
};

/// Fills any missing derivative callbacks of `p` by finite differences of f.
UInvariantProfile with_fd_derivatives(UInvariantProfile p);

/// f = 1/(1+r): the Fubini-Study profile (constant holomorphic sectional
/// curvature 2 in this toolkit's normalization).
UInvariantProfile fs_profile();

/// f = c (flat for c = 1).
UInvariantProfile constant_profile(double c = 1.0);

struct ABCComponents {
  double a = 0.0;  // R_{1 1bar 1 1bar} in the radial unitary frame
  double b = 0.0;  // R_{1 1bar i ibar}, i >= 2
  double c = 0.0;  // R_{i ibar i ibar} = 2 R_{i ibar j jbar}, 2 <= i != j
};

/// Frame curvature components of the U(n)-invariant metric at radius r > r_min.
ABCComponents u_invariant_abc(const UInvariantProfile& profile, double r,
                              const Tolerances& tol = {}, double r_min = 1e-4);

enum class DivergenceVerdict { kLikelyDivergent, kLikelyConvergent, kInconclusive };

const char* to_string(DivergenceVerdict v);

/// Completeness report for a U(n)-invariant profile: positivity of f and h on
/// a log-spaced sample of [0, r_max], the partial integral of sqrt(h/r), and
/// a decade-ratio heuristic for its divergence. The heuristic is advisory
/// only; numerical methods cannot decide divergence.
struct CompletenessReport {
  bool f_positive = false;
  bool h_positive = false;
  double integral_estimate = 0.0;
  DivergenceVerdict divergence_heuristic = DivergenceVerdict::kInconclusive;
  std::vector<double> decade_integrals;
};

CompletenessReport lemma_completeness_report(const UInvariantProfile& profile, double r_max,
                                             const Tolerances& tol = {});

// Built-in metric fields -----------------------------------------------------

/// Flat metric on C^n (identity everywhere).
MetricField flat_metric(int n);

/// Standard Hopf metric g_{i jbar} = 4 delta_ij / |z|^2 on C^n \ {0}, n >= 2.
MetricField hopf_metric(int n);

/// Closed-form Chern curvature of the Hopf metric:
/// R_{i jbar k lbar} = 4 delta_kl (delta_ij |z|^2 - z_j zbar_i) / |z|^6.
cdouble hopf_curvature_closed_form(const Vector& z, int i, int j, int k, int l);

/// U(n)-invariant metric for the given profile, with analytic jets.
MetricField u_invariant_metric(const UInvariantProfile& profile, int n);

/// u_invariant with the FS profile.
MetricField fubini_study_metric(int n);

/// Left-invariant balanced metric on the Iwasawa threefold chart C^3; its
/// Chern curvature vanishes identically (holomorphic parallelization).
MetricField iwasawa_metric();

// Registry -------------------------------------------------------------------

struct ModelSpec {
  std::string name;
  std::string summary;
  std::vector<std::string> parameters;
};

/// Models addressable from run configs: flat, hopf, fubini_study,
/// u_invariant (params: n, profile in {fs, constant}), iwasawa.
std::vector<ModelSpec> model_registry();

/// Instantiates a registered model. Unknown names or bad parameters throw
/// ConfigError.
MetricField make_model(const std::string& name, const std::map<std::string, double>& params,
                       const std::string& profile_name = "");

}  // namespace curvkit

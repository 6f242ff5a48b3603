#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curvkit/types.hpp"

namespace curvkit {

/// Max absolute deviation of M from its conjugate transpose.
double hermitian_defect(const Matrix& m);

/// Average M with its conjugate transpose; removes O(ulp) asymmetry.
Matrix hermitize(const Matrix& m);

/// Throws NotHermitian if the defect exceeds tol.
void require_hermitian(const Matrix& m, double tol, const std::string& what);

/// Inverse of a positive-definite Hermitian matrix via Cholesky.
/// Throws NotPositiveDefinite if the factorization fails.
Matrix invert_hermitian(const Matrix& g, const Tolerances& tol = {});

/// Deterministic g-unitary frame: returns F whose columns e_a satisfy
/// sum_ij g(i,j) e_a(i) conj(e_b(j)) = delta_ab. Built from the Cholesky
/// factor of the quadratic form, so F is upper triangular.
Matrix unitary_frame(const Matrix& g, const Tolerances& tol = {});

/// Completes a g-unit vector to a full g-unitary frame (first column is the
/// given vector, remaining columns by Gram-Schmidt over coordinate vectors).
Matrix complete_unitary_frame(const Matrix& g, const Vector& first, const Tolerances& tol = {});

/// Pointwise 2-jet of a Hermitian metric in holomorphic coordinates.
/// dg[i](k,q)    = d g_{k qbar} / d z_i
/// ddg[i][j](k,l) = d^2 g_{k lbar} / d z_i d zbar_j
struct JetOfMetric {
  Matrix g;
  std::vector<Matrix> dg;
  std::vector<std::vector<Matrix>> ddg;

  int dim() const { return static_cast<int>(g.rows()); }
};

/// Max violation of the jet reality constraint
/// ddg[i][j](k,l) = conj(ddg[j][i](l,k)).
double jet_reality_defect(const JetOfMetric& jet);

/// A Hermitian metric model on a single coordinate chart. `analytic_jet` is
/// optional; when absent, jets are produced by finite differences of
/// `evaluate`.
struct MetricField {
  int dim = 0;
  std::string name;
  std::function<bool(const Vector&)> in_domain;
  std::function<Matrix(const Vector&)> evaluate;
  std::function<JetOfMetric(const Vector&)> analytic_jet;
  bool kahler_expected = false;
  bool balanced_expected = false;

  bool has_analytic_jet() const { return static_cast<bool>(analytic_jet); }
};

/// 2-jet of the metric at p. Uses the analytic path when the field provides
/// one; otherwise composes 4th-order Wirtinger stencils
/// (d/dz = (d/dx - i d/dy)/2) with step tol.fd_step per real coordinate.
/// Throws ChartDomainViolation if p is outside the chart and StencilFailure
/// if any stencil point leaves it.
JetOfMetric metric_jet(const MetricField& field, const Vector& p, const Tolerances& tol = {});

/// Finite-difference jet regardless of the analytic path (testing hook for
/// analytic-vs-stencil agreement and order sweeps).
JetOfMetric metric_jet_fd(const MetricField& field, const Vector& p, double fd_step);

}  // namespace curvkit

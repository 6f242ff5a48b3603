#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "curvkit/metric_models.hpp"
#include "support/test_support.hpp"

using namespace curvkit;
using curvkit::testing::random_point;

namespace {

void check_metric_invariants(const MetricField& field, int n_points, Rng& rng) {
  for (int trial = 0; trial < n_points; ++trial) {
    const Vector p = random_point(field.dim, rng);
    const Matrix g = field.evaluate(p);
    CHECK(hermitian_defect(g) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(g));
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

}  // namespace

TEST_CASE("flat model evaluates to the identity") {
  const MetricField flat = flat_metric(2);
  Rng rng(3);
  const Vector p = random_point(2, rng);
  CHECK((flat.evaluate(p) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hopf model: paper substitution values") {
  const MetricField hopf = hopf_metric(2);
  const Vector p1 = (Vector(2) << 2.0, 0.0).finished();
  CHECK((hopf.evaluate(p1) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  const Vector p2 = (Vector(2) << 1.0, 1.0).finished();
  CHECK((hopf.evaluate(p2) - 2.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(hopf.evaluate(Vector::Zero(2)), ChartDomainViolation);
}

TEST_CASE("hopf closed-form curvature values at z = (2, 0)") {
  const Vector z = (Vector(2) << 2.0, 0.0).finished();
  CHECK(std::abs(hopf_curvature_closed_form(z, 0, 0, 0, 0)) < 1e-15);
  CHECK(std::abs(hopf_curvature_closed_form(z, 1, 1, 0, 0) - cdouble(0.25)) < 1e-15);
  // Mixed second pair vanishes unless k = l.
  CHECK(std::abs(hopf_curvature_closed_form(z, 1, 1, 0, 1)) == 0.0);
  CHECK_THROWS_AS(hopf_curvature_closed_form(Vector::Zero(2), 0, 0, 0, 0),
                  ChartDomainViolation);
}

TEST_CASE("every built-in model satisfies HermitianMatrix invariants") {
  Rng rng(17);
  auto models = {flat_metric(3), hopf_metric(3), fubini_study_metric(3),
                 u_invariant_metric(fs_profile(), 2), iwasawa_metric()};
  for (const MetricField& field : models) {
    check_metric_invariants(field, 1000, rng);
  }
}

TEST_CASE("u_invariant: constant profile is flat, FS profile matches h and f") {
  const MetricField flat_like = u_invariant_metric(constant_profile(1.0), 2);
  Rng rng(5);
  const Vector p = random_point(2, rng);
  CHECK((flat_like.evaluate(p) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  // FS at p = (1, 0): r = 1, g = diag(h, f) = diag(1/4, 1/2).
  const MetricField fs = fubini_study_metric(2);
  const Vector q = (Vector(2) << 1.0, 0.0).finished();
  const Matrix g = fs.evaluate(q);
  CHECK(std::abs(g(0, 0) - cdouble(0.25)) < 1e-14);
  CHECK(std::abs(g(1, 1) - cdouble(0.5)) < 1e-14);
  CHECK(std::abs(g(0, 1)) < 1e-14);
}

TEST_CASE("u_invariant: invalid profile raises ProfileInvalid") {
  UInvariantProfile shrinking;
  shrinking.name = "one_minus_r";
  shrinking.f = [](double r) { return 1.0 - r; };
  shrinking.df = [](double) { return -1.0; };
  shrinking.d2f = [](double) { return 0.0; };
  shrinking.d3f = [](double) { return 0.0; };
  const MetricField field = u_invariant_metric(shrinking, 2);
  const Vector p = (Vector(2) << cdouble(1.0, 1.0), 0.0).finished();  // r = 2
  CHECK_THROWS_AS(field.evaluate(p), ProfileInvalid);
}

TEST_CASE("u_invariant_abc: FS profile gives (2, 1, 2) at any radius") {
  const UInvariantProfile fs = fs_profile();
  for (double r : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const ABCComponents abc = u_invariant_abc(fs, r);
    CHECK(std::abs(abc.a - 2.0) < 1e-9);
    CHECK(std::abs(abc.b - 1.0) < 1e-9);
    CHECK(std::abs(abc.c - 2.0) < 1e-9);
  }
}

TEST_CASE("u_invariant_abc: flat profile gives zeros; r guard raises") {
  const ABCComponents abc = u_invariant_abc(constant_profile(1.0), 1.0);
  CHECK(std::abs(abc.a) < 1e-12);
  CHECK(std::abs(abc.b) < 1e-12);
  CHECK(std::abs(abc.c) < 1e-12);
  CHECK_THROWS_AS(u_invariant_abc(fs_profile(), 1e-5), ProfileInvalid);
}

TEST_CASE("profile derivative fallback matches analytic FS derivatives") {
  UInvariantProfile bare;
  bare.name = "fs_bare";
  bare.f = [](double r) { return 1.0 / (1.0 + r); };
  const UInvariantProfile filled = with_fd_derivatives(bare);
  const UInvariantProfile exact = fs_profile();
  for (double r : {0.0, 0.3, 1.0, 4.0}) {
    CHECK(std::abs(filled.df(r) - exact.df(r)) < 1e-9);
    CHECK(std::abs(filled.d2f(r) - exact.d2f(r)) < 1e-7);
    CHECK(std::abs(filled.d3f(r) - exact.d3f(r)) < 1e-6);
  }
}

TEST_CASE("completeness report: FS converges, flat diverges") {
  const CompletenessReport fs = lemma_completeness_report(fs_profile(), 1e6);
  CHECK(fs.f_positive);
  CHECK(fs.h_positive);
  // Integral of 1/((1+r) sqrt(r)) tends to pi.
  CHECK(fs.integral_estimate < 3.2);
  CHECK(fs.integral_estimate > 3.1);
  CHECK(fs.divergence_heuristic == DivergenceVerdict::kLikelyConvergent);

  const CompletenessReport flat = lemma_completeness_report(constant_profile(1.0), 1e6);
  CHECK(flat.f_positive);
  CHECK(flat.h_positive);
  CHECK(std::abs(flat.integral_estimate - 2.0 * std::sqrt(1e6)) < 1.0);
  CHECK(flat.divergence_heuristic == DivergenceVerdict::kLikelyDivergent);
}

TEST_CASE("completeness report: negative profile flagged") {
  UInvariantProfile bad;
  bad.name = "neg";
  bad.f = [](double r) { return 1.0 - r; };
  const CompletenessReport rep = lemma_completeness_report(with_fd_derivatives(bad), 10.0);
  CHECK_FALSE(rep.f_positive);
}

TEST_CASE("iwasawa model: identity at the origin, unit determinant block") {
  const MetricField iwa = iwasawa_metric();
  CHECK((iwa.evaluate(Vector::Zero(3)) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() ==
        0.0);
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector p = random_point(3, rng);
    const Matrix g = iwa.evaluate(p);
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(g));
    CHECK(es.eigenvalues().minCoeff() > 0.0);
    CHECK(std::abs(std::abs(g.determinant()) - 1.0) < 1e-12);
  }
}

TEST_CASE("model registry instantiates and validates") {
  CHECK(model_registry().size() == 5);
  const MetricField hopf = make_model("hopf", {{"n", 2.0}});
  CHECK(hopf.dim == 2);
  const MetricField uinv = make_model("u_invariant", {{"n", 3.0}}, "fs");
  CHECK(uinv.dim == 3);
  CHECK_THROWS_AS(make_model("nope", {{"n", 2.0}}), ConfigError);
  CHECK_THROWS_AS(make_model("hopf", {}), ConfigError);
  CHECK_THROWS_AS(make_model("hopf", {{"n", 1.0}}), ConfigError);
  CHECK_THROWS_AS(make_model("u_invariant", {{"n", 2.0}}, "mystery"), ConfigError);
}

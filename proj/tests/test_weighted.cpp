#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "curvkit/metric_models.hpp"
#include "curvkit/weighted.hpp"
#include "support/test_support.hpp"

using namespace curvkit;
using curvkit::testing::dense_direction_scan;
using curvkit::testing::random_point;

TEST_CASE("weighted functional: FS values and definition collapse") {
  Rng rng(3);
  const CurvatureTensor t = chern_curvature(fubini_study_metric(2), random_point(2, rng, 1.5));
  const Vector x = rng.complex_normal_vector(2);
  // Ric = 3 g, HSC = 2: (1, -1) gives 1.
  CHECK(std::abs(weighted_orth_ricci(t, {1.0, -1.0}, x, WeightedKind::kKahler) - 1.0) < 1e-6);
  // (1, 0) is the plain normalized Ricci.
  const Matrix ric = ricci(t, RicciKind::k1);
  const double plain = herm_pair(ric, x, x).real() / herm_quad(t.g, x);
  CHECK(std::abs(weighted_orth_ricci(t, {1.0, 0.0}, x, WeightedKind::k1) - plain) < 1e-12);
  CHECK_THROWS_AS(weighted_orth_ricci(t, {1.0, -1.0}, Vector::Zero(2), WeightedKind::k1),
                  ZeroVector);
}

TEST_CASE("weighted functional is scale invariant in the direction") {
  Rng rng(5);
  const CurvatureTensor t = chern_curvature(hopf_metric(2), random_point(2, rng));
  const Vector x = rng.complex_normal_vector(2);
  const double base = weighted_orth_ricci(t, {1.3, -0.7}, x, WeightedKind::k2);
  for (int trial = 0; trial < 8; ++trial) {
    const cdouble c = rng.complex_normal();
    if (std::abs(c) < 1e-3) continue;
    CHECK(std::abs(weighted_orth_ricci(t, {1.3, -0.7}, c * x, WeightedKind::k2) - base) <
          1e-9);
  }
}

TEST_CASE("radial-frame lines: e_i matches the definition, e_1 the orthogonal reading") {
  const int n = 3;
  const UInvariantProfile prof = fs_profile();
  const MetricField field = u_invariant_metric(prof, n);
  const double r = 1.0;
  const Vector p = (Vector(n) << std::sqrt(r), 0.0, 0.0).finished();
  const CurvatureTensor t = chern_curvature(field, p);
  const ABCComponents abc = u_invariant_abc(prof, r);

  Vector e1 = Vector::Zero(n);
  e1(0) = 1.0;
  Vector e2 = Vector::Zero(n);
  e2(1) = 1.0;

  for (const WeightPair w : {WeightPair{1.0, -1.0}, WeightPair{2.0, -0.5}, WeightPair{0.7, 1.1}}) {
    // e_i line (i >= 2): (alpha n / 2 + beta) C + alpha B under the primary
    // definition.
    const double ei_expected = (w.alpha * n / 2.0 + w.beta) * abc.c + w.alpha * abc.b;
    CHECK(std::abs(weighted_orth_ricci(t, w, e2, WeightedKind::kKahler) - ei_expected) <
          1e-6);

    // e_1 line: alpha (n-1) B + beta A holds under the reading that weights
    // the orthogonal Ricci curvature, not under the primary definition
    // (which adds an extra alpha A).
    const double e1_orth = w.alpha * (n - 1) * abc.b + w.beta * abc.a;
    const double e1_def = e1_orth + w.alpha * abc.a;
    CHECK(std::abs(weighted_orth_ricci(t, w, e1, WeightedKind::kKahler, {},
                                       WeightConvention::kOrthogonal) -
                   e1_orth) < 1e-6);
    CHECK(std::abs(weighted_orth_ricci(t, w, e1, WeightedKind::kKahler) - e1_def) < 1e-6);
  }
}

TEST_CASE("min_over_directions: flat and constant-HSC models") {
  Rng rng(7);
  const CurvatureTensor flat_t = chern_curvature(flat_metric(2), random_point(2, rng));
  for (const WeightPair w : {WeightPair{1.0, -1.0}, WeightPair{-2.0, 0.3}}) {
    const SphereMinResult res = min_over_directions(flat_t, w, WeightedKind::k1);
    CHECK(std::abs(res.min_value) < 1e-12);
    CHECK(res.converged);
  }

  for (int n : {2, 3}) {
    const CurvatureTensor t = chern_curvature(fubini_study_metric(n), random_point(n, rng, 1.5));
    for (const WeightPair w : {WeightPair{1.0, -1.0}, WeightPair{0.5, 2.0}}) {
      const double expected = w.alpha * (n + 1) + 2.0 * w.beta;
      const SphereMinResult res = min_over_directions(t, w, WeightedKind::kKahler);
      CHECK(std::abs(res.min_value - expected) < 1e-6);
      // Audit sample invariant: the minimum does not exceed any start value.
      for (double v : res.start_values) CHECK(res.min_value <= v + 1e-12);
    }
  }
}

TEST_CASE("min_over_directions: hopf Rayleigh quotients match the eigenvalue oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector z = random_point(2, rng);
    const CurvatureTensor t = chern_curvature(hopf_metric(2), z);
    for (WeightedKind kind : {WeightedKind::k1, WeightedKind::k2}) {
      const Matrix ric = ricci(t, ricci_kind_of(kind));
      Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(ric.conjugate(),
                                                          t.g.conjugate());
      const double smallest = es.eigenvalues().minCoeff();
      const SphereMinResult res = min_over_directions(t, {1.0, 0.0}, kind);
      CHECK(std::abs(res.min_value - smallest) < 1e-7);
    }
  }
}

TEST_CASE("min_over_directions agrees with the dense sampling oracle") {
  Rng rng(13);
  const int oracle_samples = 200000;
  for (int n : {2, 3}) {
    const MetricField hopf = hopf_metric(n);
    for (int trial = 0; trial < 3; ++trial) {
      const Vector z = random_point(n, rng);
      const CurvatureTensor t = chern_curvature(hopf, z);
      // Weights from the alpha > 0 >= beta regime of interest.
      for (const WeightPair w : {WeightPair{1.0, -1.0}, WeightPair{2.0, -1.0},
                                 WeightPair{1.0, 0.0}, WeightPair{0.0, -1.0}}) {
        const WeightedKind kind = WeightedKind::k2;
        const auto oracle = dense_direction_scan(t, w, kind, oracle_samples);
        const SphereMinResult res = min_over_directions(t, w, kind);
        CHECK(res.min_value <= oracle.min_value + 1e-9);
        CHECK(std::abs(res.min_value - oracle.min_value) < 1e-4);
      }
    }
  }
  // Isolated-minimum case (beta > 0): the optimizer may only undershoot the
  // sampling oracle, never exceed it.
  const CurvatureTensor t = chern_curvature(hopf_metric(3), random_point(3, rng));
  const auto oracle = dense_direction_scan(t, {0.0, 1.0}, WeightedKind::k2, oracle_samples);
  const SphereMinResult res = min_over_directions(t, {0.0, 1.0}, WeightedKind::k2);
  CHECK(res.min_value <= oracle.min_value + 1e-9);
  CHECK(oracle.min_value - res.min_value < 5e-3);
}

TEST_CASE("min_over_directions: weight scaling and seed stability") {
  Rng rng(17);
  const CurvatureTensor t = chern_curvature(hopf_metric(2), random_point(2, rng));
  const WeightPair w{1.0, -0.6};
  SphereMinOptions opts;
  const SphereMinResult base = min_over_directions(t, w, WeightedKind::k1, opts);
  for (double scale : {2.0, 7.5}) {
    const SphereMinResult scaled =
        min_over_directions(t, {scale * w.alpha, scale * w.beta}, WeightedKind::k1, opts);
    CHECK(std::abs(scaled.min_value - scale * base.min_value) < 1e-9 * scale);
  }
  for (std::uint64_t seed : {99ULL, 1234567ULL}) {
    SphereMinOptions alt = opts;
    alt.seed = seed;
    const SphereMinResult res = min_over_directions(t, w, WeightedKind::k1, alt);
    CHECK(std::abs(res.min_value - base.min_value) < 1e-6);
  }
}

TEST_CASE("weighted variants of all four kinds agree on kahler-like tensors") {
  Rng rng(19);
  const CurvatureTensor t =
      chern_curvature(u_invariant_metric(fs_profile(), 3), random_point(3, rng, 1.4));
  const Vector x = rng.complex_normal_vector(3);
  const WeightPair w{1.2, -0.8};
  const double v1 = weighted_orth_ricci(t, w, x, WeightedKind::k1);
  for (WeightedKind kind : {WeightedKind::k2, WeightedKind::k3, WeightedKind::k4}) {
    CHECK(std::abs(weighted_orth_ricci(t, w, x, kind) - v1) < 1e-7);
  }
}

TEST_CASE("kahler kind warns on non-kahler-like tensors") {
  Rng rng(23);
  const CurvatureTensor t = chern_curvature(hopf_metric(2), random_point(2, rng));
  bool warned = false;
  weighted_orth_ricci(t, {1.0, -1.0}, rng.complex_normal_vector(2), WeightedKind::kKahler,
                      {}, WeightConvention::kDefinition, &warned);
  CHECK(warned);
}

TEST_CASE("cone_scan: FS recovers the half-plane, flat and iwasawa degenerate") {
  Rng rng(29);
  std::vector<double> alphas, betas;
  for (int i = 0; i < 12; ++i) alphas.push_back(-2.0 + 4.0 * i / 11.0);
  for (int i = 0; i < 12; ++i) betas.push_back(-2.0 + 4.0 * i / 11.0);

  const std::vector<Vector> pts = {random_point(2, rng, 1.2), random_point(2, rng, 1.2)};
  const ConeMap fs_map =
      cone_scan(fubini_study_metric(2), pts, alphas, betas, WeightedKind::kKahler);
  int mismatches = 0;
  for (const ConeCell& cell : fs_map.cells) {
    const double value = 3.0 * cell.alpha + 2.0 * cell.beta;
    const ConeClass expected = value > 1e-7    ? ConeClass::kPositive
                               : value < -1e-7 ? ConeClass::kNegative
                                               : ConeClass::kDegenerate;
    if (cell.cls != expected) ++mismatches;
    CHECK(std::abs(cell.min_value - value) < 1e-6);
    CHECK(std::abs(cell.max_value - value) < 1e-6);
  }
  CHECK(mismatches == 0);

  const std::vector<Vector> flat_pts = {random_point(2, rng)};
  const ConeMap flat_map =
      cone_scan(flat_metric(2), flat_pts, alphas, betas, WeightedKind::k1);
  CHECK(flat_map.count(ConeClass::kDegenerate) == static_cast<int>(flat_map.cells.size()));

  const std::vector<Vector> iwa_pts = {random_point(3, rng), random_point(3, rng)};
  const ConeMap iwa_map = cone_scan(iwasawa_metric(), iwa_pts, alphas, betas, WeightedKind::k1);
  CHECK(iwa_map.count(ConeClass::kDegenerate) == static_cast<int>(iwa_map.cells.size()));
  CHECK(iwa_map.count(ConeClass::kPositive) == 0);
}

TEST_CASE("cone_scan: classification is invariant under positive grid rescaling") {
  Rng rng(31);
  const std::vector<Vector> pts = {random_point(2, rng)};
  // Rays present in both grids: (a, b) and 2(a, b).
  const std::vector<double> base_a = {-1.0, 0.5, 1.0};
  const std::vector<double> base_b = {-1.0, 0.5, 1.0};
  std::vector<double> twice_a, twice_b;
  for (double a : base_a) twice_a.push_back(2.0 * a);
  for (double b : base_b) twice_b.push_back(2.0 * b);

  const ConeMap m1 = cone_scan(hopf_metric(2), pts, base_a, base_b, WeightedKind::k2);
  const ConeMap m2 = cone_scan(hopf_metric(2), pts, twice_a, twice_b, WeightedKind::k2);
  for (size_t i = 0; i < m1.cells.size(); ++i) {
    CHECK(m1.cells[i].cls == m2.cells[i].cls);
  }
}

TEST_CASE("cone_scan is deterministic across worker counts") {
  Rng rng(37);
  const std::vector<Vector> pts = {random_point(2, rng), random_point(2, rng)};
  std::vector<double> alphas = {-1.0, 0.0, 1.0, 2.0};
  std::vector<double> betas = {-1.5, -0.5, 0.5, 1.5};

  ConeScanOptions serial;
  serial.jobs = 1;
  ConeScanOptions parallel;
  parallel.jobs = 8;
  const ConeMap m1 = cone_scan(hopf_metric(2), pts, alphas, betas, WeightedKind::k1, serial);
  const ConeMap m2 = cone_scan(hopf_metric(2), pts, alphas, betas, WeightedKind::k1, parallel);
  REQUIRE(m1.cells.size() == m2.cells.size());
  for (size_t i = 0; i < m1.cells.size(); ++i) {
    CHECK(m1.cells[i].cls == m2.cells[i].cls);
    CHECK(m1.cells[i].min_value == m2.cells[i].min_value);
    CHECK(m1.cells[i].max_value == m2.cells[i].max_value);
    CHECK(m1.cells[i].witness_point == m2.cells[i].witness_point);
    CHECK((m1.cells[i].witness_direction - m2.cells[i].witness_direction).norm() == 0.0);
  }
}

TEST_CASE("sphere averages: exact values on flat and FS") {
  const CurvatureTensor flat_t = chern_curvature(flat_metric(2), Vector::Zero(2));
  CHECK(sphere_average_ricci(flat_t) == 0.0);
  CHECK(sphere_average_hsc(flat_t) == 0.0);

  Rng rng(41);
  const CurvatureTensor fs_t =
      chern_curvature(fubini_study_metric(2), random_point(2, rng, 1.5));
  CHECK(std::abs(sphere_average_ricci(fs_t) - 3.0) < 1e-6);
  CHECK(std::abs(sphere_average_hsc(fs_t) - 2.0) < 1e-6);

  // Restricted average over a 2-plane at the origin of FS(3):
  // (Scal_2 + altered_2) / (2 * 3) = (6 + 6) / 6 = 2.
  const CurvatureTensor fs3 = chern_curvature(fubini_study_metric(3), Vector::Zero(3));
  Subspace sigma;
  sigma.basis = Matrix::Identity(3, 3).leftCols(2);
  CHECK(std::abs(sphere_average_hsc(fs3, sigma) - 2.0) < 1e-9);
}

TEST_CASE("monte carlo sphere average agrees with the exact formula") {
  Rng rng(43);
  const Vector z = (Vector(2) << 2.0, 0.0).finished();
  const CurvatureTensor t = chern_curvature(hopf_metric(2), z);

  // Statistical check with a retry-once policy.
  bool ok = false;
  for (std::uint64_t seed : {101ULL, 505ULL}) {
    Rng mc_rng(seed);
    const McEstimate ric_mc = mc_sphere_average(t, {1.0, 0.0}, WeightedKind::k1, 100000, mc_rng);
    Rng mc_rng2(seed + 1);
    const McEstimate hsc_mc = mc_sphere_average(t, {0.0, 1.0}, WeightedKind::k1, 100000, mc_rng2);
    const double ric_exact = sphere_average_ricci(t);
    const double hsc_exact = sphere_average_hsc(t);
    const bool ric_ok = std::abs(ric_mc.mean - ric_exact) <= 3.0 * ric_mc.std_error + 1e-12;
    const bool hsc_ok = std::abs(hsc_mc.mean - hsc_exact) <= 3.0 * hsc_mc.std_error + 1e-12;
    if (ric_ok && hsc_ok) {
      ok = true;
      break;
    }
  }
  CHECK(ok);
}

TEST_CASE("averaging identity closes under exactly one Scal reading") {
  Rng rng(47);
  // Flat: both readings close trivially.
  const AverageIdentityReport flat_rep =
      average_identity_audit(chern_curvature(flat_metric(2), Vector::Zero(2)), {1.0, -1.0});
  CHECK(flat_rep.closes == "both");

  // FS(2), (1, -1): lhs = 3 - 2 = 1; closes under Scal = 2 Scal_chern.
  const CurvatureTensor fs2 =
      chern_curvature(fubini_study_metric(2), random_point(2, rng, 1.5));
  const AverageIdentityReport rep2 = average_identity_audit(fs2, {1.0, -1.0});
  CHECK(std::abs(rep2.lhs - 1.0) < 1e-6);
  CHECK(rep2.closes == "twice_chern");
  CHECK(rep2.residual_chern > 0.1);
  CHECK(rep2.kahler_like);

  // FS(3), (2, -3): lhs = 2*4 - 3*2 = 2.
  const CurvatureTensor fs3 =
      chern_curvature(fubini_study_metric(3), random_point(3, rng, 1.2));
  const AverageIdentityReport rep3 = average_identity_audit(fs3, {2.0, -3.0});
  CHECK(std::abs(rep3.lhs - 2.0) < 1e-6);
  CHECK(rep3.closes == "twice_chern");
}

TEST_CASE("weight inequality audit: consistent on FS, boundary on flat") {
  Rng rng(53);
  const std::vector<Vector> pts = {random_point(2, rng, 1.2), random_point(2, rng, 1.2)};
  const MetricField fs = fubini_study_metric(2);

  const WeightInequalityReport r1 = weight_inequality_audit(fs, pts, {1.0, -1.0});
  CHECK(r1.hypothesis_met);
  CHECK(std::abs(r1.min_weighted - 1.0) < 1e-5);
  CHECK(r1.conclusion_holds);
  CHECK_FALSE(r1.counterexample);
  CHECK(std::abs(r1.weight_combination - 1.0) < 1e-12);

  const WeightInequalityReport r2 = weight_inequality_audit(fs, pts, {-1.0, 2.0});
  CHECK(r2.hypothesis_met);
  CHECK(std::abs(r2.min_weighted - 1.0) < 1e-5);
  CHECK(r2.conclusion_holds);

  // Flat with alpha(n+1) + 2 beta = 0: everything degenerates to the
  // equality boundary, which still counts as holding.
  const std::vector<Vector> flat_pts = {random_point(2, rng)};
  const WeightInequalityReport r3 =
      weight_inequality_audit(flat_metric(2), flat_pts, {1.0, -1.5});
  CHECK(r3.hypothesis_met);
  CHECK(r3.conclusion_holds);
  CHECK(std::abs(r3.weight_combination) < 1e-12);
  CHECK_FALSE(r3.counterexample);
}

TEST_CASE("max_over_directions mirrors min with negated weights") {
  Rng rng(59);
  const CurvatureTensor t = chern_curvature(hopf_metric(2), random_point(2, rng));
  const SphereMinResult lo = min_over_directions(t, {0.0, 1.0}, WeightedKind::k1);
  const SphereMinResult hi = max_over_directions(t, {0.0, 1.0}, WeightedKind::k1);
  CHECK(hi.min_value >= lo.min_value);
  // Hopf HSC ranges over [0, 1/4] at every point.
  CHECK(std::abs(lo.min_value - 0.0) < 1e-7);
  CHECK(std::abs(hi.min_value - 0.25) < 1e-7);
}

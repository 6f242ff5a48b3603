#include "curvkit/runner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "curvkit/theorem_audit.hpp"

namespace curvkit {

namespace {

void echo_config(ReportNode& report, const RunConfig& config) {
  ReportNode& c = report.child("config");
  c.put("model", config.model_name);
  ReportNode& params = c.child("parameters");
  for (const auto& [key, value] : config.model_params) params.put(key, value);
  if (!config.profile.empty()) c.put("profile", config.profile);
  c.put("kind", to_string(config.kind));
  c.put("seed", config.seed);
  ReportNode& w = c.child("weights");
  w.put("alpha_min", config.alpha_min);
  w.put("alpha_max", config.alpha_max);
  w.put("beta_min", config.beta_min);
  w.put("beta_max", config.beta_max);
  w.put("resolution", config.resolution);
  ReportNode& t = c.child("tolerances");
  t.put("algebraic", config.tol.algebraic);
  t.put("differential", config.tol.differential);
  t.put("positivity", config.tol.positivity);
  t.put("fd_step", config.tol.fd_step);
  t.put("oracle", config.tol.oracle_tol);
  // The worker count is execution infrastructure, not part of the result;
  // omitting it keeps reports byte-identical across --jobs settings.
}

void put_matrix(ReportNode& node, const std::string& key, const Matrix& m) {
  std::string joined = "[";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i || j) joined += ", ";
      joined += ReportNode::format_double(m(i, j).real()) + ", " +
                ReportNode::format_double(m(i, j).imag());
    }
  }
  joined += "]";
  node.put(key, joined);
}

double max_component(const CurvatureTensor& t) {
  double worst = 0.0;
  for (const cdouble& v : t.r.v) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace

RunOutputs run_curvature(const RunConfig& config) {
  RunOutputs out;
  out.report.put("engine_version", kEngineVersion);
  out.report.put("command", "curvature");
  echo_config(out.report, config);

  const MetricField field = model_from_config(config);
  const std::vector<Vector> points = points_from_config(config, field);

  ReportNode& list = out.report.child("points");
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const Vector& p = points[pi];
    ReportNode& item = list.list_item();
    item.put("point", p);

    const CurvatureTensor t = chern_curvature(field, p, config.tol);
    item.put("tensor_max_abs", max_component(t));
    item.put("pairing_defect", pairing_defect(t.r));

    const KahlerLikeReport kl = kahler_like_check(t, config.tol.positivity);
    ReportNode& klnode = item.child("kahler_like");
    klnode.put("pass", kl.pass);
    klnode.put("max_violation", kl.max_violation);

    ReportNode& ric = item.child("ricci");
    put_matrix(ric, "kind_1", ricci(t, RicciKind::k1));
    put_matrix(ric, "kind_2", ricci(t, RicciKind::k2));
    put_matrix(ric, "kind_3", ricci(t, RicciKind::k3));
    put_matrix(ric, "kind_4", ricci(t, RicciKind::k4));

    item.put("scalar", scalar_curvature(t, config.tol));
    item.put("altered_scalar", altered_scalar_curvature(t, config.tol));

    SphereMinOptions sphere;
    sphere.seed = config.seed + 1000 * pi;
    const SphereMinResult lo =
        min_over_directions(t, {0.0, 1.0}, WeightedKind::k1, sphere, config.tol);
    const SphereMinResult hi =
        max_over_directions(t, {0.0, 1.0}, WeightedKind::k1, sphere, config.tol);
    ReportNode& hscnode = item.child("hsc");
    hscnode.put("min", lo.min_value);
    hscnode.put("min_direction", lo.argmin);
    hscnode.put("max", hi.min_value);
    hscnode.put("max_direction", hi.argmin);

    // QOBC samples: coordinate weights plus two seeded random ones.
    const Matrix frame = unitary_frame(t.g, config.tol);
    const Tensor4 rf = frame_components(t, frame);
    ReportNode& qnode = item.child("qobc_samples");
    Rng rng(config.seed ^ (0x9e3779b97f4a7c15ULL + pi));
    std::vector<RealVector> vs;
    for (int a = 0; a < field.dim; ++a) {
      RealVector v = RealVector::Zero(field.dim);
      v(a) = 1.0;
      vs.push_back(v);
    }
    for (int s = 0; s < 2; ++s) {
      RealVector v(field.dim);
      for (int i = 0; i < field.dim; ++i) v(i) = rng.normal();
      vs.push_back(v);
    }
    for (const RealVector& v : vs) {
      ReportNode& sample = qnode.list_item();
      std::string vtxt = "[";
      for (int i = 0; i < v.size(); ++i) {
        if (i) vtxt += ", ";
        vtxt += ReportNode::format_double(v(i));
      }
      vtxt += "]";
      sample.put("v", vtxt);
      sample.put("value", qobc_numerator(rf, v) / v.squaredNorm());
    }
  }
  return out;
}

RunOutputs run_scan(const RunConfig& config) {
  RunOutputs out;
  out.report.put("engine_version", kEngineVersion);
  out.report.put("command", "scan");
  echo_config(out.report, config);

  const MetricField field = model_from_config(config);
  const std::vector<Vector> points = points_from_config(config, field);

  ReportNode& pts = out.report.child("points");
  for (const Vector& p : points) pts.list_item().put("point", p);

  const std::vector<double> alphas = grid_axis(config.alpha_min, config.alpha_max, config.resolution);
  const std::vector<double> betas = grid_axis(config.beta_min, config.beta_max, config.resolution);

  ConeScanOptions opts;
  opts.jobs = config.jobs;
  opts.positivity_tol = config.tol.positivity;
  opts.sphere.seed = config.seed;
  const ConeMap map = cone_scan(field, points, alphas, betas, config.kind, opts, config.tol);

  ReportNode& summary = out.report.child("cone_map");
  summary.put("cells", static_cast<long long>(map.cells.size()));
  summary.put("positive", map.count(ConeClass::kPositive));
  summary.put("negative", map.count(ConeClass::kNegative));
  summary.put("indefinite", map.count(ConeClass::kIndefinite));
  summary.put("degenerate", map.count(ConeClass::kDegenerate));

  std::vector<std::string> header = {"alpha", "beta", "classification", "min_value",
                                     "witness_point"};
  for (int i = 0; i < field.dim; ++i) {
    header.push_back("wd_re_" + std::to_string(i));
    header.push_back("wd_im_" + std::to_string(i));
  }
  CsvWriter csv(header);
  for (const ConeCell& cell : map.cells) {
    std::vector<std::string> row = {CsvWriter::cell(cell.alpha), CsvWriter::cell(cell.beta),
                                    to_string(cell.cls), CsvWriter::cell(cell.min_value),
                                    std::to_string(cell.witness_point)};
    for (int i = 0; i < field.dim; ++i) {
      row.push_back(CsvWriter::cell(cell.witness_direction(i).real()));
      row.push_back(CsvWriter::cell(cell.witness_direction(i).imag()));
    }
    csv.add_row(row);
  }
  out.cone_csv = csv.to_text();
  return out;
}

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

void run_check(std::vector<CheckResult>& results, const std::vector<std::string>& filter,
               const std::string& group, const std::string& name, const CheckFn& fn) {
  if (!filter.empty() &&
      std::find(filter.begin(), filter.end(), group) == filter.end()) {
    return;
  }
  CheckResult result;
  result.group = group;
  result.name = name;
  try {
    auto [pass, detail] = fn();
    result.pass = pass;
    result.detail = detail;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  results.push_back(std::move(result));
}

std::string fmt(double v) { return ReportNode::format_double(v); }

}  // namespace

RunOutputs run_verify(const RunConfig& config) {
  RunOutputs out;
  out.report.put("engine_version", kEngineVersion);
  out.report.put("command", "verify");
  echo_config(out.report, config);

  const Tolerances tol = config.tol;
  const std::vector<std::string>& filter = config.checks;
  std::vector<CheckResult>& checks = out.checks;
  Rng rng(config.seed);

  auto random_domain_point = [](const MetricField& field, Rng& r, double radius) {
    while (true) {
      Vector p(field.dim);
      for (int i = 0; i < field.dim; ++i) {
        p(i) = cdouble(r.uniform(-radius, radius), r.uniform(-radius, radius));
      }
      if (p.norm() < 0.3) continue;
      if (field.in_domain && !field.in_domain(p)) continue;
      return p;
    }
  };

  // --- kahler group -----------------------------------------------------
  run_check(checks, filter, "kahler", "symmetry_pass_on_kahler_like_models", [&] {
    double worst = 0.0;
    std::string worst_model;
    Rng local = rng.fork(1);
    for (const MetricField& field :
         {flat_metric(2), fubini_study_metric(2), u_invariant_metric(fs_profile(), 3),
          iwasawa_metric()}) {
      for (int trial = 0; trial < 5; ++trial) {
        const Vector p = random_domain_point(field, local, 1.4);
        const auto rep = kahler_like_check(chern_curvature(field, p, tol), tol.positivity);
        if (rep.max_violation > worst) {
          worst = rep.max_violation;
          worst_model = field.name;
        }
        if (!rep.pass) {
          return std::pair{false, "violation " + fmt(rep.max_violation) + " on " + field.name};
        }
      }
    }
    return std::pair{true, "max violation " + fmt(worst) + " (" + worst_model + ")"};
  });

  run_check(checks, filter, "kahler", "four_ricci_kinds_coincide", [&] {
    Rng local = rng.fork(2);
    double worst = 0.0;
    for (const MetricField& field :
         {flat_metric(2), fubini_study_metric(2), u_invariant_metric(fs_profile(), 3),
          iwasawa_metric()}) {
      for (int trial = 0; trial < 3; ++trial) {
        const CurvatureTensor t =
            chern_curvature(field, random_domain_point(field, local, 1.4), tol);
        const Matrix r1 = ricci(t, RicciKind::k1);
        for (RicciKind k : {RicciKind::k2, RicciKind::k3, RicciKind::k4}) {
          worst = std::max(worst, (ricci(t, k) - r1).cwiseAbs().maxCoeff());
        }
      }
    }
    return std::pair{worst <= tol.positivity, "max spread " + fmt(worst)};
  });

  run_check(checks, filter, "kahler", "hopf_fails_symmetry", [&] {
    Rng local = rng.fork(3);
    const MetricField hopf = hopf_metric(2);
    double least = 1e300;
    for (int trial = 0; trial < 5; ++trial) {
      const Vector p = random_domain_point(hopf, local, 2.0);
      least = std::min(least,
                       kahler_like_check(chern_curvature(hopf, p, tol), tol.positivity)
                           .max_violation);
    }
    return std::pair{least > 1e-2, "min violation " + fmt(least)};
  });

  // --- hopf group --------------------------------------------------------
  run_check(checks, filter, "hopf", "closed_form_componentwise", [&] {
    Rng local = rng.fork(4);
    double worst = 0.0;
    for (int n : {2, 3}) {
      const MetricField hopf = hopf_metric(n);
      for (int trial = 0; trial < 10; ++trial) {
        const Vector z = random_domain_point(hopf, local, 2.0);
        const CurvatureTensor t = chern_curvature(hopf, z, tol);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              for (int l = 0; l < n; ++l)
                worst = std::max(worst,
                                 std::abs(t.at(i, j, k, l) -
                                          hopf_curvature_closed_form(z, i, j, k, l)));
      }
    }
    return std::pair{worst <= tol.differential, "max mismatch " + fmt(worst)};
  });

  run_check(checks, filter, "hopf", "second_ricci_constant", [&] {
    const Vector z = (Vector(2) << 2.0, 0.0).finished();
    const CurvatureTensor t = chern_curvature(hopf_metric(2), z, tol);
    const Matrix r2 = ricci(t, RicciKind::k2);
    const double err = (r2 - 0.25 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    return std::pair{err <= tol.differential,
                     "|Ric2 - diag(1/4)| = " + fmt(err) + " at |z|^2 = 4"};
  });

  // --- uinv group ----------------------------------------------------------
  run_check(checks, filter, "uinv", "abc_closed_form_fs", [&] {
    double worst = 0.0;
    for (double r : {0.1, 0.5, 2.0, 10.0}) {
      const ABCComponents abc = u_invariant_abc(fs_profile(), r, tol);
      worst = std::max({worst, std::abs(abc.a - 2.0), std::abs(abc.b - 1.0),
                        std::abs(abc.c - 2.0)});
    }
    return std::pair{worst <= 10.0 * tol.algebraic, "max |ABC - (2,1,2)| = " + fmt(worst)};
  });

  run_check(checks, filter, "uinv", "engine_matches_abc_frame_values", [&] {
    const UInvariantProfile prof = fs_profile();
    const MetricField field = u_invariant_metric(prof, 3);
    double worst = 0.0;
    for (double r : {0.5, 2.0, 6.0}) {
      const Vector p = (Vector(3) << std::sqrt(r), 0.0, 0.0).finished();
      const CurvatureTensor t = chern_curvature(field, p, tol);
      const Tensor4 rf = frame_components(t, unitary_frame(t.g, tol));
      const ABCComponents abc = u_invariant_abc(prof, r, tol);
      worst = std::max({worst, std::abs(rf.at(0, 0, 0, 0) - cdouble(abc.a)),
                        std::abs(rf.at(0, 0, 1, 1) - cdouble(abc.b)),
                        std::abs(rf.at(1, 1, 1, 1) - cdouble(abc.c))});
    }
    return std::pair{worst <= tol.differential, "max frame mismatch " + fmt(worst)};
  });

  run_check(checks, filter, "uinv", "fs_constant_hsc_and_scal", [&] {
    Rng local = rng.fork(5);
    const MetricField fs = fubini_study_metric(2);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const CurvatureTensor t = chern_curvature(fs, random_domain_point(fs, local, 1.5), tol);
      worst = std::max(worst, std::abs(hsc(t, local.complex_normal_vector(2), tol) - 2.0));
      worst = std::max(worst, std::abs(scalar_curvature(t, tol) - 6.0));
    }
    return std::pair{worst <= tol.differential, "max deviation " + fmt(worst)};
  });

  // --- weitzenbock group ----------------------------------------------------
  run_check(checks, filter, "weitzenbock", "rank_one_reduction", [&] {
    Rng local = rng.fork(6);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      CurvatureTensor t;
      if (trial % 2 == 0) {
        Matrix a(2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) a(i, j) = local.complex_normal();
        Matrix g = a * a.adjoint() + 0.4 * Matrix::Identity(2, 2);
        t = constant_hsc_tensor(hermitize(g), local.uniform(-4.0, 4.0), tol);
      } else {
        const MetricField fs = fubini_study_metric(2);
        t = chern_curvature(fs, random_domain_point(fs, local, 1.5), tol);
      }
      const double tv = local.uniform(-2.0, 2.0);
      Matrix rho = Matrix::Zero(2, 2);
      rho(0, 0) = tv;
      const Tensor4 rf = frame_components(t, unitary_frame(t.g, tol));
      cdouble ric11 = 0.0;
      for (int c = 0; c < 2; ++c) ric11 += rf.at(0, 0, c, c);
      const double expected = (ric11.real() - rf.at(0, 0, 0, 0).real()) * tv * tv;
      worst = std::max(worst, std::abs(qobc_weitzenbock(t, rho, tol) - expected));
    }
    return std::pair{worst <= 10.0 * tol.algebraic, "max reduction error " + fmt(worst)};
  });

  // --- averaging group ---------------------------------------------------------
  run_check(checks, filter, "averaging", "identity_closes_under_one_reading", [&] {
    Rng local = rng.fork(7);
    for (int n : {2, 3}) {
      const MetricField fs = fubini_study_metric(n);
      const CurvatureTensor t = chern_curvature(fs, random_domain_point(fs, local, 1.4), tol);
      for (int trial = 0; trial < 5; ++trial) {
        const WeightPair w{local.uniform(-2.0, 2.0), local.uniform(-2.0, 2.0)};
        const AverageIdentityReport rep = average_identity_audit(t, w, tol);
        if (rep.closes != "twice_chern") {
          return std::pair{false, "n=" + std::to_string(n) + " w=(" + fmt(w.alpha) + "," +
                                      fmt(w.beta) + ") closes=" + rep.closes};
        }
      }
    }
    return std::pair{true, std::string("Scal reading: twice the Chern scalar")};
  });

  run_check(checks, filter, "averaging", "monte_carlo_cross_check", [&] {
    const Vector z = (Vector(2) << 2.0, 0.0).finished();
    const CurvatureTensor t = chern_curvature(hopf_metric(2), z, tol);
    const double ric_exact = sphere_average_ricci(t, RicciKind::k1, tol);
    const double hsc_exact = sphere_average_hsc(t, tol);
    std::string detail;
    for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
      Rng mc(config.seed + 31 * (attempt + 1));
      const McEstimate mr = mc_sphere_average(t, {1.0, 0.0}, WeightedKind::k1, 100000, mc, tol);
      Rng mc2(config.seed + 77 * (attempt + 1));
      const McEstimate mh = mc_sphere_average(t, {0.0, 1.0}, WeightedKind::k1, 100000, mc2, tol);
      const double zr = std::abs(mr.mean - ric_exact) / std::max(mr.std_error, 1e-300);
      const double zh = std::abs(mh.mean - hsc_exact) / std::max(mh.std_error, 1e-300);
      detail = "z-scores " + fmt(zr) + ", " + fmt(zh);
      if (zr <= 3.0 && zh <= 3.0) return std::pair{true, detail};
    }
    return std::pair{false, detail + " (after retry)"};
  });

  // --- prop45 group -----------------------------------------------------------
  run_check(checks, filter, "prop45", "ei_line_matches_definition", [&] {
    const int n = 3;
    const UInvariantProfile prof = fs_profile();
    const MetricField field = u_invariant_metric(prof, n);
    const double r = 1.3;
    const Vector p = (Vector(n) << std::sqrt(r), 0.0, 0.0).finished();
    const CurvatureTensor t = chern_curvature(field, p, tol);
    const ABCComponents abc = u_invariant_abc(prof, r, tol);
    Vector e2 = Vector::Zero(n);
    e2(1) = 1.0;
    double worst = 0.0;
    for (const WeightPair w : {WeightPair{1.0, -1.0}, WeightPair{2.0, -0.7}}) {
      const double expected = (w.alpha * n / 2.0 + w.beta) * abc.c + w.alpha * abc.b;
      worst = std::max(worst, std::abs(weighted_orth_ricci(t, w, e2, WeightedKind::kKahler,
                                                           tol) -
                                       expected));
    }
    return std::pair{worst <= tol.differential,
                     "convention: definition; max error " + fmt(worst)};
  });

  run_check(checks, filter, "prop45", "e1_line_matches_orthogonal_reading", [&] {
    const int n = 3;
    const UInvariantProfile prof = fs_profile();
    const MetricField field = u_invariant_metric(prof, n);
    const double r = 1.3;
    const Vector p = (Vector(n) << std::sqrt(r), 0.0, 0.0).finished();
    const CurvatureTensor t = chern_curvature(field, p, tol);
    const ABCComponents abc = u_invariant_abc(prof, r, tol);
    Vector e1 = Vector::Zero(n);
    e1(0) = 1.0;
    const WeightPair w{1.0, -1.0};
    const double line_value = w.alpha * (n - 1) * abc.b + w.beta * abc.a;
    const double under_orth = weighted_orth_ricci(t, w, e1, WeightedKind::kKahler, tol,
                                                  WeightConvention::kOrthogonal);
    const double under_def =
        weighted_orth_ricci(t, w, e1, WeightedKind::kKahler, tol);
    const bool matches_orth = std::abs(under_orth - line_value) <= tol.differential;
    const bool differs_def = std::abs(under_def - line_value) > 0.1;
    return std::pair{matches_orth && differs_def,
                     "convention: alpha*Ric_perp + beta*HSC; orth residual " +
                         fmt(std::abs(under_orth - line_value)) + ", definition residual " +
                         fmt(std::abs(under_def - line_value))};
  });

  // --- iwasawa group -------------------------------------------------------------
  run_check(checks, filter, "iwasawa", "chern_flat", [&] {
    Rng local = rng.fork(8);
    const MetricField iwa = iwasawa_metric();
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const CurvatureTensor t =
          chern_curvature(iwa, random_domain_point(iwa, local, 2.0), tol);
      worst = std::max(worst, max_component(t));
    }
    return std::pair{worst <= tol.differential, "max |R| = " + fmt(worst)};
  });

  run_check(checks, filter, "iwasawa", "no_positive_cells_in_region", [&] {
    Rng local = rng.fork(9);
    const MetricField iwa = iwasawa_metric();
    const std::vector<Vector> pts = {random_domain_point(iwa, local, 2.0),
                                     random_domain_point(iwa, local, 2.0)};
    const std::vector<double> alphas = grid_axis(0.2, 2.0, 10);
    const std::vector<double> betas = grid_axis(-2.0, -0.1, 10);
    ConeScanOptions opts;
    opts.jobs = config.jobs;
    opts.positivity_tol = tol.positivity;
    opts.sphere.seed = config.seed;
    const BalancedObstructionReport rep = balanced_obstruction_audit(
        iwa, pts, alphas, betas, {WeightedKind::k1, WeightedKind::k2}, opts, tol);
    int positive = 0;
    int region = 0;
    for (const auto& entry : rep.results) {
      positive += entry.positive_region_cells;
      region += entry.region_cells;
    }
    return std::pair{rep.consistent && region > 0,
                     std::to_string(positive) + " positive cells of " +
                         std::to_string(region) + " in-region cells"};
  });

  // --- conditions group -------------------------------------------------------
  run_check(checks, filter, "conditions", "weight_condition_spot_values", [&] {
    const bool ok = projectivity_condition(1.0, -1.0).satisfied &&
                    !projectivity_condition(1.0, -1.5).satisfied &&
                    !projectivity_condition(1.0, 1.0).satisfied &&
                    hodge_vanishing_condition(1.0, -1.0, 2).satisfied &&
                    !hodge_vanishing_condition(1.0, -1.0, 1).satisfied &&
                    balanced_vanishing_condition(1.0, -1.0, 2).satisfied &&
                    !balanced_vanishing_condition(1.0, -2.0, 3).satisfied;
    return std::pair{ok, std::string("strict boundary handling verified")};
  });

  run_check(checks, filter, "conditions", "diameter_bound_value", [&] {
    const double v = diameter_bound(1.0, -0.5, 2, 1.0);
    const double expected = std::numbers::pi * std::sqrt(2.5);
    return std::pair{std::abs(v - expected) < 1e-10 && std::abs(v - 4.96729) < 1e-5,
                     "pi sqrt(2.5) = " + fmt(v)};
  });

  run_check(checks, filter, "conditions", "weight_inequality_consistency", [&] {
    Rng local = rng.fork(10);
    const MetricField fs = fubini_study_metric(2);
    const std::vector<Vector> pts = {random_domain_point(fs, local, 1.3)};
    SphereMinOptions sphere;
    sphere.seed = config.seed;
    const WeightInequalityReport rep =
        weight_inequality_audit(fs, pts, {1.0, -1.0}, sphere, tol);
    return std::pair{rep.hypothesis_met && rep.conclusion_holds && !rep.counterexample,
                     "min weighted " + fmt(rep.min_weighted) + ", combo " +
                         fmt(rep.weight_combination)};
  });

  // ---------------------------------------------------------------------------
  ReportNode& list = out.report.child("checks");
  int passed = 0;
  for (const CheckResult& c : checks) {
    ReportNode& item = list.list_item();
    item.put("group", c.group);
    item.put("name", c.name);
    item.put("pass", c.pass);
    item.put("detail", c.detail);
    if (c.pass) ++passed;
    out.ok = out.ok && c.pass;
  }
  ReportNode& summary = out.report.child("summary");
  summary.put("total", static_cast<long long>(checks.size()));
  summary.put("passed", passed);
  summary.put("failed", static_cast<long long>(checks.size()) - passed);
  return out;
}

ReportNode models_report() {
  ReportNode report;
  report.put("engine_version", kEngineVersion);
  ReportNode& list = report.child("models");
  for (const ModelSpec& spec : model_registry()) {
    ReportNode& item = list.list_item();
    item.put("name", spec.name);
    item.put("summary", spec.summary);
    std::string params;
    for (size_t i = 0; i < spec.parameters.size(); ++i) {
      if (i) params += ", ";
      params += spec.parameters[i];
    }
    item.put("parameters", params.empty() ? "(none)" : params);
  }
  return report;
}

}  // namespace curvkit

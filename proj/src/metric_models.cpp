#include "curvkit/metric_models.hpp"

#include <algorithm>
#include <cmath>

#include "curvkit/quadrature.hpp"

namespace curvkit {

double UInvariantProfile::dxi(double r) const {
  const double hv = h(r);
  const double dhv = dh(r);
  const double d2hv = d2h(r);
  return -dhv / hv - r * d2hv / hv + r * dhv * dhv / (hv * hv);
}

void UInvariantProfile::require_metric_valid(double r) const {
  const double fv = f(r);
  const double hv = h(r);
  if (!(fv > 0.0) || !(hv > 0.0)) {
    throw ProfileInvalid("profile '" + name + "' not metric-valid at r=" + std::to_string(r) +
                         " (f=" + std::to_string(fv) + ", h=" + std::to_string(hv) + ")");
  }
}

namespace {

double fd_scale(double r) { return std::max(1.0, std::abs(r)); }

double fd_d1(const std::function<double(double)>& f, double r) {
  const double h = 1e-3 * fd_scale(r);
  return (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h);
}

double fd_d2(const std::function<double(double)>& f, double r) {
  const double h = 1e-3 * fd_scale(r);
  return (-f(r - 2 * h) + 16 * f(r - h) - 30 * f(r) + 16 * f(r + h) - f(r + 2 * h)) /
         (12 * h * h);
}

double fd_d3(const std::function<double(double)>& f, double r) {
  const double h = 3e-3 * fd_scale(r);
  return (13 * (f(r - h) - f(r + h)) + 8 * (f(r + 2 * h) - f(r - 2 * h)) + f(r - 3 * h) -
          f(r + 3 * h)) /
         (8 * h * h * h);
}

}  // namespace

UInvariantProfile with_fd_derivatives(UInvariantProfile p) {
  if (!p.f) throw ProfileInvalid("profile '" + p.name + "' has no f");
  auto f = p.f;
  if (!p.df) p.df = [f](double r) { return fd_d1(f, r); };
  if (!p.d2f) p.d2f = [f](double r) { return fd_d2(f, r); };
  if (!p.d3f) p.d3f = [f](double r) { return fd_d3(f, r); };
  return p;
}

UInvariantProfile fs_profile() {
  UInvariantProfile p;
  p.name = "fs";
  p.f = [](double r) { return 1.0 / (1.0 + r); };
  p.df = [](double r) { return -1.0 / std::pow(1.0 + r, 2); };
  p.d2f = [](double r) { return 2.0 / std::pow(1.0 + r, 3); };
  p.d3f = [](double r) { return -6.0 / std::pow(1.0 + r, 4); };
  return p;
}

UInvariantProfile constant_profile(double c) {
  UInvariantProfile p;
  p.name = "constant";
  p.f = [c](double) { return c; };
  p.df = [](double) { return 0.0; };
  p.d2f = [](double) { return 0.0; };
  p.d3f = [](double) { return 0.0; };
  return p;
}

ABCComponents u_invariant_abc(const UInvariantProfile& profile, double r,
                              const Tolerances& tol, double r_min) {
  if (!(r > r_min)) {
    throw ProfileInvalid("u_invariant_abc: radial frame undefined at r <= " +
                         std::to_string(r_min));
  }
  profile.require_metric_valid(r);
  const double fv = profile.f(r);
  const double hv = profile.h(r);
  const double xiv = profile.xi(r);
  const double integral = integrate([&](double s) { return profile.h(s); }, 0.0, r,
                                    tol.quadrature_rel, tol.quadrature_abs);
  ABCComponents abc;
  abc.a = profile.dxi(r) / hv;
  const double rf2 = (r * fv) * (r * fv);
  abc.b = (r * hv - (1.0 - xiv) * integral) / rf2;
  abc.c = 2.0 * (integral - r * hv) / rf2;
  return abc;
}

const char* to_string(DivergenceVerdict v) {
  switch (v) {
    case DivergenceVerdict::kLikelyDivergent:
      return "likely_divergent";
    case DivergenceVerdict::kLikelyConvergent:
      return "likely_convergent";
    default:
      return "inconclusive";
  }
}

CompletenessReport lemma_completeness_report(const UInvariantProfile& profile, double r_max,
                                             const Tolerances& tol) {
  CompletenessReport report;
  // Positivity of f and h on {0} plus a log-spaced sample.
  report.f_positive = profile.f(0.0) > 0.0;
  report.h_positive = profile.h(0.0) > 0.0;
  const int n_samples = 240;
  const double lo = std::min(1e-8, r_max);
  for (int i = 0; i <= n_samples; ++i) {
    const double r = lo * std::pow(r_max / lo, static_cast<double>(i) / n_samples);
    if (!(profile.f(r) > 0.0)) report.f_positive = false;
    if (!(profile.h(r) > 0.0)) report.h_positive = false;
  }
  if (!report.f_positive || !report.h_positive) {
    report.divergence_heuristic = DivergenceVerdict::kInconclusive;
    return report;
  }

  // The completeness integrand sqrt(h/r) has an integrable r^{-1/2} head;
  // substitute r = u^2 to remove it.
  const auto head = [&](double u) { return 2.0 * std::sqrt(profile.h(u * u)); };
  const double head_cut = std::min(1.0, r_max);
  report.integral_estimate = integrate(head, 0.0, std::sqrt(head_cut), 1e-10, 1e-12);
  const auto integrand = [&](double r) { return std::sqrt(profile.h(r) / r); };
  if (r_max > head_cut) {
    report.integral_estimate += integrate(integrand, head_cut, r_max, 1e-10, 1e-12);
  }

  // Ratio test across the outermost decades of [., r_max].
  const int n_decades = std::min(6, static_cast<int>(std::floor(std::log10(r_max / lo))));
  if (n_decades < 2) {
    report.divergence_heuristic = DivergenceVerdict::kInconclusive;
    return report;
  }
  for (int j = n_decades - 1; j >= 0; --j) {
    const double hi = r_max / std::pow(10.0, j);
    report.decade_integrals.push_back(integrate(integrand, hi / 10.0, hi, 1e-10, 1e-12));
  }
  double ratio_product = 1.0;
  int n_ratios = 0;
  const int use = std::min<int>(3, static_cast<int>(report.decade_integrals.size()) - 1);
  for (int k = 0; k < use; ++k) {
    const auto& d = report.decade_integrals;
    ratio_product *= d[d.size() - 1 - k] / d[d.size() - 2 - k];
    ++n_ratios;
  }
  const double mean_ratio = std::pow(ratio_product, 1.0 / std::max(1, n_ratios));
  if (mean_ratio >= 0.98) {
    report.divergence_heuristic = DivergenceVerdict::kLikelyDivergent;
  } else if (mean_ratio <= 0.85) {
    report.divergence_heuristic = DivergenceVerdict::kLikelyConvergent;
  } else {
    report.divergence_heuristic = DivergenceVerdict::kInconclusive;
  }
  return report;
}

// Built-in fields -------------------------------------------------------------

MetricField flat_metric(int n) {
  if (n < 1) throw ConfigError("flat: n must be >= 1");
  MetricField field;
  field.dim = n;
  field.name = "flat";
  field.kahler_expected = true;
  field.balanced_expected = true;
  field.in_domain = [](const Vector&) { return true; };
  field.evaluate = [n](const Vector&) { return Matrix::Identity(n, n); };
  field.analytic_jet = [n](const Vector&) {
    JetOfMetric jet;
    jet.g = Matrix::Identity(n, n);
    jet.dg.assign(n, Matrix::Zero(n, n));
    jet.ddg.assign(n, std::vector<Matrix>(n, Matrix::Zero(n, n)));
    return jet;
  };
  return field;
}

MetricField hopf_metric(int n) {
  if (n < 2) throw ConfigError("hopf: n must be >= 2");
  MetricField field;
  field.dim = n;
  field.name = "hopf";
  field.kahler_expected = false;
  field.in_domain = [](const Vector& z) { return z.squaredNorm() > 0.0; };
  field.evaluate = [n](const Vector& z) {
    const double r = z.squaredNorm();
    if (!(r > 0.0)) throw ChartDomainViolation("hopf: metric undefined at z = 0");
    return Matrix((4.0 / r) * Matrix::Identity(n, n));
  };
  field.analytic_jet = [n](const Vector& z) {
    const double r = z.squaredNorm();
    if (!(r > 0.0)) throw ChartDomainViolation("hopf: metric undefined at z = 0");
    JetOfMetric jet;
    jet.g = (4.0 / r) * Matrix::Identity(n, n);
    jet.dg.resize(n);
    jet.ddg.assign(n, std::vector<Matrix>(n));
    for (int a = 0; a < n; ++a) {
      jet.dg[a] = (-4.0 * std::conj(z(a)) / (r * r)) * Matrix::Identity(n, n);
      for (int b = 0; b < n; ++b) {
        const cdouble coeff =
            -4.0 * ((a == b ? r : 0.0) - 2.0 * std::conj(z(a)) * z(b)) / (r * r * r);
        jet.ddg[a][b] = coeff * Matrix::Identity(n, n);
      }
    }
    return jet;
  };
  return field;
}

cdouble hopf_curvature_closed_form(const Vector& z, int i, int j, int k, int l) {
  const double r = z.squaredNorm();
  if (!(r > 0.0)) throw ChartDomainViolation("hopf closed form: undefined at z = 0");
  if (k != l) return 0.0;
  const cdouble num = (i == j ? r : 0.0) - z(j) * std::conj(z(i));
  return 4.0 * num / (r * r * r);
}

MetricField u_invariant_metric(const UInvariantProfile& profile, int n) {
  if (n < 1) throw ConfigError("u_invariant: n must be >= 1");
  if (!profile.df || !profile.d2f || !profile.d3f) {
    return u_invariant_metric(with_fd_derivatives(profile), n);
  }
  MetricField field;
  field.dim = n;
  field.name = "u_invariant(" + profile.name + ")";
  field.kahler_expected = true;
  field.balanced_expected = true;
  field.in_domain = [](const Vector&) { return true; };
  field.evaluate = [profile, n](const Vector& z) {
    const double r = z.squaredNorm();
    profile.require_metric_valid(r);
    Matrix g = profile.f(r) * Matrix::Identity(n, n);
    g += profile.df(r) * (z.conjugate() * z.transpose());
    return g;
  };
  field.analytic_jet = [profile, n](const Vector& z) {
    const double r = z.squaredNorm();
    profile.require_metric_valid(r);
    const double f1 = profile.df(r);
    const double f2 = profile.d2f(r);
    const double f3 = profile.d3f(r);
    const Matrix outer = z.conjugate() * z.transpose();  // (i,j) -> zbar_i z_j
    const Matrix eye = Matrix::Identity(n, n);

    JetOfMetric jet;
    jet.g = profile.f(r) * eye + f1 * outer;
    jet.dg.resize(n);
    jet.ddg.assign(n, std::vector<Matrix>(n));
    for (int a = 0; a < n; ++a) {
      const cdouble za_bar = std::conj(z(a));
      Matrix d = f1 * za_bar * eye + f2 * za_bar * outer;
      d.col(a) += f1 * z.conjugate();
      jet.dg[a] = d;
      for (int b = 0; b < n; ++b) {
        const cdouble zab = za_bar * z(b);
        Matrix dd = (f1 * (a == b ? 1.0 : 0.0) + f2 * zab) * eye;
        dd += (f2 * (a == b ? 1.0 : 0.0) + f3 * zab) * outer;
        dd.row(b) += f2 * za_bar * z.transpose();
        dd.col(a) += f2 * z(b) * z.conjugate();
        dd(b, a) += f1;
        jet.ddg[a][b] = dd;
      }
    }
    return jet;
  };
  return field;
}

MetricField fubini_study_metric(int n) {
  MetricField field = u_invariant_metric(fs_profile(), n);
  field.name = "fubini_study";
  return field;
}

MetricField iwasawa_metric() {
  const int n = 3;
  MetricField field;
  field.dim = n;
  field.name = "iwasawa";
  field.kahler_expected = false;
  field.balanced_expected = true;
  field.in_domain = [](const Vector&) { return true; };
  field.evaluate = [n](const Vector& z) {
    Matrix g = Matrix::Identity(n, n);
    g(1, 1) += std::norm(z(0));
    g(1, 2) = -z(0);
    g(2, 1) = -std::conj(z(0));
    return g;
  };
  field.analytic_jet = [n](const Vector& z) {
    JetOfMetric jet;
    jet.g = Matrix::Identity(n, n);
    jet.g(1, 1) += std::norm(z(0));
    jet.g(1, 2) = -z(0);
    jet.g(2, 1) = -std::conj(z(0));
    jet.dg.assign(n, Matrix::Zero(n, n));
    jet.dg[0](1, 1) = std::conj(z(0));
    jet.dg[0](1, 2) = -1.0;
    jet.ddg.assign(n, std::vector<Matrix>(n, Matrix::Zero(n, n)));
    jet.ddg[0][0](1, 1) = 1.0;
    return jet;
  };
  return field;
}

// Registry --------------------------------------------------------------------

std::vector<ModelSpec> model_registry() {
  return {
      {"flat", "Flat metric on C^n", {"n"}},
      {"hopf", "Hopf metric 4 delta_ij / |z|^2 on C^n \\ {0}", {"n"}},
      {"fubini_study", "U(n)-invariant metric with f = 1/(1+r)", {"n"}},
      {"u_invariant", "U(n)-invariant metric for a named profile", {"n", "profile (fs|constant)", "c"}},
      {"iwasawa", "Left-invariant balanced metric on the Iwasawa threefold", {}},
  };
}

namespace {

int required_n(const std::map<std::string, double>& params, const std::string& model) {
  auto it = params.find("n");
  if (it == params.end()) throw ConfigError("model '" + model + "': missing parameter 'n'");
  const double v = it->second;
  if (v < 1.0 || v != std::floor(v)) {
    throw ConfigError("model '" + model + "': parameter 'n' must be a positive integer");
  }
  return static_cast<int>(v);
}

}  // namespace

MetricField make_model(const std::string& name, const std::map<std::string, double>& params,
                       const std::string& profile_name) {
  if (name == "flat") return flat_metric(required_n(params, name));
  if (name == "hopf") return hopf_metric(required_n(params, name));
  if (name == "fubini_study") return fubini_study_metric(required_n(params, name));
  if (name == "u_invariant") {
    const int n = required_n(params, name);
    std::string prof = profile_name.empty() ? "fs" : profile_name;
    if (prof == "fs") return u_invariant_metric(fs_profile(), n);
    if (prof == "constant") {
      const double c = params.count("c") ? params.at("c") : 1.0;
      if (!(c > 0.0)) throw ConfigError("u_invariant: parameter 'c' must be > 0");
      return u_invariant_metric(constant_profile(c), n);
    }
    throw ConfigError("u_invariant: unknown profile '" + prof + "'");
  }
  if (name == "iwasawa") return iwasawa_metric();
  throw ConfigError("unknown model '" + name + "'");
}

}  // namespace curvkit

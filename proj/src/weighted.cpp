#include "curvkit/weighted.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace curvkit {

RicciKind ricci_kind_of(WeightedKind kind) {
  switch (kind) {
    case WeightedKind::k2:
      return RicciKind::k2;
    case WeightedKind::k3:
      return RicciKind::k3;
    case WeightedKind::k4:
      return RicciKind::k4;
    default:
      return RicciKind::k1;  // k1 and kKahler
  }
}

namespace {

Vector normalize_g(const Matrix& g, const Vector& x) {
  return x / std::sqrt(herm_quad(g, x));
}

Vector canonical_phase(const Vector& x) {
  int imax = 0;
  for (int i = 1; i < x.size(); ++i) {
    if (std::abs(x(i)) > std::abs(x(imax))) imax = i;
  }
  const cdouble pivot = x(imax);
  if (std::abs(pivot) == 0.0) return x;
  return x * (std::conj(pivot) / std::abs(pivot));
}

/// Precomputed direction functional alpha * Rayleigh(Ric) + beta_eff * HSC.
struct DirectionFunctional {
  const CurvatureTensor* t = nullptr;
  Matrix ric;
  double alpha = 0.0;
  double beta_eff = 0.0;

  double operator()(const Vector& x) const {
    const double q = herm_quad(t->g, x);
    double value = 0.0;
    if (alpha != 0.0) value += alpha * herm_pair(ric, x, x).real() / q;
    if (beta_eff != 0.0) {
      value += beta_eff * curvature_quartic(*t, x, x, x, x).real() / (q * q);
    }
    return value;
  }
};

DirectionFunctional make_functional(const CurvatureTensor& t, const WeightPair& w,
                                    WeightedKind kind, WeightConvention convention,
                                    const Tolerances& tol, bool* kahler_warning) {
  if (kind == WeightedKind::kKahler) {
    const auto rep = kahler_like_check(t, tol.differential);
    if (!rep.pass && kahler_warning) *kahler_warning = true;
  }
  DirectionFunctional f;
  f.t = &t;
  f.ric = ricci(t, ricci_kind_of(kind));
  f.alpha = w.alpha;
  f.beta_eff = (convention == WeightConvention::kOrthogonal) ? (w.beta - w.alpha) : w.beta;
  return f;
}

/// Complex g-orthonormal complement of the g-unit vector x.
std::vector<Vector> g_complement(const Matrix& g, const Vector& x) {
  const Matrix frame = complete_unitary_frame(g, x);
  std::vector<Vector> out;
  out.reserve(frame.cols() - 1);
  for (int j = 1; j < frame.cols(); ++j) out.push_back(frame.col(j));
  return out;
}

struct LocalRun {
  double value = 0.0;
  Vector x;
  bool converged = false;
};

LocalRun local_minimize(const DirectionFunctional& f, const Vector& x0,
                        const SphereMinOptions& opts) {
  const Matrix& g = f.t->g;
  Vector x = normalize_g(g, x0);
  double fx = f(x);
  const int n = static_cast<int>(x.size());
  if (n == 1) return {fx, x, true};

  const int dim = 2 * (n - 1);
  const double h = 1e-6;
  const cdouble iu(0.0, 1.0);
  double step = 0.25;
  bool converged = false;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const auto chart = g_complement(g, x);
    const double scale = 1.0 + std::abs(fx);

    RealVector grad(dim);
    for (int a = 0; a < n - 1; ++a) {
      for (int im = 0; im < 2; ++im) {
        const Vector dir = (im ? iu : cdouble(1.0)) * chart[a];
        const double fp = f(normalize_g(g, x + h * dir));
        const double fm = f(normalize_g(g, x - h * dir));
        grad(2 * a + im) = (fp - fm) / (2.0 * h);
      }
    }
    const double gnorm = grad.norm();
    if (gnorm <= opts.grad_tol * scale || gnorm <= 1e-7 * scale) {
      converged = true;
      break;
    }

    Vector d = Vector::Zero(n);
    for (int a = 0; a < n - 1; ++a) {
      d -= grad(2 * a) * chart[a];
      d -= grad(2 * a + 1) * (iu * chart[a]);
    }

    // Armijo backtracking; the directional derivative along d is -gnorm^2.
    double trial = step;
    double f_trial = fx;
    bool accepted = false;
    for (int ls = 0; ls < 45; ++ls) {
      f_trial = f(normalize_g(g, x + trial * d));
      if (f_trial <= fx - 1e-4 * trial * gnorm * gnorm) {
        accepted = true;
        break;
      }
      trial *= 0.5;
    }
    if (!accepted) {
      // f-differences hit rounding before the gradient criterion; accept if
      // the remaining gradient is within the FD noise band.
      converged = gnorm <= 1e-5 * scale;
      break;
    }

    // Parabolic refinement of the accepted step; a bare first-decrease rule
    // overshoots isotropic bowls and zigzags.
    double best_t = trial;
    double best_f = f_trial;
    {
      const double t_half = 0.5 * trial;
      const double f_half = f(normalize_g(g, x + t_half * d));
      if (f_half < best_f) {
        best_t = t_half;
        best_f = f_half;
      }
      const double curv = fx - 2.0 * f_half + f_trial;
      if (curv > 0.0) {
        double t_star = t_half * (3.0 * fx - 4.0 * f_half + f_trial) / (2.0 * curv);
        t_star = std::clamp(t_star, 0.1 * t_half, 2.0 * trial);
        const double f_star = f(normalize_g(g, x + t_star * d));
        if (f_star < best_f) {
          best_t = t_star;
          best_f = f_star;
        }
      }
    }
    x = normalize_g(g, x + best_t * d);
    fx = best_f;
    // Step growth is uncapped so the scheme adapts to arbitrarily small
    // curvature scales; the retraction keeps oversized trials on the sphere
    // and the Armijo test shrinks them back.
    step = 2.0 * best_t;
  }
  return {fx, x, converged};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

SphereMinResult run_multistart(const CurvatureTensor& t, const DirectionFunctional& f,
                               const SphereMinOptions& opts, const Tolerances& tol) {
  const int n = t.dim();
  const Matrix frame = unitary_frame(t.g, tol);
  const int n_random = opts.n_starts > 0 ? opts.n_starts : std::max(1, 8 * (n - 1));
  Rng rng(opts.seed);

  std::vector<Vector> starts;
  starts.reserve(n_random + 2);
  if (f.alpha != 0.0 || f.beta_eff != 0.0) {
    // Spectral starts: extreme eigenvectors of the Ricci Rayleigh pencil.
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(f.ric.conjugate(),
                                                        t.g.conjugate());
    if (es.info() == Eigen::Success && n >= 1) {
      starts.push_back(es.eigenvectors().col(0));
      starts.push_back(es.eigenvectors().col(n - 1));
    }
  }
  for (int s = 0; s < n_random; ++s) {
    starts.push_back(frame * rng.complex_normal_vector(n).normalized());
  }

  SphereMinResult result;
  result.n_starts = static_cast<int>(starts.size());
  bool any_converged = false;
  bool have_best = false;
  for (const Vector& x0 : starts) {
    const LocalRun run = local_minimize(f, x0, opts);
    result.start_values.push_back(run.value);
    any_converged = any_converged || run.converged;
    if (!have_best || run.value < result.min_value) {
      have_best = true;
      result.min_value = run.value;
      result.argmin = run.x;
      result.converged = run.converged;
    }
  }
  if (!any_converged) {
    throw OptimizationDivergence("min_over_directions: no start converged");
  }
  result.argmin = canonical_phase(normalize_g(t.g, result.argmin));
  return result;
}

}  // namespace

double weighted_orth_ricci(const CurvatureTensor& t, const WeightPair& w, const Vector& x,
                           WeightedKind kind, const Tolerances& tol,
                           WeightConvention convention, bool* kahler_warning) {
  if (x.norm() == 0.0) throw ZeroVector("weighted_orth_ricci: zero direction");
  if (!std::isfinite(w.alpha) || !std::isfinite(w.beta)) {
    throw CurvkitError("weighted_orth_ricci: weights must be finite");
  }
  const DirectionFunctional f = make_functional(t, w, kind, convention, tol, kahler_warning);
  return f(x);
}

SphereMinResult min_over_directions(const CurvatureTensor& t, const WeightPair& w,
                                    WeightedKind kind, const SphereMinOptions& opts,
                                    const Tolerances& tol) {
  const DirectionFunctional f =
      make_functional(t, w, kind, opts.convention, tol, nullptr);
  return run_multistart(t, f, opts, tol);
}

SphereMinResult min_over_directions(const MetricField& field, const Vector& p,
                                    const WeightPair& w, WeightedKind kind,
                                    const SphereMinOptions& opts, const Tolerances& tol) {
  const CurvatureTensor t = chern_curvature(field, p, tol);
  return min_over_directions(t, w, kind, opts, tol);
}

SphereMinResult max_over_directions(const CurvatureTensor& t, const WeightPair& w,
                                    WeightedKind kind, const SphereMinOptions& opts,
                                    const Tolerances& tol) {
  SphereMinResult res =
      min_over_directions(t, {-w.alpha, -w.beta}, kind, opts, tol);
  res.min_value = -res.min_value;
  for (double& v : res.start_values) v = -v;
  return res;
}

const char* to_string(ConeClass c) {
  switch (c) {
    case ConeClass::kPositive:
      return "positive";
    case ConeClass::kNegative:
      return "negative";
    case ConeClass::kIndefinite:
      return "indefinite";
    default:
      return "degenerate";
  }
}

int ConeMap::count(ConeClass c) const {
  int total = 0;
  for (const auto& cell : cells) {
    if (cell.cls == c) ++total;
  }
  return total;
}

ConeMap cone_scan(const MetricField& field, const std::vector<Vector>& points,
                  const std::vector<double>& alphas, const std::vector<double>& betas,
                  WeightedKind kind, const ConeScanOptions& opts, const Tolerances& tol) {
  if (points.empty()) throw ConfigError("cone_scan: no sample points");
  ConeMap map;
  map.alphas = alphas;
  map.betas = betas;
  if (alphas.empty() || betas.empty()) return map;

  std::vector<CurvatureTensor> tensors;
  tensors.reserve(points.size());
  for (const Vector& p : points) tensors.push_back(chern_curvature(field, p, tol));

  const size_t n_cells = alphas.size() * betas.size();
  map.cells.resize(n_cells);
  const double band = opts.positivity_tol;

  auto run_cell = [&](size_t idx) {
    const size_t ai = idx / betas.size();
    const size_t bi = idx % betas.size();
    ConeCell cell;
    cell.alpha = alphas[ai];
    cell.beta = betas[bi];
    const WeightPair w{cell.alpha, cell.beta};

    double min_all = 0.0, max_all = 0.0;
    bool first = true;
    bool near_zero_extremum = false;
    for (size_t pi = 0; pi < points.size(); ++pi) {
      SphereMinOptions sphere = opts.sphere;
      sphere.seed = mix_seed(opts.sphere.seed, idx, pi);
      const SphereMinResult lo = min_over_directions(tensors[pi], w, kind, sphere, tol);
      sphere.seed = mix_seed(opts.sphere.seed, idx, pi) ^ 0x5851f42d4c957f2dULL;
      const SphereMinResult hi = max_over_directions(tensors[pi], w, kind, sphere, tol);
      if (first || lo.min_value < min_all) {
        min_all = lo.min_value;
        cell.witness_point = static_cast<int>(pi);
        cell.witness_direction = lo.argmin;
      }
      max_all = first ? hi.min_value : std::max(max_all, hi.min_value);
      first = false;
      near_zero_extremum = near_zero_extremum || std::abs(lo.min_value) <= band ||
                           std::abs(hi.min_value) <= band;
    }
    cell.min_value = min_all;
    cell.max_value = max_all;
    if (min_all > band) {
      cell.cls = ConeClass::kPositive;
    } else if (max_all < -band) {
      cell.cls = ConeClass::kNegative;
    } else if (near_zero_extremum) {
      cell.cls = ConeClass::kDegenerate;
    } else {
      cell.cls = ConeClass::kIndefinite;
    }
    map.cells[idx] = std::move(cell);
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t idx = 0; idx < n_cells; ++idx) run_cell(idx);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (size_t idx = next.fetch_add(1); idx < n_cells; idx = next.fetch_add(1)) {
          run_cell(idx);
        }
      });
    }
    for (auto& th : workers) th.join();
  }
  return map;
}

double sphere_average_ricci(const CurvatureTensor& t, RicciKind kind, const Tolerances& tol) {
  const Matrix ric = ricci(t, kind);
  const cdouble tr = (ric * t.g_inv).trace();
  if (std::abs(tr.imag()) > tol.imaginary * std::max(1.0, std::abs(tr.real()))) {
    throw NonRealResult("sphere_average_ricci: non-real trace");
  }
  return tr.real() / t.dim();
}

double sphere_average_hsc(const CurvatureTensor& t, const Tolerances& tol) {
  const int n = t.dim();
  return (scalar_curvature(t, tol) + altered_scalar_curvature(t, tol)) /
         (static_cast<double>(n) * (n + 1));
}

double sphere_average_hsc(const CurvatureTensor& t, const Subspace& sigma,
                          const Tolerances& tol) {
  const int p = sigma.dim();
  return (k_scalar(t, sigma, tol) + altered_k_scalar(t, sigma, tol)) /
         (static_cast<double>(p) * (p + 1));
}

McEstimate mc_sphere_average(const CurvatureTensor& t, const WeightPair& w,
                             WeightedKind kind, int n_samples, Rng& rng,
                             const Tolerances& tol) {
  const DirectionFunctional f =
      make_functional(t, w, kind, WeightConvention::kDefinition, tol, nullptr);
  const Matrix frame = unitary_frame(t.g, tol);
  const int n = t.dim();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const Vector x = frame * rng.complex_normal_vector(n).normalized();
    const double v = f(x);
    sum += v;
    sum_sq += v * v;
  }
  McEstimate out;
  out.n_samples = n_samples;
  out.mean = sum / n_samples;
  const double var = std::max(0.0, sum_sq / n_samples - out.mean * out.mean);
  out.std_error = std::sqrt(var / n_samples);
  return out;
}

AverageIdentityReport average_identity_audit(const CurvatureTensor& t, const WeightPair& w,
                                             const Tolerances& tol) {
  const int n = t.dim();
  AverageIdentityReport rep;
  rep.kahler_like = kahler_like_check(t, tol.differential).pass;
  const double avg_ric = sphere_average_ricci(t, RicciKind::k1, tol);
  const double avg_hsc = sphere_average_hsc(t, tol);
  rep.lhs = w.alpha * avg_ric + w.beta * avg_hsc;

  const double scal_c = scalar_curvature(t, tol);
  const double coef = (w.alpha * (n + 1) + 2.0 * w.beta) / (2.0 * n * (n + 1));
  rep.rhs_chern = coef * scal_c;
  rep.rhs_twice_chern = coef * 2.0 * scal_c;
  rep.residual_chern = std::abs(rep.lhs - rep.rhs_chern);
  rep.residual_twice_chern = std::abs(rep.lhs - rep.rhs_twice_chern);

  const double close_tol = 1e-8 * std::max(1.0, std::abs(rep.lhs));
  const bool c1 = rep.residual_chern <= close_tol;
  const bool c2 = rep.residual_twice_chern <= close_tol;
  rep.closes = c1 && c2 ? "both" : c1 ? "chern" : c2 ? "twice_chern" : "neither";
  return rep;
}

WeightInequalityReport weight_inequality_audit(const MetricField& field,
                                               const std::vector<Vector>& points,
                                               const WeightPair& w,
                                               const SphereMinOptions& opts,
                                               const Tolerances& tol) {
  WeightInequalityReport rep;
  const int n = field.dim;
  rep.weight_combination = w.alpha * (n + 1) + 2.0 * w.beta;

  bool first = true;
  Rng rng(opts.seed);
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const CurvatureTensor t = chern_curvature(field, points[pi], tol);
    SphereMinOptions sphere = opts;
    sphere.seed = mix_seed(opts.seed, pi, 0);
    const SphereMinResult lo =
        min_over_directions(t, w, WeightedKind::kKahler, sphere, tol);
    rep.min_weighted = first ? lo.min_value : std::min(rep.min_weighted, lo.min_value);

    const Matrix frame = unitary_frame(t.g, tol);
    const Tensor4 rf = frame_components(t, frame);
    // Coordinate differences plus random weights probe the QOBC form.
    for (int a = 0; a < n; ++a) {
      RealVector v = RealVector::Zero(n);
      v(a) = 1.0;
      const double q = qobc_numerator(rf, v) / v.squaredNorm();
      rep.min_qobc = first && a == 0 ? q : std::min(rep.min_qobc, q);
    }
    for (int s = 0; s < 40; ++s) {
      RealVector v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.normal();
      if (v.norm() == 0.0) continue;
      const double q = qobc_numerator(rf, v) / v.squaredNorm();
      rep.min_qobc = std::min(rep.min_qobc, q);
    }
    first = false;
  }

  const double band = tol.positivity;
  rep.hypothesis_met = rep.min_weighted >= -band && rep.min_qobc >= -band;
  rep.conclusion_holds = rep.weight_combination >= -band;
  rep.counterexample = rep.hypothesis_met && !rep.conclusion_holds;
  return rep;
}

}  // namespace curvkit

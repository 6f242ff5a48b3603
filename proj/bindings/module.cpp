#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvkit/config.hpp"
#include "curvkit/metric_models.hpp"
#include "curvkit/runner.hpp"
#include "curvkit/theorem_audit.hpp"
#include "curvkit/weighted.hpp"

namespace py = pybind11;
using namespace curvkit;

namespace {

WeightedKind kind_from_arg(const py::object& kind) {
  if (py::isinstance<py::str>(kind)) {
    const std::string s = kind.cast<std::string>();
    if (s == "kahler") return WeightedKind::kKahler;
    throw ConfigError("kind must be 1..4 or 'kahler'");
  }
  const int k = kind.cast<int>();
  if (k < 1 || k > 4) throw ConfigError("kind must be 1..4 or 'kahler'");
  return static_cast<WeightedKind>(k);
}

}  // namespace

PYBIND11_MODULE(_curvkit, m) {
  m.doc() = "Chern curvature computations and weighted orthogonal Ricci "
            "positivity analysis for Hermitian metric models";
  m.attr("__version__") = kEngineVersion;

  py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite");
  py::register_exception<ChartDomainViolation>(m, "ChartDomainViolation");
  py::register_exception<ProfileInvalid>(m, "ProfileInvalid");
  py::register_exception<ZeroVector>(m, "ZeroVector");
  py::register_exception<ConfigError>(m, "ConfigurationError");
  py::register_exception<NotEinstein>(m, "NotEinstein");
  py::register_exception<InvalidRegime>(m, "InvalidRegime");

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("algebraic", &Tolerances::algebraic)
      .def_readwrite("differential", &Tolerances::differential)
      .def_readwrite("positivity", &Tolerances::positivity)
      .def_readwrite("fd_step", &Tolerances::fd_step)
      .def_readwrite("oracle_tol", &Tolerances::oracle_tol)
      .def_readwrite("ke_tol", &Tolerances::ke_tol);

  py::class_<MetricField>(m, "MetricField")
      .def_property_readonly("dim", [](const MetricField& f) { return f.dim; })
      .def_property_readonly("name", [](const MetricField& f) { return f.name; })
      .def_property_readonly("kahler_expected",
                             [](const MetricField& f) { return f.kahler_expected; })
      .def_property_readonly("balanced_expected",
                             [](const MetricField& f) { return f.balanced_expected; })
      .def("evaluate", [](const MetricField& f, const Vector& p) { return f.evaluate(p); })
      .def("in_domain", [](const MetricField& f, const Vector& p) {
        return !f.in_domain || f.in_domain(p);
      });

  m.def("flat", &flat_metric, py::arg("n"));
  m.def("hopf", &hopf_metric, py::arg("n"));
  m.def("fubini_study", &fubini_study_metric, py::arg("n"));
  m.def("iwasawa", &iwasawa_metric);
  m.def(
      "u_invariant",
      [](const std::function<double(double)>& f, int n, const std::string& name) {
        UInvariantProfile profile;
        profile.name = name;
        profile.f = f;
        return u_invariant_metric(with_fd_derivatives(profile), n);
      },
      py::arg("f"), py::arg("n"), py::arg("name") = "custom",
      "U(n)-invariant metric from a radial profile f(r); derivatives are "
      "finite-differenced");
  m.def(
      "make_model",
      [](const std::string& name, const std::map<std::string, double>& params,
         const std::string& profile) { return make_model(name, params, profile); },
      py::arg("name"), py::arg("params") = std::map<std::string, double>{},
      py::arg("profile") = "");
  m.def("model_names", [] {
    std::vector<std::string> names;
    for (const auto& spec : model_registry()) names.push_back(spec.name);
    return names;
  });

  m.def("hopf_curvature_closed_form", &hopf_curvature_closed_form, py::arg("z"),
        py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"));
  m.def(
      "u_invariant_abc",
      [](const std::function<double(double)>& f, double r) {
        UInvariantProfile profile;
        profile.f = f;
        const ABCComponents abc = u_invariant_abc(with_fd_derivatives(profile), r);
        return py::make_tuple(abc.a, abc.b, abc.c);
      },
      py::arg("f"), py::arg("r"),
      "Frame curvature components (A, B, C) of the U(n)-invariant metric");
  m.def("fs_abc", [](double r) {
    const ABCComponents abc = u_invariant_abc(fs_profile(), r);
    return py::make_tuple(abc.a, abc.b, abc.c);
  });

  py::class_<CurvatureTensor>(m, "CurvatureTensor")
      .def_property_readonly("dim", &CurvatureTensor::dim)
      .def_property_readonly("g", [](const CurvatureTensor& t) { return t.g; })
      .def_property_readonly("g_inv", [](const CurvatureTensor& t) { return t.g_inv; })
      .def_property_readonly("point", [](const CurvatureTensor& t) { return t.point; })
      .def("component", &CurvatureTensor::at, py::arg("i"), py::arg("j"), py::arg("k"),
           py::arg("l"));

  m.def("chern_curvature",
        [](const MetricField& field, const Vector& p) { return chern_curvature(field, p); },
        py::arg("field"), py::arg("point"));
  m.def(
      "ricci",
      [](const CurvatureTensor& t, int kind) {
        if (kind < 1 || kind > 4) throw ConfigError("ricci kind must be 1..4");
        return ricci(t, static_cast<RicciKind>(kind));
      },
      py::arg("tensor"), py::arg("kind") = 1);
  m.def("scalar_curvature",
        [](const CurvatureTensor& t) { return scalar_curvature(t); });
  m.def("altered_scalar_curvature",
        [](const CurvatureTensor& t) { return altered_scalar_curvature(t); });
  m.def("hsc", [](const CurvatureTensor& t, const Vector& x) { return hsc(t, x); },
        py::arg("tensor"), py::arg("direction"));
  m.def("kahler_like_check",
        [](const CurvatureTensor& t, double tol) {
          const KahlerLikeReport rep = kahler_like_check(t, tol);
          return py::make_tuple(rep.pass, rep.max_violation);
        },
        py::arg("tensor"), py::arg("tol") = 1e-7);
  m.def("invert_hermitian", [](const Matrix& g) { return invert_hermitian(g); });
  m.def("unitary_frame", [](const Matrix& g) { return unitary_frame(g); });
  m.def("constant_hsc_tensor",
        [](const Matrix& g, double c) { return constant_hsc_tensor(g, c); }, py::arg("g"),
        py::arg("c"));
  m.def("qobc_weitzenbock",
        [](const CurvatureTensor& t, const Matrix& rho) { return qobc_weitzenbock(t, rho); });
  m.def("qobc_frame",
        [](const CurvatureTensor& t, const Matrix& frame, const RealVector& v) {
          return qobc_frame(t, frame, v);
        });
  m.def("k_scalar", [](const CurvatureTensor& t, const Matrix& basis) {
    return k_scalar(t, Subspace{basis});
  });
  m.def("altered_k_scalar", [](const CurvatureTensor& t, const Matrix& basis) {
    return altered_k_scalar(t, Subspace{basis});
  });

  m.def(
      "weighted_orth_ricci",
      [](const CurvatureTensor& t, double alpha, double beta, const Vector& x,
         const py::object& kind, bool orthogonal_convention) {
        return weighted_orth_ricci(t, {alpha, beta}, x, kind_from_arg(kind), {},
                                   orthogonal_convention ? WeightConvention::kOrthogonal
                                                         : WeightConvention::kDefinition);
      },
      py::arg("tensor"), py::arg("alpha"), py::arg("beta"), py::arg("direction"),
      py::arg("kind") = 1, py::arg("orthogonal_convention") = false);

  py::class_<SphereMinResult>(m, "SphereMinResult")
      .def_readonly("min_value", &SphereMinResult::min_value)
      .def_readonly("argmin", &SphereMinResult::argmin)
      .def_readonly("n_starts", &SphereMinResult::n_starts)
      .def_readonly("converged", &SphereMinResult::converged)
      .def_readonly("start_values", &SphereMinResult::start_values);

  m.def(
      "min_over_directions",
      [](const CurvatureTensor& t, double alpha, double beta, const py::object& kind,
         std::uint64_t seed, int n_starts) {
        SphereMinOptions opts;
        opts.seed = seed;
        opts.n_starts = n_starts;
        return min_over_directions(t, {alpha, beta}, kind_from_arg(kind), opts);
      },
      py::arg("tensor"), py::arg("alpha"), py::arg("beta"), py::arg("kind") = 1,
      py::arg("seed") = 12345, py::arg("n_starts") = 0);
  m.def(
      "max_over_directions",
      [](const CurvatureTensor& t, double alpha, double beta, const py::object& kind,
         std::uint64_t seed, int n_starts) {
        SphereMinOptions opts;
        opts.seed = seed;
        opts.n_starts = n_starts;
        return max_over_directions(t, {alpha, beta}, kind_from_arg(kind), opts);
      },
      py::arg("tensor"), py::arg("alpha"), py::arg("beta"), py::arg("kind") = 1,
      py::arg("seed") = 12345, py::arg("n_starts") = 0);

  m.def("sphere_average_ricci",
        [](const CurvatureTensor& t) { return sphere_average_ricci(t); });
  m.def("sphere_average_hsc",
        [](const CurvatureTensor& t) { return sphere_average_hsc(t); });
  m.def(
      "average_identity_audit",
      [](const CurvatureTensor& t, double alpha, double beta) {
        const AverageIdentityReport rep = average_identity_audit(t, {alpha, beta});
        py::dict out;
        out["lhs"] = rep.lhs;
        out["rhs_chern"] = rep.rhs_chern;
        out["rhs_twice_chern"] = rep.rhs_twice_chern;
        out["residual_chern"] = rep.residual_chern;
        out["residual_twice_chern"] = rep.residual_twice_chern;
        out["closes"] = rep.closes;
        out["kahler_like"] = rep.kahler_like;
        return out;
      },
      py::arg("tensor"), py::arg("alpha"), py::arg("beta"));

  m.def(
      "cone_scan",
      [](const MetricField& field, const std::vector<Vector>& points,
         const std::vector<double>& alphas, const std::vector<double>& betas,
         const py::object& kind, std::uint64_t seed, int jobs) {
        ConeScanOptions opts;
        opts.jobs = jobs;
        opts.sphere.seed = seed;
        const ConeMap map = cone_scan(field, points, alphas, betas, kind_from_arg(kind), opts);
        py::list cells;
        for (const ConeCell& cell : map.cells) {
          py::dict d;
          d["alpha"] = cell.alpha;
          d["beta"] = cell.beta;
          d["classification"] = to_string(cell.cls);
          d["min_value"] = cell.min_value;
          d["max_value"] = cell.max_value;
          d["witness_point"] = cell.witness_point;
          cells.append(d);
        }
        return cells;
      },
      py::arg("field"), py::arg("points"), py::arg("alphas"), py::arg("betas"),
      py::arg("kind") = 1, py::arg("seed") = 42, py::arg("jobs") = 1);

  py::class_<WeightConditionVerdict>(m, "WeightConditionVerdict")
      .def_readonly("condition", &WeightConditionVerdict::condition)
      .def_readonly("satisfied", &WeightConditionVerdict::satisfied)
      .def_readonly("margin", &WeightConditionVerdict::margin);

  m.def("projectivity_condition", &projectivity_condition, py::arg("alpha"), py::arg("beta"));
  m.def("hodge_vanishing_condition", &hodge_vanishing_condition, py::arg("alpha"),
        py::arg("beta"), py::arg("p"));
  m.def("balanced_vanishing_condition", &balanced_vanishing_condition, py::arg("alpha"),
        py::arg("beta"), py::arg("n"));
  m.def("diameter_bound", &diameter_bound, py::arg("alpha"), py::arg("beta"), py::arg("n"),
        py::arg("lambda_"));

  py::class_<CheungVerdict>(m, "CheungVerdict")
      .def_readonly("lambda_", &CheungVerdict::lambda)
      .def_readonly("part1", &CheungVerdict::part1)
      .def_readonly("part2", &CheungVerdict::part2)
      .def_readonly("conclusion", &CheungVerdict::conclusion)
      .def_readonly("ric_orth", &CheungVerdict::ric_orth)
      .def_readonly("einstein_defect", &CheungVerdict::einstein_defect)
      .def_property_readonly("r1111", [](const CheungVerdict& v) { return v.r1111; })
      .def_property_readonly("r1122", [](const CheungVerdict& v) { return v.r1122; })
      .def_property_readonly("r1212", [](const CheungVerdict& v) { return v.r1212; });

  m.def(
      "cheung_criterion",
      [](const CurvatureTensor& t, double lambda) { return cheung_criterion(t, lambda); },
      py::arg("tensor"), py::arg("lambda_"));
}

#include "curvkit/tensor_core.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace curvkit {

double hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

void require_hermitian(const Matrix& m, double tol, const std::string& what) {
  const double defect = hermitian_defect(m);
  if (defect > tol) {
    throw NotHermitian(what + ": Hermitian defect " + std::to_string(defect));
  }
}

Matrix invert_hermitian(const Matrix& g, const Tolerances& tol) {
  require_hermitian(g, tol.hermitian, "invert_hermitian");
  const Matrix h = hermitize(g);
  Eigen::LLT<Matrix> llt(h);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("invert_hermitian: Cholesky factorization failed");
  }
  Matrix inv = llt.solve(Matrix::Identity(g.rows(), g.cols()));
  return hermitize(inv);
}

Matrix unitary_frame(const Matrix& g, const Tolerances& tol) {
  require_hermitian(g, tol.hermitian, "unitary_frame");
  // Quadratic-form matrix of |X|_g^2 = X^H A X is A = conj(g) under the
  // g(i,j) = g_{i jbar} layout.
  const Matrix a = hermitize(g.conjugate());
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("unitary_frame: Cholesky factorization failed");
  }
  const Matrix l = llt.matrixL();
  // Columns of F = L^{-H} are g-orthonormal: F^H A F = I.
  return l.adjoint().triangularView<Eigen::Upper>().solve(
      Matrix::Identity(g.rows(), g.cols()));
}

Matrix complete_unitary_frame(const Matrix& g, const Vector& first, const Tolerances& tol) {
  const int n = static_cast<int>(g.rows());
  const double norm2 = herm_quad(g, first);
  if (!(norm2 > 0.0)) throw ZeroVector("complete_unitary_frame: zero first vector");
  Matrix frame(n, n);
  frame.col(0) = first / std::sqrt(norm2);
  int filled = 1;
  for (double threshold : {1e-7, 1e-13}) {
    for (int j = 0; j < n && filled < n; ++j) {
      Vector v = Vector::Zero(n);
      v(j) = 1.0;
      for (int b = 0; b < filled; ++b) v -= herm_pair(g, v, frame.col(b)) * frame.col(b);
      const double r2 = herm_quad(g, v);
      if (r2 > threshold * threshold) {
        frame.col(filled) = v / std::sqrt(r2);
        ++filled;
      }
    }
    if (filled == n) break;
  }
  if (filled < n) {
    throw NotPositiveDefinite("complete_unitary_frame: could not complete the frame");
  }
  (void)tol;
  return frame;
}

double jet_reality_defect(const JetOfMetric& jet) {
  const int n = jet.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Matrix diff = jet.ddg[i][j] - jet.ddg[j][i].adjoint();
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

namespace {

Vector shifted(const Vector& p, int axis, double delta) {
  Vector q = p;
  const int coord = axis / 2;
  if (axis % 2 == 0) {
    q(coord) += delta;
  } else {
    q(coord) += cdouble(0.0, delta);
  }
  return q;
}

// 4th-order central first derivative along one real axis.
template <typename F>
Matrix real_d1(const F& f, const Vector& p, int axis, double h) {
  const Matrix f_m2 = f(shifted(p, axis, -2.0 * h));
  const Matrix f_m1 = f(shifted(p, axis, -h));
  const Matrix f_p1 = f(shifted(p, axis, h));
  const Matrix f_p2 = f(shifted(p, axis, 2.0 * h));
  return (f_m2 - 8.0 * f_m1 + 8.0 * f_p1 - f_p2) / (12.0 * h);
}

// Wirtinger derivative d/dz_i (bar = false) or d/dzbar_i (bar = true).
template <typename F>
Matrix wirtinger_d1(const F& f, const Vector& p, int i, bool bar, double h) {
  const Matrix dx = real_d1(f, p, 2 * i, h);
  const Matrix dy = real_d1(f, p, 2 * i + 1, h);
  const cdouble iu(0.0, 1.0);
  if (bar) return 0.5 * (dx + iu * dy);
  return 0.5 * (dx - iu * dy);
}

}  // namespace

JetOfMetric metric_jet_fd(const MetricField& field, const Vector& p, double fd_step) {
  const int n = field.dim;
  auto guarded = [&](const Vector& q) -> Matrix {
    if (field.in_domain && !field.in_domain(q)) {
      throw StencilFailure("metric_jet: stencil point left the chart domain");
    }
    return field.evaluate(q);
  };

  JetOfMetric jet;
  jet.g = hermitize(guarded(p));
  jet.dg.resize(n);
  for (int i = 0; i < n; ++i) {
    jet.dg[i] = wirtinger_d1(guarded, p, i, /*bar=*/false, fd_step);
  }
  jet.ddg.assign(n, std::vector<Matrix>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto inner = [&](const Vector& q) -> Matrix {
        return wirtinger_d1(guarded, q, j, /*bar=*/true, fd_step);
      };
      jet.ddg[i][j] = wirtinger_d1(inner, p, i, /*bar=*/false, fd_step);
    }
  }
  // Enforce the reality constraint before downstream eigen/positivity work.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Matrix avg = 0.5 * (jet.ddg[i][j] + jet.ddg[j][i].adjoint());
      jet.ddg[i][j] = avg;
      jet.ddg[j][i] = avg.adjoint();
    }
  }
  return jet;
}

JetOfMetric metric_jet(const MetricField& field, const Vector& p, const Tolerances& tol) {
  if (field.in_domain && !field.in_domain(p)) {
    throw ChartDomainViolation("metric_jet: point outside the chart domain of " + field.name);
  }
  if (field.has_analytic_jet()) {
    return field.analytic_jet(p);
  }
  return metric_jet_fd(field, p, tol.fd_step);
}

}  // namespace curvkit

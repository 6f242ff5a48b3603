#include "curvkit/curvature.hpp"

#include <cmath>

namespace curvkit {

CurvatureTensor curvature_from_jet(const JetOfMetric& jet, const Vector& point,
                                   const Tolerances& tol) {
  const int n = jet.dim();
  CurvatureTensor t;
  t.g = hermitize(jet.g);
  t.g_inv = invert_hermitian(t.g, tol);
  t.point = point;
  t.r = Tensor4(n);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (k,l) slice: -ddg[i][j] + dg[i] g^{-1} dg[j]^H. The middle factor is
      // the plain Hermitian inverse; the raised-index conjugation is absorbed
      // by the adjoint on the right.
      const Matrix slice = -jet.ddg[i][j] + jet.dg[i] * t.g_inv * jet.dg[j].adjoint();
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          t.r.at(i, j, k, l) = slice(k, l);
        }
      }
    }
  }

  // Symmetrize across the Hermitian pairing.
  Tensor4 sym(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          sym.at(i, j, k, l) =
              0.5 * (t.r.at(i, j, k, l) + std::conj(t.r.at(j, i, l, k)));
        }
  t.r = std::move(sym);
  return t;
}

CurvatureTensor chern_curvature(const MetricField& field, const Vector& p,
                                const Tolerances& tol) {
  return curvature_from_jet(metric_jet(field, p, tol), p, tol);
}

double pairing_defect(const Tensor4& r) {
  double worst = 0.0;
  const int n = r.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          worst = std::max(worst, std::abs(r.at(i, j, k, l) - std::conj(r.at(j, i, l, k))));
        }
  return worst;
}

Matrix ricci(const CurvatureTensor& t, RicciKind kind) {
  const int n = t.dim();
  // Raised-index matrix g^{p qbar} = conj(g_inv) in the storage layout.
  const Matrix hup = t.g_inv.conjugate();
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const cdouble rv = t.at(i, j, k, l);
          switch (kind) {
            case RicciKind::k1:
              out(i, j) += hup(k, l) * rv;
              break;
            case RicciKind::k2:
              out(k, l) += hup(i, j) * rv;
              break;
            case RicciKind::k3:
              out(k, j) += hup(i, l) * rv;
              break;
            case RicciKind::k4:
              out(i, l) += hup(k, j) * rv;
              break;
          }
        }
  return hermitize(out);
}

namespace {

double require_real(cdouble value, double tol, const char* what) {
  if (std::abs(value.imag()) > tol * std::max(1.0, std::abs(value.real()))) {
    throw NonRealResult(std::string(what) + ": imaginary part " +
                        std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

double scalar_curvature(const CurvatureTensor& t, const Tolerances& tol) {
  const int n = t.dim();
  const Matrix hup = t.g_inv.conjugate();
  cdouble sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) sum += hup(i, j) * hup(k, l) * t.at(i, j, k, l);
  return require_real(sum, tol.imaginary, "scalar_curvature");
}

double altered_scalar_curvature(const CurvatureTensor& t, const Tolerances& tol) {
  const int n = t.dim();
  const Matrix hup = t.g_inv.conjugate();
  cdouble sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) sum += hup(i, l) * hup(k, j) * t.at(i, j, k, l);
  return require_real(sum, tol.imaginary, "altered_scalar_curvature");
}

cdouble curvature_quartic(const CurvatureTensor& t, const Vector& x, const Vector& y,
                          const Vector& z, const Vector& w) {
  const int n = t.dim();
  cdouble sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const cdouble xy = x(i) * std::conj(y(j));
      if (xy == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        const cdouble xyz = xy * z(k);
        if (xyz == 0.0) continue;
        for (int l = 0; l < n; ++l) {
          sum += t.at(i, j, k, l) * xyz * std::conj(w(l));
        }
      }
    }
  }
  return sum;
}

double hsc(const CurvatureTensor& t, const Vector& x, const Tolerances& tol) {
  if (x.norm() == 0.0) throw ZeroVector("hsc: zero direction");
  const double norm2 = herm_quad(t.g, x);
  const cdouble quart = curvature_quartic(t, x, x, x, x);
  return require_real(quart, tol.imaginary, "hsc") / (norm2 * norm2);
}

void require_orthonormal(const Matrix& g, const Matrix& basis, double tol) {
  const int p = static_cast<int>(basis.cols());
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      const cdouble pair = herm_pair(g, basis.col(a), basis.col(b));
      const cdouble expect = (a == b) ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
      if (std::abs(pair - expect) > tol) {
        throw SubspaceNotOrthonormal("subspace basis is not g-orthonormal (defect " +
                                     std::to_string(std::abs(pair - expect)) + ")");
      }
    }
  }
}

double k_scalar(const CurvatureTensor& t, const Subspace& sigma, const Tolerances& tol) {
  require_orthonormal(t.g, sigma.basis, 1e-9);
  const int p = sigma.dim();
  cdouble sum = 0.0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      sum += curvature_quartic(t, sigma.basis.col(a), sigma.basis.col(a),
                               sigma.basis.col(b), sigma.basis.col(b));
  return require_real(sum, tol.imaginary, "k_scalar");
}

double altered_k_scalar(const CurvatureTensor& t, const Subspace& sigma,
                        const Tolerances& tol) {
  require_orthonormal(t.g, sigma.basis, 1e-9);
  const int p = sigma.dim();
  cdouble sum = 0.0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      sum += curvature_quartic(t, sigma.basis.col(a), sigma.basis.col(b),
                               sigma.basis.col(b), sigma.basis.col(a));
  return require_real(sum, tol.imaginary, "altered_k_scalar");
}

Tensor4 frame_components(const CurvatureTensor& t, const Matrix& frame) {
  const int n = t.dim();
  // Contract one slot at a time; the barred slots take conjugated frame
  // coefficients.
  Tensor4 t1(n), t2(n), t3(n), out(n);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cdouble sum = 0.0;
          for (int i = 0; i < n; ++i) sum += t.at(i, j, k, l) * frame(i, a);
          t1.at(a, j, k, l) = sum;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cdouble sum = 0.0;
          for (int j = 0; j < n; ++j) sum += t1.at(a, j, k, l) * std::conj(frame(j, b));
          t2.at(a, b, k, l) = sum;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int l = 0; l < n; ++l) {
          cdouble sum = 0.0;
          for (int k = 0; k < n; ++k) sum += t2.at(a, b, k, l) * frame(k, c);
          t3.at(a, b, c, l) = sum;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          cdouble sum = 0.0;
          for (int l = 0; l < n; ++l) sum += t3.at(a, b, c, l) * std::conj(frame(l, d));
          out.at(a, b, c, d) = sum;
        }
  return out;
}

double qobc_numerator(const Tensor4& frame_tensor, const RealVector& v) {
  const int n = frame_tensor.n;
  cdouble sum = 0.0;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const double dv = v(a) - v(c);
      sum += frame_tensor.at(a, a, c, c) * (dv * dv);
    }
  return sum.real();
}

double qobc_frame(const CurvatureTensor& t, const Matrix& frame, const RealVector& v,
                  const Tolerances& tol) {
  if (v.norm() == 0.0) throw ZeroVector("qobc_frame: zero weight vector");
  require_orthonormal(t.g, frame, 1e-8);
  const Tensor4 rf = frame_components(t, frame);
  (void)tol;
  return qobc_numerator(rf, v) / v.squaredNorm();
}

double qobc_weitzenbock_in_frame(const Tensor4& frame_tensor, const Matrix& rho,
                                 const Tolerances& tol) {
  const int n = frame_tensor.n;
  require_hermitian(rho, tol.hermitian, "qobc_weitzenbock");
  // Frame Ricci (first contraction): Ric_{a bbar} = sum_c Rf_{a bbar c cbar}.
  Matrix ric = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) ric(a, b) += frame_tensor.at(a, b, c, c);

  cdouble term1 = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) term1 += ric(a, b) * rho(k, a) * rho(b, k);

  cdouble term2 = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          term2 += frame_tensor.at(a, b, c, d) * rho(b, a) * rho(d, c);

  return require_real(term1 - term2, tol.imaginary, "qobc_weitzenbock");
}

double qobc_weitzenbock(const CurvatureTensor& t, const Matrix& rho,
                        const Tolerances& tol) {
  const Matrix frame = unitary_frame(t.g, tol);
  return qobc_weitzenbock_in_frame(frame_components(t, frame), rho, tol);
}

KahlerLikeReport kahler_like_check(const CurvatureTensor& t, double tol) {
  const int n = t.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          worst = std::max(worst, std::abs(t.at(i, j, k, l) - t.at(k, j, i, l)));
          worst = std::max(worst, std::abs(t.at(i, j, k, l) - t.at(i, l, k, j)));
        }
  return {worst <= tol, worst};
}

CurvatureTensor constant_hsc_tensor(const Matrix& g, double c, const Tolerances& tol) {
  const int n = static_cast<int>(g.rows());
  CurvatureTensor t;
  t.g = hermitize(g);
  t.g_inv = invert_hermitian(t.g, tol);
  t.point = Vector::Zero(n);
  t.r = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          t.r.at(i, j, k, l) =
              0.5 * c * (t.g(i, j) * t.g(k, l) + t.g(i, l) * t.g(k, j));
        }
  return t;
}

}  // namespace curvkit

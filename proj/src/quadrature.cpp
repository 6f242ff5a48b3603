#include "curvkit/quadrature.hpp"

#include <array>
#include <cmath>

namespace curvkit {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]; nodes are symmetric about 0.
constexpr std::array<double, 8> kNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};

// Gauss-7 weights aligned with the odd Kronrod nodes (indices 1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
  double kronrod = 0.0;
  double error = 0.0;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  double kron = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = half * kNodes[i];
    const double fsum = (i == 7) ? f(mid) : f(mid - x) + f(mid + x);
    kron += kKronrodWeights[i] * fsum;
    if (i % 2 == 1 || i == 7) {
      gauss += kGaussWeights[i / 2] * fsum;
    }
  }
  PanelResult out;
  out.kronrod = kron * half;
  const double diff = std::abs((kron - gauss) * half);
  // Standard QUADPACK-style sharpened error estimate.
  out.error = diff * std::min(1.0, std::pow(200.0 * diff, 1.5));
  if (out.error == 0.0) out.error = diff;
  return out;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth) {
  if (depth > 60) {
    throw QuadratureFailure("integrate: subdivision budget exhausted");
  }
  const PanelResult whole = gk15(f, a, b);
  if (whole.error <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
    return whole.kronrod;
  }
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  const PanelResult first = gk15(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::abs(first.kronrod));
  if (first.error <= tol) return first.kronrod;
  return adapt(f, a, b, tol, 0);
}

}  // namespace curvkit

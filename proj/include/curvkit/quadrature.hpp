#pragma once

#include <cmath>
#include <functional>

#include "curvkit/types.hpp"

namespace curvkit {

/// Adaptive Gauss-Kronrod 7/15 quadrature of f over [a, b]. Subdivides until
/// the embedded error estimate meets max(abs_tol, rel_tol * |integral|).
/// Throws QuadratureFailure when the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 1e-13);

}  // namespace curvkit

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvkit {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Index layout convention used throughout: a metric matrix G stores
/// G(i,j) = g_{i jbar}, so Hermitian symmetry reads G(j,i) = conj(G(i,j))
/// and the squared norm of a (1,0) vector X is sum_ij G(i,j) X_i conj(X_j).
/// The raised-index matrix with entries g^{p qbar} is conj(G^{-1}).

/// Central tolerance record. All modules read their defaults from here so a
/// test run can tighten or loosen the whole stack uniformly.
struct Tolerances {
  double algebraic = 1e-10;     // linear-algebra identities (inverse, frames)
  double differential = 1e-6;   // jet / curvature agreement across paths
  double hermitian = 1e-12;     // allowed asymmetry of Hermitian inputs
  double imaginary = 1e-9;      // max |Im| of results that must be real
  double positivity = 1e-7;     // classification band for cone scans
  double fd_step = 1e-3;        // finite-difference step per real coordinate
  double quadrature_rel = 1e-12;
  double quadrature_abs = 1e-13;
  double ke_tol = 1e-6;         // allowed deviation from Ric = lambda g
  double oracle_tol = 1e-6;     // optimizer reproducibility across seeds
};

struct CurvkitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct NotHermitian : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct ChartDomainViolation : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct StencilFailure : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct ProfileInvalid : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct QuadratureFailure : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct NonRealResult : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct ZeroVector : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct SubspaceNotOrthonormal : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct OptimizationDivergence : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct InvalidP : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct InvalidRegime : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct NotEinstein : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct DimensionMismatch : CurvkitError {
  using CurvkitError::CurvkitError;
};
struct ConfigError : CurvkitError {
  using CurvkitError::CurvkitError;
};

/// Hermitian sesquilinear pairing sum_ij M(i,j) X_i conj(Y_j), i.e. the value
/// of the (1,1)-form with components M on the pair (X, Ybar).
inline cdouble herm_pair(const Matrix& m, const Vector& x, const Vector& y) {
  return (x.transpose() * m * y.conjugate())(0, 0);
}

/// Real quadratic value of a Hermitian form; the imaginary part is discarded
/// (it is O(ulp) for Hermitian M).
inline double herm_quad(const Matrix& m, const Vector& x) {
  return herm_pair(m, x, x).real();
}

/// Self-contained RNG: mt19937_64 stream with explicit uniform / normal
/// transforms, so results are bit-stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() {
    // xorshift* keeps the implementation pinned (std::mt19937_64 streams are
    // standard, but the distributions on top of them are not).
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via the polar (Marsaglia) method.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  cdouble complex_normal() { return {normal(), normal()}; }

  Vector complex_normal_vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_normal();
    return v;
  }

  /// Derive an independent stream; mixing is stable across platforms.
  Rng fork(std::uint64_t salt) const {
    std::uint64_t h = state_ ^ (salt + 0x9e3779b97f4a7c15ULL + (state_ << 6) + (state_ >> 2));
    return Rng(h);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace curvkit

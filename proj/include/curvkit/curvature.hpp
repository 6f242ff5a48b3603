#pragma once

#include <vector>

#include "curvkit/tensor_core.hpp"
#include "curvkit/types.hpp"

namespace curvkit {

/// Dense rank-4 complex array in the index order (i, jbar, k, lbar).
struct Tensor4 {
  int n = 0;
  std::vector<cdouble> v;

  Tensor4() = default;
  explicit Tensor4(int dim) : n(dim), v(static_cast<size_t>(dim) * dim * dim * dim) {}

  cdouble& at(int i, int j, int k, int l) {
    return v[static_cast<size_t>(((i * n + j) * n + k)) * n + l];
  }
  cdouble at(int i, int j, int k, int l) const {
    return v[static_cast<size_t>(((i * n + j) * n + k)) * n + l];
  }
};

/// Chern curvature at a point: components R_{i jbar k lbar} together with the
/// metric and its inverse there.
struct CurvatureTensor {
  Tensor4 r;
  Matrix g;
  Matrix g_inv;
  Vector point;

  int dim() const { return r.n; }
  cdouble at(int i, int j, int k, int l) const { return r.at(i, j, k, l); }
};

enum class RicciKind { k1 = 1, k2 = 2, k3 = 3, k4 = 4 };

/// Assembles R_{i jbar k lbar} = -d2 g_{k lbar}/dz_i dzbar_j
/// + g^{p qbar} (dg_{k qbar}/dz_i)(dg_{p lbar}/dzbar_j) from a metric jet.
/// The Hermitian pairing R_{i jbar k lbar} = conj(R_{j ibar l kbar}) is
/// enforced by symmetrization after assembly.
CurvatureTensor curvature_from_jet(const JetOfMetric& jet, const Vector& point,
                                   const Tolerances& tol = {});

CurvatureTensor chern_curvature(const MetricField& field, const Vector& p,
                                const Tolerances& tol = {});

/// Max violation of the pairing invariant (before symmetrization this is the
/// assembly noise; after, it is 0 by construction on fresh tensors).
double pairing_defect(const Tensor4& r);

/// The four metric contractions of the curvature tensor, in the g(i,j) =
/// g_{i jbar} layout:
///   k1: Ric_{i jbar} = g^{k lbar} R_{i jbar k lbar}
///   k2: Ric_{k lbar} = g^{i jbar} R_{i jbar k lbar}
///   k3: Ric_{k jbar} = g^{i lbar} R_{i jbar k lbar}
///   k4: Ric_{i lbar} = g^{k jbar} R_{i jbar k lbar}
Matrix ricci(const CurvatureTensor& t, RicciKind kind);

/// Chern scalar curvature g^{i jbar} g^{k lbar} R_{i jbar k lbar}.
/// Throws NonRealResult if the imaginary part exceeds tol.imaginary.
double scalar_curvature(const CurvatureTensor& t, const Tolerances& tol = {});

/// Altered scalar curvature g^{i lbar} g^{k jbar} R_{i jbar k lbar}.
double altered_scalar_curvature(const CurvatureTensor& t, const Tolerances& tol = {});

/// R(X, Ybar, Z, Wbar) = sum R_{i jbar k lbar} X_i conj(Y_j) Z_k conj(W_l).
cdouble curvature_quartic(const CurvatureTensor& t, const Vector& x, const Vector& y,
                          const Vector& z, const Vector& w);

/// Holomorphic sectional curvature R(X,Xbar,X,Xbar)/|X|_g^4; scale invariant.
double hsc(const CurvatureTensor& t, const Vector& x, const Tolerances& tol = {});

/// g-orthonormal p-dimensional subspace of directions (columns of `basis`).
struct Subspace {
  Matrix basis;  // n x p

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Throws SubspaceNotOrthonormal unless e_a^* g e_b = delta_ab within tol.
void require_orthonormal(const Matrix& g, const Matrix& basis, double tol);

/// Scal_p = sum_{a,b <= p} R(e_a, ebar_a, e_b, ebar_b) of the restricted
/// tensor; equals the Chern scalar when p = n.
double k_scalar(const CurvatureTensor& t, const Subspace& sigma, const Tolerances& tol = {});

/// Altered variant sum_{a,b <= p} R(e_a, ebar_b, e_b, ebar_a).
double altered_k_scalar(const CurvatureTensor& t, const Subspace& sigma,
                        const Tolerances& tol = {});

/// Components of the tensor in the given frame (columns = frame vectors).
Tensor4 frame_components(const CurvatureTensor& t, const Matrix& frame);

/// QOBC numerator sum_{a,c} Rf_{a abar c cbar} (v_a - v_c)^2 from the frame
/// components; translation-invariant in v.
double qobc_numerator(const Tensor4& frame_tensor, const RealVector& v);

/// Quadratic orthogonal bisectional curvature in a g-unitary frame:
/// numerator / |v|^2. Throws ZeroVector when v = 0.
double qobc_frame(const CurvatureTensor& t, const Matrix& frame, const RealVector& v,
                  const Tolerances& tol = {});

/// Weitzenboeck form of the QOBC acting on a Hermitian matrix rho given in
/// frame components:
///   sum Ric_{a bbar} rho_{k abar} rho_{b kbar}
///   - sum R_{a bbar c dbar} rho_{b abar} rho_{d cbar}.
/// For rho = diag(t, 0, ..., 0) this reduces to
/// (Ric_{1 1bar} - R_{1 1bar 1 1bar}) t^2.
double qobc_weitzenbock_in_frame(const Tensor4& frame_tensor, const Matrix& rho,
                                 const Tolerances& tol = {});

/// Same, building the deterministic unitary frame from t.g first.
double qobc_weitzenbock(const CurvatureTensor& t, const Matrix& rho,
                        const Tolerances& tol = {});

struct KahlerLikeReport {
  bool pass = false;
  double max_violation = 0.0;
};

/// Checks the two generating symmetries R_{i jbar k lbar} = R_{k jbar i lbar}
/// and R_{i jbar k lbar} = R_{i lbar k jbar}.
KahlerLikeReport kahler_like_check(const CurvatureTensor& t, double tol);

/// Synthetic constant-HSC tensor R = (c/2)(g_{i jbar} g_{k lbar} +
/// g_{i lbar} g_{k jbar}); Kaehler-Einstein with Ric = c(n+1)/2 g.
CurvatureTensor constant_hsc_tensor(const Matrix& g, double c, const Tolerances& tol = {});

}  // namespace curvkit

#pragma once

#include <array>

#include "rkgeo/gram.hpp"
#include "rkgeo/kernels.hpp"

namespace rkgeo {

/// Coordinatization of the 2n-dimensional generic part H_0 spanned by the
/// kernel functions of A and B (|A| = |B| = n).
///
/// Coordinates are orthonormal: the Gram matrix G of
/// (k_{a_1},...,k_{a_n}, k_{b_1},...,k_{b_n}) is factored G = L L*, and a
/// kernel-coefficient vector x maps to u = L* x. C stores that map, so
/// column p of C holds the orthonormal coordinates of the p-th kernel
/// function. P and Q are the orthogonal projections (in these coordinates)
/// onto Z_A^0 = H_0 minus span{k_{a_i}} and Z_B^0.
struct GenericPartFrame {
  SpaceSpec space;
  PointSet a;
  PointSet b;
  int n = 0;
  CMatrix g;  // 2n x 2n Gram, Hermitian positive definite
  CMatrix c;  // kernel coordinates -> orthonormal coordinates (upper triangular)
  CMatrix p;  // projection onto Z_A^0
  CMatrix q;  // projection onto Z_B^0
};

/// Throws SetsIntersect / CardinalityMismatch / LinearlyDependentKernels
/// (the latter when the Gram matrix is numerically singular or its condition
/// number exceeds 1e12 — near-degenerate frames are rejected, not regularized).
GenericPartFrame generic_frame(const SpaceSpec& space, const PointSet& a,
                               const PointSet& b);

/// Orthonormal coordinates of the kernel function of `point` expanded through
/// the frame nodes (interpolation is exact for functions inside H_0).
CVector frame_coordinates(const GenericPartFrame& frame,
                          const std::vector<Complex>& node_values);

struct GeodesicExponent {
  CMatrix x;         // 2n x 2n Hermitian, ||x|| <= pi/2
  RVector lambdas;   // positive eigenvalues, descending; lambdas(0) = ||x||
  struct Residuals {
    double codiag_p = 0.0;   // max(||PXP||, ||(I-P)X(I-P)||)
    double codiag_q = 0.0;
    double endpoint = 0.0;   // ||e^{iX} P e^{-iX} - Q||
  } residuals;
};

/// The exponent of the minimal geodesic carrying Z_A^0 to Z_B^0, extracted
/// as half the principal logarithm of the unitary (2Q - I)(2P - I).
/// An eigenvalue of that unitary at -1 (the InfinitelyMany verdict) raises
/// BranchAmbiguity.
GeodesicExponent geodesic_exponent(const GenericPartFrame& frame);

/// delta(t) = e^{itX} P e^{-itX}.
CMatrix geodesic_point(const GeodesicExponent& exponent,
                       const GenericPartFrame& frame, double t);

/// (nullity(K), nullity(K*)) of the cross-Gram at the rank tolerance.
std::array<int, 2> intersection_dims(const SpaceSpec& space, const PointSet& a,
                                     const PointSet& b);

/// ||P Q||, the cosine of the Dixmier angle between Z_A^0 and Z_B^0.
double dixmier_cosine(const GenericPartFrame& frame);

/// The idempotent projecting onto span{k_{a_i}} along span{k_{b_j}}:
/// E = (I - P) ((I - P) + (I - Q))^{-1}. SingularSum when the sum is not
/// invertible (verdict != Unique).
CMatrix ando_idempotent(const GenericPartFrame& frame);

/// Positive eigenvalues of X predicted from the idempotent's co-diagonal
/// block: arccos(t / sqrt(1 + t^2)) over the n largest singular values t of
/// (I - P) E P, descending.
RVector idempotent_angles(const GenericPartFrame& frame, const CMatrix& e);

}  // namespace rkgeo

#pragma once

#include <string>
#include <vector>

#include "rkgeo/blaschke.hpp"
#include "rkgeo/grassmann.hpp"

namespace rkgeo {
namespace hardy {

/// Orthonormal basis of the model space spanned by the Szego kernels of the
/// given points: omega_1 = k_{b_1}/||k_{b_1}||, omega_2 = b_{b_1} k_{b_2}/||k_{b_2}||, ...
/// coeffs(i, l) expands omega_i = sum_l coeffs(i, l) k_{b_l}.
struct TMWBasis {
  PointSet points;
  CMatrix coeffs;
};

TMWBasis tmw_basis(const PointSet& b);

/// Compression M(i, j) = <B_A omega_j, omega_i> of multiplication by the
/// Blaschke product of A to the model space of B. Lower triangular with
/// diagonal B_A(b_j); all inner products reduce to point evaluations.
CMatrix tmw_compression(const PointSet& a, const PointSet& b);

/// Singular values of the Hankel operator with symbol B_B / B_A, computed on
/// the generic frame as the nonzero singular values of (I - P) Q.
/// arcsin of these are the eigenvalues of the geodesic exponent.
RVector hankel_singular_values(const PointSet& a, const PointSet& b);

/// Max residual between the singular values of (I - P)(I - Q) and
/// sqrt(1 - t^2) over the singular values t of the compression.
double compression_duality_check(const PointSet& a, const PointSet& b);

/// Verifies that multiplication by B_A carries the model space of B onto the
/// orthogonal complement of the model space of A inside the frame:
/// returns || proj(B_A K_B) - P ||.
double multiplier_image_check(const PointSet& a, const PointSet& b);

struct BoundRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs for <=-type rows
  bool asserted = true;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  double x_norm = 0.0;     // ||X_{AB}||
  double gamma_min = 0.0;  // smallest positive eigenvalue of X_{AB}
};

/// Spectral bound battery for a Unique Hardy pair. Rows marked asserted are
/// theorems the suite enforces; the two rows derived from the unit Hankel
/// bound are diagnostic only (see hankel_norm_probe).
BoundReport bound_suite(const PointSet& a, const PointSet& b);

struct HankelProbeReport {
  double truncated_norm = 0.0;  // largest singular value of (a^{i+j}), N x N
  double rank_one_norm = 0.0;   // 1 / (1 - |a|^2), the rank-one closed form
  double claimed_unit_norm = 1.0;
  int truncation = 0;
};

/// Truncated norm of the Hankel matrix for the symbol 1/(z - a); monotone
/// nondecreasing in N, N <= 4096. Reported next to the two candidate closed
/// forms because they disagree for a != 0.
HankelProbeReport hankel_norm_probe(Complex a, int n_trunc);

}  // namespace hardy
}  // namespace rkgeo

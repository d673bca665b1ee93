#include "rkgeo/grassmann.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace rkgeo {
namespace {

constexpr double kConditionLimit = 1e12;

// Orthogonal projection onto the column span of a full-column-rank matrix.
CMatrix span_projection(const CMatrix& columns) {
  Eigen::HouseholderQR<CMatrix> qr(columns);
  const CMatrix thin_q =
      qr.householderQ() * CMatrix::Identity(columns.rows(), columns.cols());
  return thin_q * thin_q.adjoint();
}

}  // namespace

GenericPartFrame generic_frame(const SpaceSpec& space, const PointSet& a,
                               const PointSet& b) {
  validate_set(space, a);
  validate_set(space, b);
  if (a.size() != b.size())
    fail(ErrorCode::CardinalityMismatch, "generic_frame: |A| != |B|");
  if (!sets_disjoint(a, b))
    fail(ErrorCode::SetsIntersect, "generic_frame: point sets intersect");

  const int n = static_cast<int>(a.size());
  const int dim = 2 * n;
  std::vector<Point> nodes;
  nodes.reserve(dim);
  for (const Point& p : a.points) nodes.push_back(p);
  for (const Point& p : b.points) nodes.push_back(p);

  // G(p, q) = <k_{w_q}, k_{w_p}> = k_{w_q}(w_p).
  CMatrix g(dim, dim);
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q)
      g(p, q) = kernel_eval(space, nodes[q], nodes[p]);
  g = (g + CMatrix(g.adjoint())) / 2.0;

  const num::HermitianEig eig = num::hermitian_eig(g);
  const double max_eig = eig.eigenvalues(dim - 1);
  const double min_eig = eig.eigenvalues(0);
  if (!(min_eig > num::rank_tolerance(g, max_eig)) ||
      max_eig / min_eig > kConditionLimit)
    fail(ErrorCode::LinearlyDependentKernels,
         "generic_frame: kernel Gram matrix is numerically degenerate");

  Eigen::LLT<CMatrix> llt(g);
  if (llt.info() != Eigen::Success)
    fail(ErrorCode::LinearlyDependentKernels,
         "generic_frame: Cholesky factorization failed");
  const CMatrix l = llt.matrixL();

  GenericPartFrame frame;
  frame.space = space;
  frame.a = a;
  frame.b = b;
  frame.n = n;
  frame.g = std::move(g);
  frame.c = l.adjoint();  // kernel coefficients x |-> orthonormal coords L* x

  const CMatrix identity = CMatrix::Identity(dim, dim);
  frame.p = identity - span_projection(frame.c.leftCols(n));
  frame.q = identity - span_projection(frame.c.rightCols(n));
  return frame;
}

CVector frame_coordinates(const GenericPartFrame& frame,
                          const std::vector<Complex>& node_values) {
  const int dim = 2 * frame.n;
  if (static_cast<int>(node_values.size()) != dim)
    fail(ErrorCode::InvalidArgument, "frame_coordinates: need one value per node");
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = node_values[i];
  // Values at the nodes of f = sum_p x_p k_{w_p} are G x, so the orthonormal
  // coordinates are L* x = L^{-1} v = (C*)^{-1} v, a triangular solve.
  return frame.c.adjoint()
      .triangularView<Eigen::Lower>()
      .solve(v);
}

GeodesicExponent geodesic_exponent(const GenericPartFrame& frame) {
  const int dim = 2 * frame.n;
  const CMatrix identity = CMatrix::Identity(dim, dim);
  const CMatrix symmetry =
      (2.0 * frame.q - identity) * (2.0 * frame.p - identity);
  // BranchAmbiguity from the principal log is exactly the InfinitelyMany case.
  const CMatrix log_s = num::unitary_log_principal(symmetry);
  GeodesicExponent result;
  result.x = log_s / 2.0;

  const num::HermitianEig eig = num::hermitian_eig(result.x);
  result.lambdas.resize(frame.n);
  for (int k = 0; k < frame.n; ++k)
    result.lambdas(k) = eig.eigenvalues(dim - 1 - k);  // descending positives

  const CMatrix ip = identity - frame.p;
  const CMatrix iq = identity - frame.q;
  result.residuals.codiag_p =
      std::max(num::operator_norm(frame.p * result.x * frame.p),
               num::operator_norm(ip * result.x * ip));
  result.residuals.codiag_q =
      std::max(num::operator_norm(frame.q * result.x * frame.q),
               num::operator_norm(iq * result.x * iq));
  const CMatrix u = num::matrix_exp_i(result.x, 1.0);
  result.residuals.endpoint =
      num::operator_norm(u * frame.p * u.adjoint() - frame.q);
  return result;
}

CMatrix geodesic_point(const GeodesicExponent& exponent,
                       const GenericPartFrame& frame, double t) {
  const CMatrix u = num::matrix_exp_i(exponent.x, t);
  return u * frame.p * u.adjoint();
}

std::array<int, 2> intersection_dims(const SpaceSpec& space, const PointSet& a,
                                     const PointSet& b) {
  return geodesic_verdict(space, a, b).dims;
}

double dixmier_cosine(const GenericPartFrame& frame) {
  return num::operator_norm(frame.p * frame.q);
}

CMatrix ando_idempotent(const GenericPartFrame& frame) {
  const int dim = 2 * frame.n;
  const CMatrix identity = CMatrix::Identity(dim, dim);
  const CMatrix sum = (identity - frame.p) + (identity - frame.q);
  const RVector s = num::svd(sum).singular_values;
  if (s(s.size() - 1) <= num::rank_tolerance(sum, s(0)) * 1e3)
    fail(ErrorCode::SingularSum, "ando_idempotent: (I-P) + (I-Q) is singular");
  return (identity - frame.p) * sum.inverse();
}

RVector idempotent_angles(const GenericPartFrame& frame, const CMatrix& e) {
  const int dim = 2 * frame.n;
  const CMatrix identity = CMatrix::Identity(dim, dim);
  const CMatrix block = (identity - frame.p) * e * frame.p;
  const RVector s = num::svd(block).singular_values;  // non-increasing
  RVector angles(frame.n);
  for (int k = 0; k < frame.n; ++k) {
    const double t = s(k);
    angles(k) = std::acos(t / std::sqrt(1.0 + t * t));
  }
  std::sort(angles.data(), angles.data() + angles.size(),
            std::greater<double>());
  return angles;
}

}  // namespace rkgeo

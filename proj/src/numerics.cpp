#include "rkgeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace rkgeo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::SeriesDivergence: return "SeriesDivergence";
    case ErrorCode::ZeroKernel: return "ZeroKernel";
    case ErrorCode::SetsIntersect: return "SetsIntersect";
    case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::LinearlyDependentKernels: return "LinearlyDependentKernels";
    case ErrorCode::SingularSum: return "SingularSum";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::InsufficientInteriorRoots: return "InsufficientInteriorRoots";
    case ErrorCode::NoInteriorRoot: return "NoInteriorRoot";
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleOnBoundaryNumerics: return "PoleOnBoundaryNumerics";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::ZeroOnContour: return "ZeroOnContour";
    case ErrorCode::AlphaDegenerate: return "AlphaDegenerate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace num {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs(const CMatrix& m) {
  double v = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      v = std::max(v, std::abs(m(i, j)));
  return v;
}

}  // namespace

void require_finite(const CMatrix& m, const char* who) {
  if (!m.allFinite())
    fail(ErrorCode::InvalidArgument, std::string(who) + ": non-finite entry");
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
}

double rank_tolerance(const CMatrix& m, double s_max) {
  return static_cast<double>(std::max(m.rows(), m.cols())) * kEps * s_max;
}

HermitianEig hermitian_eig(const CMatrix& h) {
  require_finite(h, "hermitian_eig");
  if (h.rows() != h.cols())
    fail(ErrorCode::InvalidArgument, "hermitian_eig: matrix not square");
  const double scale = max_abs(h);
  if (max_abs(h - h.adjoint()) > 1e-12 * std::max(1.0, scale))
    fail(ErrorCode::NotHermitian, "hermitian_eig: asymmetry above tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::NoConvergence, "hermitian_eig: iteration failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Svd svd(const CMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<CMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::NoConvergence, "svd: iteration failed");
  return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

int numerical_rank(const CMatrix& m, std::optional<double> tol) {
  if (m.size() == 0) return 0;
  const RVector s = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  const double cutoff = tol ? *tol : rank_tolerance(m, s(0));
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > cutoff) ++rank;
  return rank;
}

CMatrix unitary_log_principal(const CMatrix& s, double angle_gap, bool allow_pi) {
  require_finite(s, "unitary_log_principal");
  if (s.rows() != s.cols())
    fail(ErrorCode::InvalidArgument, "unitary_log_principal: matrix not square");
  const Eigen::Index n = s.rows();
  const CMatrix defect = s.adjoint() * s - CMatrix::Identity(n, n);
  if (operator_norm(defect) > 1e-10)
    fail(ErrorCode::NotUnitary, "unitary_log_principal: S*S deviates from I");

  // A unitary matrix is normal, so its Schur form is diagonal and the Schur
  // basis is an orthonormal eigenbasis; the branch is then applied per
  // eigenvalue.
  Eigen::ComplexSchur<CMatrix> schur(s);
  if (schur.info() != Eigen::Success)
    fail(ErrorCode::NoConvergence, "unitary_log_principal: Schur failed");
  const CMatrix& q = schur.matrixU();
  RVector angles(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex lambda = schur.matrixT()(k, k);
    const double mod = std::abs(lambda);
    if (std::abs(mod - 1.0) > 1e-8)
      fail(ErrorCode::NotUnitary, "unitary_log_principal: eigenvalue off the circle");
    lambda /= mod;
    double theta = std::arg(lambda);  // in (-pi, pi]
    if ((M_PI - std::abs(theta)) < angle_gap) {
      if (!allow_pi)
        fail(ErrorCode::BranchAmbiguity,
             "unitary_log_principal: eigenvalue at -1 within angle gap");
      theta = M_PI;
    }
    angles(k) = theta;
  }
  CMatrix a = q * angles.asDiagonal() * q.adjoint();
  return (a + CMatrix(a.adjoint())) / 2.0;
}

CMatrix matrix_exp_i(const CMatrix& a, double t) {
  const HermitianEig eig = hermitian_eig(a);
  const Eigen::Index n = a.rows();
  CVector phase(n);
  for (Eigen::Index k = 0; k < n; ++k)
    phase(k) = std::polar(1.0, t * eig.eigenvalues(k));
  return eig.vectors * phase.asDiagonal() * eig.vectors.adjoint();
}

Complex permanent(const CMatrix& m) {
  require_finite(m, "permanent");
  if (m.rows() != m.cols())
    fail(ErrorCode::InvalidArgument, "permanent: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 14) fail(ErrorCode::TooLarge, "permanent: n > 14");

  // Ryser: per(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij,
  // visiting subsets in Gray-code order so each step updates the row sums
  // by one column.
  CVector row_sums = CVector::Zero(n);
  Complex total(0.0, 0.0);
  const std::uint64_t limit = std::uint64_t(1) << n;
  std::uint64_t gray_prev = 0;
  for (std::uint64_t k = 1; k < limit; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ gray_prev;
    const int j = std::countr_zero(changed);
    const double sign_col = (gray & changed) ? 1.0 : -1.0;
    row_sums += sign_col * m.col(j);
    gray_prev = gray;

    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    const int bits = std::popcount(gray);
    total += ((bits % 2 == 0) ? 1.0 : -1.0) * prod;
  }
  return ((n % 2 == 0) ? 1.0 : -1.0) * total;
}

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  double cmax = 0.0;
  for (const Complex& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) fail(ErrorCode::DegreeZero, "polynomial_roots: zero polynomial");

  std::vector<Complex> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * cmax) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) fail(ErrorCode::DegreeZero, "polynomial_roots: degree < 1 after trimming");

  CMatrix companion = CMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::NoConvergence, "polynomial_roots: eigen iteration failed");

  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + deg);
  // Newton polish; companion eigenvalues are already close.
  std::vector<Complex> dcoef(deg);
  for (int k = 1; k <= deg; ++k) dcoef[k - 1] = static_cast<double>(k) * c[k];
  for (Complex& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex p = polynomial_eval(c, r);
      const Complex dp = polynomial_eval(dcoef, r);
      if (std::abs(dp) < 1e-300) break;
      const Complex step = p / dp;
      r -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (const Complex& r : roots) {
    const double scale = cmax * std::pow(1.0 + std::abs(r), deg);
    if (std::abs(polynomial_eval(c, r)) > 1e-8 * scale)
      fail(ErrorCode::NoConvergence, "polynomial_roots: residual above tolerance");
  }
  return roots;
}

}  // namespace num
}  // namespace rkgeo

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rkgeo/errors.hpp"

namespace rkgeo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace num {

/// Largest singular value. This is the norm used for every operator-norm
/// statement in the library (exact on the finite-dimensional generic part).
double operator_norm(const CMatrix& m);

/// Numerical-rank cutoff: s counts as zero iff s <= max(rows,cols) * eps * s_max,
/// unless an explicit tolerance is supplied.
double rank_tolerance(const CMatrix& m, double s_max);

void require_finite(const CMatrix& m, const char* who);

struct HermitianEig {
  RVector eigenvalues;  // ascending
  CMatrix vectors;      // unitary, columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix.
/// Throws NotHermitian when max|H - H*| > 1e-12 * max|H|.
HermitianEig hermitian_eig(const CMatrix& h);

struct Svd {
  RVector singular_values;  // non-increasing
  CMatrix u;
  CMatrix v;  // M = u * diag(s) * v.adjoint()
};

Svd svd(const CMatrix& m);

/// Numerical rank at the standard (or supplied) tolerance.
int numerical_rank(const CMatrix& m, std::optional<double> tol = {});

/// Principal logarithm of a unitary matrix: the Hermitian A with
/// e^{iA} = S and spectrum of A inside (-pi, pi].
///
/// Computed eigenvalue-wise on the Schur (spectral) decomposition, never by
/// series, so the branch is exact. An eigenvalue of S within `angle_gap`
/// of -1 makes the branch ill-defined and raises BranchAmbiguity unless
/// `allow_pi` is set (in which case the angle is taken as +pi).
CMatrix unitary_log_principal(const CMatrix& s, double angle_gap = 1e-9,
                              bool allow_pi = false);

/// e^{itA} for Hermitian A, via the spectral decomposition.
CMatrix matrix_exp_i(const CMatrix& a, double t = 1.0);

/// Permanent of a square matrix, Ryser's formula with Gray-code updates.
/// O(2^n * n); rejects n > 14.
Complex permanent(const CMatrix& m);

/// Roots of sum_k coeffs[k] z^k (coeffs[0] is the constant term).
/// Leading coefficients below 1e-14 * max|coeff| are trimmed first;
/// a resulting degree of zero raises DegreeZero. Companion-matrix
/// eigenvalues, polished by a few Newton steps.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// |p(z)| for the same coefficient convention, Horner evaluation.
Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex z);

}  // namespace num
}  // namespace rkgeo

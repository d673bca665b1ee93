#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "rkgeo/kernels.hpp"

namespace rkgeo {

/// Cross-Gram matrix K[i][j] = k_{b_i}(a_j): rows indexed by B, columns by A.
struct CrossGram {
  SpaceSpec space;
  PointSet a;
  PointSet b;
  CMatrix k;
};

enum class GeodesicKind { None, Unique, InfinitelyMany };

const char* geodesic_kind_name(GeodesicKind kind);

/// Existence/uniqueness verdict for geodesics joining Z_A and Z_B.
/// dims = (nullity(K), nullity(K*)) at the numerical rank tolerance.
struct GeodesicVerdict {
  GeodesicKind kind = GeodesicKind::None;
  std::array<int, 2> dims{0, 0};
  Complex det{0.0, 0.0};   // 0 when K is not square
  double condition = 0.0;  // s_max / s_min of K (inf when rank-deficient)
};

CrossGram cross_gram(const SpaceSpec& space, const PointSet& a, const PointSet& b);

/// rank_tol < 0 selects the default max(m,n)*eps*s_max cutoff.
GeodesicVerdict geodesic_verdict(const SpaceSpec& space, const PointSet& a,
                                 const PointSet& b, double rank_tol = -1.0);

/// Closed-form determinant of the matrix (1 / (1 - a_i conj(b_j)))_{i,j}.
/// Requires a_i != 0 and 1 - a_i conj(b_j) != 0 (ZeroDenominator otherwise).
Complex cauchy_determinant(const std::vector<Complex>& a,
                           const std::vector<Complex>& b);

struct BorchardtCheck {
  Complex lhs;  // det((1/(1 - a_i conj(b_j))^2)), numeric
  Complex rhs;  // closed-form Cauchy det times Ryser permanent
  double relative_error;
};

/// det(squared Cauchy) = det(Cauchy) * per(Cauchy), both sides computed
/// independently. n <= 12 (permanent cost).
BorchardtCheck borchardt_check(const std::vector<Complex>& a,
                               const std::vector<Complex>& b);

struct SafeRegionReport {
  bool guaranteed_nonzero = false;
  double max_pair_modulus = 0.0;  // max_{i,j} |a_i b_j|
  double smallest_singular = 0.0;
  double largest_singular = 0.0;
  Complex cauchy_permanent{0.0, 0.0};
};

/// Sufficient condition for a nonvanishing Bergman cross-Gram determinant:
/// max |a_i b_j| < delta/(1+delta) with delta = 0.195. When the condition
/// holds the report also carries the numeric rank evidence.
SafeRegionReport bergman_safe_region(const PointSet& a, const PointSet& b);

/// Roots in the disk of the numerator of f(z) = sum_j c_j / (1 - z conj(b_j))^2.
/// Requires at least three interior roots; the first three (sorted) are
/// returned and make the 3x3 Bergman cross-Gram against b singular.
PointSet bergman_counterexample_from_coeffs(const std::array<Complex, 3>& b,
                                            const std::array<Complex, 3>& c);

/// Completes {a1, a2} to a degenerate Bergman configuration: builds the
/// quadratic numerator of det K(z) / ((z - a1)(z - a2)) with the third row
/// evaluated at z, and returns a root inside the disk.
Point bergman_counterexample_complete(const Point& a1, const Point& a2,
                                      const std::array<Complex, 3>& b);

struct DetIdentityCheck {
  Complex lhs;  // det of the shift-invariant cross-Gram
  Complex rhs;  // prod theta(a_i) conj(theta(b_i)) * det of the Hardy cross-Gram
  double relative_error;
};

DetIdentityCheck shift_invariant_det_identity(const BlaschkeProduct& theta,
                                              const PointSet& a,
                                              const PointSet& b);

struct CounterexampleSearch {
  std::array<Complex, 3> b;
  std::array<Complex, 3> c;
  PointSet roots;
  double sv_ratio = 0.0;  // smallest/largest singular value of the cross-Gram
  int trials = 0;
};

/// Random retry loop over (b, c) draws until the numerator has three
/// interior roots. Deterministic for a fixed RNG state.
CounterexampleSearch bergman_counterexample_search(std::mt19937_64& rng,
                                                   int max_trials = 200);

/// Exact complex-rational components for the canned Bergman counterexample
/// data, expanded with arbitrary-precision rationals and rounded once at the
/// end. Used to re-verify the double-precision convolution path.
struct RationalComplex {
  long long num_re, den_re, num_im, den_im;
};

std::vector<Complex> counterexample_numerator_exact(
    const std::array<RationalComplex, 3>& b, const std::array<RationalComplex, 3>& c);

/// Reference data for the canonical 3-point Bergman degeneracy: exact
/// rational b's and c's plus the three interior roots they produce.
struct BergmanReference {
  std::array<RationalComplex, 3> b_exact;
  std::array<RationalComplex, 3> c_exact;
  std::array<Complex, 3> b;
  std::array<Complex, 3> c;
  std::array<Complex, 3> roots;
  std::array<Complex, 2> completion_a;  // rational approximations of roots 1-2
};

const BergmanReference& bergman_reference();

}  // namespace rkgeo

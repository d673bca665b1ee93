#pragma once

#include <map>

#include "rkgeo/grassmann.hpp"
#include "rkgeo/kernels.hpp"

namespace rkgeo {
namespace metrics {

/// Geodesic-distance metric between singleton zero sets:
/// gamma(a, b) = arccos(|<k_a, k_b>| / (||k_a|| ||k_b||)), in [0, pi/2].
/// The Kobayashi metric coincides with it and is not computed separately.
double gamma(const SpaceSpec& space, const Point& a, const Point& b);

/// sqrt(1 - correlation^2) = sin(gamma).
double delta(const SpaceSpec& space, const Point& a, const Point& b);

/// sqrt(1 - correlation) = sqrt(2) sin(gamma / 2).
double delta_hat(const SpaceSpec& space, const Point& a, const Point& b);

/// Pseudo-hyperbolic metric |(a - b) / (1 - conj(a) b)| on the disk.
double rho(Complex a, Complex b);

struct ProjectionNormReport {
  double op_norm = 0.0;                 // ||P_{Z_a} - P_{Z_b}||
  std::map<int, double> schatten;       // p -> ||P - Q||_p for p in {1, 2, 4}
};

/// Builds the two-dimensional generic frame for {a}, {b} and reports the
/// projection-difference norms; ||P - Q|| and 2^{-1/p} ||P - Q||_p all equal
/// delta(a, b).
ProjectionNormReport projection_norm_check(const SpaceSpec& space,
                                           const Point& a, const Point& b);

/// Disk automorphism z -> w (a - z) / (1 - conj(a) z), |a| < 1, |w| = 1.
struct MoebiusMap {
  Complex a;
  Complex w;
};

MoebiusMap make_moebius(Complex a, Complex w);
Complex moebius_apply(const MoebiusMap& m, Complex z);

/// |gamma(m z1, m z2) - gamma(z1, z2)| for Hardy or Bergman.
double moebius_invariance_check(const SpaceSpec& space, const MoebiusMap& m,
                                Complex z1, Complex z2);

/// Multi-point pseudo-metric ||X_{AB}|| = arcsin ||P - Q||; requires a
/// Unique verdict (frame errors propagate).
double gamma_n(const SpaceSpec& space, const PointSet& a, const PointSet& b);

}  // namespace metrics
}  // namespace rkgeo

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rkgeo/blaschke.hpp"
#include "rkgeo/numerics.hpp"

namespace rkgeo {

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

/// Hardy space of the unit disk, k_w(z) = 1 / (1 - conj(w) z).
struct HardySpace {};

/// Bergman space of the unit disk, k_w(z) = 1 / (1 - conj(w) z)^2.
struct BergmanSpace {};

/// Segal-Bargmann space on the plane, k_w(z) = e^{z conj(w)}.
struct BargmannSpace {};

/// Weighted Hardy space on B_R(0): k_w(z) = sum_n (conj(w) z)^n / beta_n^2.
/// Weights are an explicit head list followed by the tail rule
/// beta_n = (n+1)^tail_exponent. The radius R is supplied by the caller
/// (the library does not infer limits from finitely many weights).
struct WeightedHardySpace {
  std::vector<double> beta_head;
  double tail_exponent = 1.0;
  double radius = 1.0;
};

/// Shift-invariant subspace theta * H^2 for a finite Blaschke product theta:
/// k_w(z) = theta(z) conj(theta(w)) / (1 - z conj(w)).
struct ShiftInvariantSpace {
  BlaschkeProduct theta;
};

/// Drury-Arveson space on the unit ball of C^n,
/// k_w(z) = 1 / (1 - sum_j z_j conj(w_j)).
struct DruryArvesonSpace {
  int dim = 1;
};

/// Sobolev space on the real line, k_w(z) = e^{-|z - w|}.
struct SobolevLineSpace {};

using SpaceSpec = std::variant<HardySpace, BergmanSpace, BargmannSpace,
                               WeightedHardySpace, ShiftInvariantSpace,
                               DruryArvesonSpace, SobolevLineSpace>;

std::string space_name(const SpaceSpec& space);

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// A domain point: one complex coordinate for the disk/plane/line cases,
/// an n-vector for the ball. Negative zeros are canonicalized away so that
/// distinctness is an exact comparison.
struct Point {
  CVector coords;

  Point() : coords(1) { coords(0) = Complex(0, 0); }
  static Point scalar(Complex z);
  static Point vector(std::vector<Complex> cs);

  Complex z() const;  // requires a scalar point
  bool operator==(const Point& other) const;
};

struct PointSet {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
};

/// Validates non-emptiness and pairwise distinctness.
PointSet make_point_set(std::vector<Point> pts);
PointSet make_point_set(const std::vector<Complex>& zs);

/// Throws OutOfDomain unless p lies strictly inside the space's domain.
void validate_in_domain(const SpaceSpec& space, const Point& p);
void validate_set(const SpaceSpec& space, const PointSet& ps);

bool sets_disjoint(const PointSet& a, const PointSet& b);

// ---------------------------------------------------------------------------
// Kernel evaluation
// ---------------------------------------------------------------------------

/// k_w(z). Conjugate-symmetric: kernel_eval(w, z) == conj(kernel_eval(z, w)).
Complex kernel_eval(const SpaceSpec& space, const Point& w, const Point& z);

/// ||k_w|| = sqrt(k_w(w)); ZeroKernel when k_w(w) <= 0 within tolerance
/// (only possible for a shift-invariant space at a zero of theta).
double kernel_norm(const SpaceSpec& space, const Point& w);

/// |<k_a, k_b>| / (||k_a|| ||k_b||), clamped into [0, 1].
double normalized_correlation(const SpaceSpec& space, const Point& a,
                              const Point& b);

/// The ratios |k_{w_n}(z)| / ||k_{w_n}|| for the caller to inspect decay.
std::vector<double> boundary_decay_probe(const SpaceSpec& space,
                                         const std::vector<Point>& sequence,
                                         const Point& z);

}  // namespace rkgeo

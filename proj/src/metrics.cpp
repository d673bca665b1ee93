#include "rkgeo/metrics.hpp"

#include <cmath>

namespace rkgeo {
namespace metrics {

double gamma(const SpaceSpec& space, const Point& a, const Point& b) {
  return std::acos(normalized_correlation(space, a, b));
}

double delta(const SpaceSpec& space, const Point& a, const Point& b) {
  const double c = normalized_correlation(space, a, b);
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

double delta_hat(const SpaceSpec& space, const Point& a, const Point& b) {
  const double c = normalized_correlation(space, a, b);
  return std::sqrt(std::max(0.0, 1.0 - c));
}

double rho(Complex a, Complex b) {
  if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
    fail(ErrorCode::OutOfDomain, "rho: points must lie in the open disk");
  return std::abs((a - b) / (1.0 - std::conj(a) * b));
}

ProjectionNormReport projection_norm_check(const SpaceSpec& space,
                                           const Point& a, const Point& b) {
  if (a == b) fail(ErrorCode::SetsIntersect, "projection_norm_check: a == b");
  const GenericPartFrame frame = generic_frame(
      space, make_point_set(std::vector<Point>{a}),
      make_point_set(std::vector<Point>{b}));
  const CMatrix diff = frame.p - frame.q;
  const RVector s = num::svd(diff).singular_values;

  ProjectionNormReport report;
  report.op_norm = s(0);
  for (int p : {1, 2, 4}) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < s.size(); ++k) sum += std::pow(s(k), p);
    report.schatten[p] = std::pow(sum, 1.0 / p);
  }
  return report;
}

MoebiusMap make_moebius(Complex a, Complex w) {
  if (std::abs(a) >= 1.0)
    fail(ErrorCode::OutOfDomain, "moebius: |a| must be < 1");
  if (std::abs(std::abs(w) - 1.0) > 1e-14)
    fail(ErrorCode::InvalidArgument, "moebius: w must be unimodular");
  return {a, w};
}

Complex moebius_apply(const MoebiusMap& m, Complex z) {
  if (std::abs(z) >= 1.0)
    fail(ErrorCode::OutOfDomain, "moebius_apply: |z| must be < 1");
  return m.w * (m.a - z) / (1.0 - std::conj(m.a) * z);
}

double moebius_invariance_check(const SpaceSpec& space, const MoebiusMap& m,
                                Complex z1, Complex z2) {
  const Point p1 = Point::scalar(z1);
  const Point p2 = Point::scalar(z2);
  const Point q1 = Point::scalar(moebius_apply(m, z1));
  const Point q2 = Point::scalar(moebius_apply(m, z2));
  return std::abs(gamma(space, q1, q2) - gamma(space, p1, p2));
}

double gamma_n(const SpaceSpec& space, const PointSet& a, const PointSet& b) {
  const GenericPartFrame frame = generic_frame(space, a, b);
  const GeodesicExponent exponent = geodesic_exponent(frame);
  return exponent.lambdas(0);
}

}  // namespace metrics
}  // namespace rkgeo

#include "rkgeo/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace rkgeo {
namespace {

Complex canonical(Complex z) {
  // Map -0.0 to +0.0 in both parts so distinctness is exact.
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return {re, im};
}

double weight(const WeightedHardySpace& s, std::size_t n) {
  if (n < s.beta_head.size()) return s.beta_head[n];
  return std::pow(static_cast<double>(n + 1), s.tail_exponent);
}

Complex weighted_hardy_series(const WeightedHardySpace& s, Complex q) {
  // q = z * conj(w); series sum_n q^n / beta_n^2, truncated once a term
  // drops below 1e-17 of the partial sum.
  if (std::abs(q) >= s.radius * s.radius)
    fail(ErrorCode::SeriesDivergence, "weighted Hardy series: |w z| >= R^2");
  Complex sum(0.0, 0.0);
  Complex power(1.0, 0.0);
  for (std::size_t n = 0; n < 2000000; ++n) {
    const double b = weight(s, n);
    if (!(b > 0.0))
      fail(ErrorCode::InvalidArgument, "weighted Hardy weights must be positive");
    const Complex term = power / (b * b);
    sum += term;
    if (n > 4 && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    power *= q;
  }
  fail(ErrorCode::SeriesDivergence, "weighted Hardy series did not settle");
}

}  // namespace

std::string space_name(const SpaceSpec& space) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HardySpace>) return "hardy";
        else if constexpr (std::is_same_v<T, BergmanSpace>) return "bergman";
        else if constexpr (std::is_same_v<T, BargmannSpace>) return "bargmann";
        else if constexpr (std::is_same_v<T, WeightedHardySpace>) return "weighted-hardy";
        else if constexpr (std::is_same_v<T, ShiftInvariantSpace>) return "shift-invariant";
        else if constexpr (std::is_same_v<T, DruryArvesonSpace>) return "drury-arveson";
        else return "sobolev";
      },
      space);
}

Point Point::scalar(Complex z) {
  Point p;
  p.coords.resize(1);
  p.coords(0) = canonical(z);
  return p;
}

Point Point::vector(std::vector<Complex> cs) {
  if (cs.empty()) fail(ErrorCode::InvalidArgument, "empty point coordinates");
  Point p;
  p.coords.resize(static_cast<Eigen::Index>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    p.coords(static_cast<Eigen::Index>(i)) = canonical(cs[i]);
  return p;
}

Complex Point::z() const {
  if (coords.size() != 1)
    fail(ErrorCode::InvalidArgument, "scalar coordinate requested from a vector point");
  return coords(0);
}

bool Point::operator==(const Point& other) const {
  if (coords.size() != other.coords.size()) return false;
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (coords(i) != other.coords(i)) return false;
  return true;
}

PointSet make_point_set(std::vector<Point> pts) {
  if (pts.empty()) fail(ErrorCode::InvalidArgument, "point set must be nonempty");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        fail(ErrorCode::InvalidArgument, "point set entries must be distinct");
  return PointSet{std::move(pts)};
}

PointSet make_point_set(const std::vector<Complex>& zs) {
  std::vector<Point> pts;
  pts.reserve(zs.size());
  for (Complex z : zs) pts.push_back(Point::scalar(z));
  return make_point_set(std::move(pts));
}

void validate_in_domain(const SpaceSpec& space, const Point& p) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HardySpace> ||
                      std::is_same_v<T, BergmanSpace> ||
                      std::is_same_v<T, ShiftInvariantSpace>) {
          if (p.coords.size() != 1 || std::abs(p.z()) >= 1.0)
            fail(ErrorCode::OutOfDomain, "point not strictly inside the unit disk");
        } else if constexpr (std::is_same_v<T, BargmannSpace>) {
          if (p.coords.size() != 1)
            fail(ErrorCode::OutOfDomain, "plane point must be a scalar");
        } else if constexpr (std::is_same_v<T, WeightedHardySpace>) {
          if (p.coords.size() != 1 || std::abs(p.z()) >= s.radius)
            fail(ErrorCode::OutOfDomain, "point not strictly inside B_R(0)");
        } else if constexpr (std::is_same_v<T, DruryArvesonSpace>) {
          if (p.coords.size() != s.dim)
            fail(ErrorCode::OutOfDomain, "ball point has the wrong dimension");
          if (p.coords.squaredNorm() >= 1.0)
            fail(ErrorCode::OutOfDomain, "point not strictly inside the unit ball");
        } else {
          if (p.coords.size() != 1 || p.z().imag() != 0.0)
            fail(ErrorCode::OutOfDomain, "line point must be real");
        }
      },
      space);
}

void validate_set(const SpaceSpec& space, const PointSet& ps) {
  if (ps.points.empty())
    fail(ErrorCode::InvalidArgument, "point set must be nonempty");
  for (const Point& p : ps.points) validate_in_domain(space, p);
}

bool sets_disjoint(const PointSet& a, const PointSet& b) {
  for (const Point& p : a.points)
    for (const Point& q : b.points)
      if (p == q) return false;
  return true;
}

Complex kernel_eval(const SpaceSpec& space, const Point& w, const Point& z) {
  validate_in_domain(space, w);
  validate_in_domain(space, z);
  return std::visit(
      [&](const auto& s) -> Complex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HardySpace>) {
          return 1.0 / (1.0 - std::conj(w.z()) * z.z());
        } else if constexpr (std::is_same_v<T, BergmanSpace>) {
          const Complex d = 1.0 - std::conj(w.z()) * z.z();
          return 1.0 / (d * d);
        } else if constexpr (std::is_same_v<T, BargmannSpace>) {
          return std::exp(z.z() * std::conj(w.z()));
        } else if constexpr (std::is_same_v<T, WeightedHardySpace>) {
          return weighted_hardy_series(s, z.z() * std::conj(w.z()));
        } else if constexpr (std::is_same_v<T, ShiftInvariantSpace>) {
          // Factorized form; the Hardy factor is computed identically to the
          // HardySpace branch so the factorization property is exact.
          const Complex hardy = 1.0 / (1.0 - std::conj(w.z()) * z.z());
          return blaschke_eval(s.theta, z.z()) *
                 std::conj(blaschke_eval(s.theta, w.z())) * hardy;
        } else if constexpr (std::is_same_v<T, DruryArvesonSpace>) {
          Complex dot(0.0, 0.0);
          for (Eigen::Index j = 0; j < w.coords.size(); ++j)
            dot += z.coords(j) * std::conj(w.coords(j));
          return 1.0 / (1.0 - dot);
        } else {
          return std::exp(-std::abs(z.z().real() - w.z().real()));
        }
      },
      space);
}

double kernel_norm(const SpaceSpec& space, const Point& w) {
  const Complex kww = kernel_eval(space, w, w);
  if (kww.real() <= 1e-30)
    fail(ErrorCode::ZeroKernel, "kernel vanishes at the requested point");
  return std::sqrt(kww.real());
}

double normalized_correlation(const SpaceSpec& space, const Point& a,
                              const Point& b) {
  const double na = kernel_norm(space, a);
  const double nb = kernel_norm(space, b);
  const double raw = std::abs(kernel_eval(space, a, b)) / (na * nb);
  if (raw > 1.0 + 1e-12 && !(a == b))
    fail(ErrorCode::InvalidArgument, "correlation above 1 beyond tolerance");
  return std::clamp(raw, 0.0, 1.0);
}

std::vector<double> boundary_decay_probe(const SpaceSpec& space,
                                         const std::vector<Point>& sequence,
                                         const Point& z) {
  std::vector<double> ratios;
  ratios.reserve(sequence.size());
  for (const Point& w : sequence)
    ratios.push_back(std::abs(kernel_eval(space, w, z)) / kernel_norm(space, w));
  return ratios;
}

}  // namespace rkgeo

#include "rkgeo/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace rkgeo {
namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RationalComplexValue {
  Rational re, im;

  RationalComplexValue operator+(const RationalComplexValue& o) const {
    return {re + o.re, im + o.im};
  }
  RationalComplexValue operator*(const RationalComplexValue& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

RationalComplexValue to_rc(const RationalComplex& q) {
  return {Rational(q.num_re, q.den_re), Rational(q.num_im, q.den_im)};
}

Complex to_complex(const RationalComplexValue& v) {
  return {v.re.convert_to<double>(), v.im.convert_to<double>()};
}

double rel_err(Complex lhs, Complex rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

std::vector<Complex> scalars(const PointSet& ps) {
  std::vector<Complex> out;
  out.reserve(ps.size());
  for (const Point& p : ps.points) out.push_back(p.z());
  return out;
}

// Coefficients of prod over the given factors (1 - conj(b_l) z)^2.
std::vector<Complex> squared_factor_product(const std::vector<Complex>& b,
                                            std::size_t skip) {
  std::vector<Complex> poly{Complex(1.0, 0.0)};
  for (std::size_t l = 0; l < b.size(); ++l) {
    if (l == skip) continue;
    const Complex bb = std::conj(b[l]);
    // (1 - bb z)^2 = 1 - 2 bb z + bb^2 z^2
    const std::vector<Complex> factor{1.0, -2.0 * bb, bb * bb};
    std::vector<Complex> next(poly.size() + 2, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) next[i + j] += poly[i] * factor[j];
    poly = std::move(next);
  }
  return poly;
}

std::vector<Complex> interior_roots(const std::vector<Complex>& poly) {
  std::vector<Complex> inside;
  for (const Complex& r : num::polynomial_roots(poly))
    if (std::abs(r) < 1.0) inside.push_back(r);
  return inside;
}

// Synthetic division of p by (z - a); returns the quotient, remainder in *rem.
std::vector<Complex> deflate(const std::vector<Complex>& p, Complex a,
                             Complex* rem) {
  std::vector<Complex> q(p.size() - 1, Complex(0.0, 0.0));
  Complex carry = p.back();
  for (std::size_t k = p.size() - 1; k > 0; --k) {
    q[k - 1] = carry;
    carry = p[k - 1] + a * carry;
  }
  *rem = carry;
  return q;
}

CMatrix bergman_matrix(const std::vector<Complex>& rows,
                       const std::vector<Complex>& cols) {
  CMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Complex d = 1.0 - rows[i] * std::conj(cols[j]);
      m(i, j) = 1.0 / (d * d);
    }
  return m;
}

}  // namespace

const char* geodesic_kind_name(GeodesicKind kind) {
  switch (kind) {
    case GeodesicKind::None: return "None";
    case GeodesicKind::Unique: return "Unique";
    case GeodesicKind::InfinitelyMany: return "InfinitelyMany";
  }
  return "?";
}

CrossGram cross_gram(const SpaceSpec& space, const PointSet& a,
                     const PointSet& b) {
  validate_set(space, a);
  validate_set(space, b);
  if (!sets_disjoint(a, b))
    fail(ErrorCode::SetsIntersect, "cross_gram: point sets intersect");
  CMatrix k(b.size(), a.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      k(i, j) = kernel_eval(space, b[i], a[j]);
  return {space, a, b, std::move(k)};
}

GeodesicVerdict geodesic_verdict(const SpaceSpec& space, const PointSet& a,
                                 const PointSet& b, double rank_tol) {
  const CrossGram cg = cross_gram(space, a, b);
  const num::Svd dec = num::svd(cg.k);
  const double s_max = dec.singular_values.size() ? dec.singular_values(0) : 0.0;
  const double s_min = dec.singular_values.size()
                           ? dec.singular_values(dec.singular_values.size() - 1)
                           : 0.0;
  const double tol = rank_tol >= 0.0 ? rank_tol : num::rank_tolerance(cg.k, s_max);
  int rank = 0;
  for (Eigen::Index i = 0; i < dec.singular_values.size(); ++i)
    if (dec.singular_values(i) > tol) ++rank;

  GeodesicVerdict verdict;
  verdict.dims = {static_cast<int>(cg.k.cols()) - rank,
                  static_cast<int>(cg.k.rows()) - rank};
  verdict.condition = s_min > 0.0 ? s_max / s_min
                                  : std::numeric_limits<double>::infinity();
  if (cg.k.rows() != cg.k.cols()) {
    verdict.kind = GeodesicKind::None;
  } else {
    verdict.det = cg.k.determinant();
    verdict.kind = (verdict.dims[0] == 0 && verdict.dims[1] == 0)
                       ? GeodesicKind::Unique
                       : GeodesicKind::InfinitelyMany;
  }
  return verdict;
}

Complex cauchy_determinant(const std::vector<Complex>& a,
                           const std::vector<Complex>& b) {
  const std::size_t n = a.size();
  if (b.size() != n || n == 0)
    fail(ErrorCode::CardinalityMismatch, "cauchy_determinant: size mismatch");
  for (const Complex& ai : a)
    if (ai == Complex(0.0, 0.0))
      fail(ErrorCode::ZeroDenominator, "cauchy_determinant: a_i = 0");

  // det(1/(1 - a_i conj(b_j))) = prod(1/a_i) * det(1/(x_i - c_j)),
  // x_i = 1/a_i, c_j = conj(b_j); the latter has the classical product form.
  std::vector<Complex> x(n), c(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / a[i];
  for (std::size_t j = 0; j < n; ++j) c[j] = std::conj(b[j]);

  Complex det(1.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) det *= x[i];  // the prod(1/a_i) row factors
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) det *= (x[i] - x[j]) * (c[j] - c[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex d = x[i] - c[j];
      if (std::abs(d) < 1e-300)
        fail(ErrorCode::ZeroDenominator, "cauchy_determinant: 1 - a_i conj(b_j) = 0");
      det /= d;
    }
  return det;
}

BorchardtCheck borchardt_check(const std::vector<Complex>& a,
                               const std::vector<Complex>& b) {
  const std::size_t n = a.size();
  if (b.size() != n || n == 0)
    fail(ErrorCode::CardinalityMismatch, "borchardt_check: size mismatch");
  if (n > 12) fail(ErrorCode::TooLarge, "borchardt_check: n > 12");

  CMatrix cauchy(n, n);
  CMatrix squared(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex d = 1.0 - a[i] * std::conj(b[j]);
      if (std::abs(d) < 1e-300)
        fail(ErrorCode::ZeroDenominator, "borchardt_check: 1 - a_i conj(b_j) = 0");
      cauchy(i, j) = 1.0 / d;
      squared(i, j) = 1.0 / (d * d);
    }

  BorchardtCheck out;
  out.lhs = squared.determinant();

  const bool a_has_zero =
      std::any_of(a.begin(), a.end(), [](Complex z) { return z == Complex(0.0, 0.0); });
  Complex det_closed;
  if (!a_has_zero) {
    det_closed = cauchy_determinant(a, b);
  } else {
    // Swap roles via the transpose: with x = conj(b), y = conj(a) the
    // closed form evaluates det(M^T) = det(M) and only needs b_i != 0.
    std::vector<Complex> bc(n), ac(n);
    for (std::size_t i = 0; i < n; ++i) bc[i] = std::conj(b[i]);
    for (std::size_t i = 0; i < n; ++i) ac[i] = std::conj(a[i]);
    det_closed = cauchy_determinant(bc, ac);
  }
  out.rhs = det_closed * num::permanent(cauchy);
  out.relative_error = rel_err(out.lhs, out.rhs);
  return out;
}

SafeRegionReport bergman_safe_region(const PointSet& a, const PointSet& b) {
  const SpaceSpec space = BergmanSpace{};
  validate_set(space, a);
  validate_set(space, b);
  if (!sets_disjoint(a, b))
    fail(ErrorCode::SetsIntersect, "bergman_safe_region: point sets intersect");

  SafeRegionReport report;
  for (const Point& pa : a.points)
    for (const Point& pb : b.points)
      report.max_pair_modulus =
          std::max(report.max_pair_modulus, std::abs(pa.z() * pb.z()));
  constexpr double kDelta = 0.195;
  report.guaranteed_nonzero = report.max_pair_modulus < kDelta / (1.0 + kDelta);

  if (a.size() == b.size()) {
    const CrossGram cg = cross_gram(space, a, b);
    const RVector s = num::svd(cg.k).singular_values;
    report.largest_singular = s(0);
    report.smallest_singular = s(s.size() - 1);
    if (a.size() <= 12) {
      CMatrix cauchy(a.size(), a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          cauchy(i, j) = 1.0 / (1.0 - a[i].z() * std::conj(b[j].z()));
      report.cauchy_permanent = num::permanent(cauchy);
    }
  }
  return report;
}

PointSet bergman_counterexample_from_coeffs(const std::array<Complex, 3>& b,
                                            const std::array<Complex, 3>& c) {
  const std::vector<Complex> bs(b.begin(), b.end());
  if (std::all_of(c.begin(), c.end(),
                  [](Complex z) { return z == Complex(0.0, 0.0); }))
    fail(ErrorCode::InvalidArgument, "coefficients must not all vanish");
  make_point_set(bs);  // distinctness
  for (const Complex& z : bs)
    if (std::abs(z) >= 1.0)
      fail(ErrorCode::OutOfDomain, "b outside the open disk");

  std::vector<Complex> numerator(5, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < 3; ++j) {
    const std::vector<Complex> part = squared_factor_product(bs, j);
    for (std::size_t k = 0; k < part.size(); ++k) numerator[k] += c[j] * part[k];
  }

  const std::vector<Complex> inside = interior_roots(numerator);
  if (inside.size() < 3)
    fail(ErrorCode::InsufficientInteriorRoots,
         "fewer than three roots inside the disk");
  const PointSet roots = make_point_set(
      std::vector<Complex>(inside.begin(), inside.begin() + 3));

  const CMatrix k = bergman_matrix(scalars(roots), bs);
  const RVector s = num::svd(k).singular_values;
  if (s(s.size() - 1) > 1e-6 * s(0))
    fail(ErrorCode::NoConvergence,
         "constructed configuration is not numerically singular");
  return roots;
}

Point bergman_counterexample_complete(const Point& a1, const Point& a2,
                                      const std::array<Complex, 3>& b) {
  if (a1 == a2) fail(ErrorCode::InvalidArgument, "a1 and a2 must differ");
  const std::vector<Complex> bs(b.begin(), b.end());
  for (Complex z : {a1.z(), a2.z()})
    if (std::abs(z) >= 1.0) fail(ErrorCode::OutOfDomain, "a outside the open disk");
  for (const Complex& z : bs) {
    if (std::abs(z) >= 1.0) fail(ErrorCode::OutOfDomain, "b outside the open disk");
    if (z == a1.z() || z == a2.z())
      fail(ErrorCode::SetsIntersect, "b touches {a1, a2}");
  }

  // det of the 3x3 Bergman matrix with rows (a1, a2, z), expanded along the
  // z-row; clearing the denominators of the z-row gives a degree <= 4
  // polynomial with a1 and a2 among its roots.
  const CMatrix top = bergman_matrix({a1.z(), a2.z()}, bs);
  std::vector<Complex> p(5, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < 3; ++j) {
    // Cyclic cofactor: det[r1; r2; r3] = sum_j r3_j (r1_{j+1} r2_{j+2} - r1_{j+2} r2_{j+1}).
    const std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    const Complex cof = top(0, j1) * top(1, j2) - top(0, j2) * top(1, j1);
    const std::vector<Complex> part = squared_factor_product(bs, j);
    for (std::size_t k = 0; k < part.size(); ++k) p[k] += cof * part[k];
  }

  double scale = 0.0;
  for (const Complex& x : p) scale = std::max(scale, std::abs(x));
  Complex rem;
  std::vector<Complex> q = deflate(p, a1.z(), &rem);
  if (std::abs(rem) > 1e-8 * scale)
    fail(ErrorCode::NoConvergence, "a1 is not a root of the numerator");
  q = deflate(q, a2.z(), &rem);
  if (std::abs(rem) > 1e-8 * scale)
    fail(ErrorCode::NoConvergence, "a2 is not a root of the numerator");

  double qmax = 0.0;
  for (const Complex& x : q) qmax = std::max(qmax, std::abs(x));
  if (qmax <= 1e-12 * scale || q.size() < 2 ||
      std::abs(q.back()) <= 1e-12 * qmax)
    fail(ErrorCode::DegenerateQuadratic, "deflated polynomial is degenerate");

  const std::vector<Complex> inside = interior_roots(q);
  if (inside.empty())
    fail(ErrorCode::NoInteriorRoot, "no quadratic root inside the disk");
  return Point::scalar(inside.front());
}

DetIdentityCheck shift_invariant_det_identity(const BlaschkeProduct& theta,
                                              const PointSet& a,
                                              const PointSet& b) {
  if (a.size() != b.size())
    fail(ErrorCode::CardinalityMismatch, "determinant identity needs |A| = |B|");
  const SpaceSpec shift = ShiftInvariantSpace{theta};
  const SpaceSpec hardy = HardySpace{};
  const CMatrix lhs_m = cross_gram(shift, a, b).k;
  const CMatrix rhs_m = cross_gram(hardy, a, b).k;

  Complex factor(1.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    factor *= blaschke_eval(theta, a[i].z()) *
              std::conj(blaschke_eval(theta, b[i].z()));

  DetIdentityCheck out;
  out.lhs = lhs_m.determinant();
  out.rhs = factor * rhs_m.determinant();
  out.relative_error = rel_err(out.lhs, out.rhs);
  return out;
}

CounterexampleSearch bergman_counterexample_search(std::mt19937_64& rng,
                                                   int max_trials) {
  std::uniform_real_distribution<double> radius(0.35, 0.93);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  for (int trial = 1; trial <= max_trials; ++trial) {
    std::array<Complex, 3> b, c;
    for (auto& z : b) z = std::polar(radius(rng), angle(rng));
    for (auto& z : c) z = Complex(coeff(rng), coeff(rng));
    const double sep = std::min({std::abs(b[0] - b[1]), std::abs(b[0] - b[2]),
                                 std::abs(b[1] - b[2])});
    if (sep < 0.2) continue;
    try {
      PointSet roots = bergman_counterexample_from_coeffs(b, c);
      const CMatrix k = bergman_matrix(scalars(roots),
                                       std::vector<Complex>(b.begin(), b.end()));
      const RVector s = num::svd(k).singular_values;
      CounterexampleSearch result;
      result.b = b;
      result.c = c;
      result.roots = std::move(roots);
      result.sv_ratio = s(s.size() - 1) / s(0);
      result.trials = trial;
      return result;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientInteriorRoots &&
          e.code() != ErrorCode::InvalidArgument)
        throw;
    }
  }
  fail(ErrorCode::NoConvergence, "counterexample search exhausted its trials");
}

std::vector<Complex> counterexample_numerator_exact(
    const std::array<RationalComplex, 3>& b,
    const std::array<RationalComplex, 3>& c) {
  using Poly = std::vector<RationalComplexValue>;
  const RationalComplexValue one{Rational(1), Rational(0)};
  const RationalComplexValue zero{Rational(0), Rational(0)};

  Poly total(5, zero);
  for (std::size_t j = 0; j < 3; ++j) {
    Poly poly{one};
    for (std::size_t l = 0; l < 3; ++l) {
      if (l == j) continue;
      const RationalComplexValue bl = to_rc(b[l]);
      const RationalComplexValue bb{bl.re, -bl.im};  // conj
      const RationalComplexValue minus2bb{Rational(-2) * bb.re, Rational(-2) * bb.im};
      const Poly factor{one, minus2bb, bb * bb};
      Poly next(poly.size() + 2, zero);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t k = 0; k < 3; ++k) next[i + k] = next[i + k] + poly[i] * factor[k];
      poly = std::move(next);
    }
    const RationalComplexValue cj = to_rc(c[j]);
    for (std::size_t k = 0; k < poly.size(); ++k)
      total[k] = total[k] + cj * poly[k];
  }

  std::vector<Complex> out;
  out.reserve(total.size());
  for (const RationalComplexValue& v : total) out.push_back(to_complex(v));
  return out;
}

const BergmanReference& bergman_reference() {
  static const BergmanReference ref = [] {
    BergmanReference r;
    r.b_exact = {RationalComplex{-257, 367, -17, 45},
                 RationalComplex{-62, 311, 337, 376},
                 RationalComplex{356, 403, 86, 403}};
    r.c_exact = {RationalComplex{33, 68, -19, 411},
                 RationalComplex{244, 353, -16, 343},
                 RationalComplex{43, 85, -254, 335}};
    auto dbl = [](const RationalComplex& q) {
      return Complex(static_cast<double>(q.num_re) / static_cast<double>(q.den_re),
                     static_cast<double>(q.num_im) / static_cast<double>(q.den_im));
    };
    for (int i = 0; i < 3; ++i) {
      r.b[i] = dbl(r.b_exact[i]);
      r.c[i] = dbl(r.c_exact[i]);
    }
    r.roots = {Complex(-0.837508, 0.3451006), Complex(0.1723709, -0.832953),
               Complex(0.466866, 0.855772)};
    r.completion_a = {Complex(-67.0 / 80.0, 88.0 / 255.0),
                      Complex(101.0 / 586.0, -369.0 / 443.0)};
    return r;
  }();
  return ref;
}

}  // namespace rkgeo

#include "rkgeo/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rkgeo {
namespace hardy {
namespace {

constexpr double kConditionLimit = 1e12;

std::vector<Complex> scalars(const PointSet& ps) {
  std::vector<Complex> out;
  out.reserve(ps.size());
  for (const Point& p : ps.points) out.push_back(p.z());
  return out;
}

BlaschkeProduct product_of(const PointSet& ps) {
  return make_blaschke(scalars(ps));
}

// Szego Gram Gm(m, l) = k_{b_l}(b_m) = <k_{b_l}, k_{b_m}>.
CMatrix szego_gram(const std::vector<Complex>& b) {
  const std::size_t n = b.size();
  CMatrix g(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l)
      g(m, l) = 1.0 / (1.0 - std::conj(b[l]) * b[m]);
  return g;
}

RVector top_singular_values(const CMatrix& m, int count) {
  const RVector s = num::svd(m).singular_values;
  RVector out(count);
  for (int k = 0; k < count; ++k) out(k) = s(k);
  return out;
}

}  // namespace

TMWBasis tmw_basis(const PointSet& b) {
  const SpaceSpec hardy_space = HardySpace{};
  validate_set(hardy_space, b);
  const std::vector<Complex> bs = scalars(b);
  const int n = static_cast<int>(bs.size());

  const CMatrix gram = szego_gram(bs);
  {
    const RVector s = num::svd(gram).singular_values;
    if (s(n - 1) <= 0.0 || s(0) / s(n - 1) > kConditionLimit)
      fail(ErrorCode::IllConditioned, "tmw_basis: Szego Gram is ill-conditioned");
  }

  // omega_i(b_m) from the explicit product formula, then the kernel-basis
  // coefficients solve the interpolation system Gm c_i = values_i.
  const auto lu = gram.fullPivLu();
  CMatrix coeffs(n, n);
  for (int i = 0; i < n; ++i) {
    const double norm_i = 1.0 / std::sqrt(1.0 - std::norm(bs[i]));
    CVector values(n);
    for (int m = 0; m < n; ++m) {
      Complex prefix(1.0, 0.0);
      for (int l = 0; l < i; ++l) prefix *= blaschke_factor(bs[l], bs[m]);
      values(m) = prefix / ((1.0 - std::conj(bs[i]) * bs[m]) * norm_i);
    }
    coeffs.row(i) = lu.solve(values).transpose();
  }

  // Gram-verified orthonormality.
  const CMatrix omega_gram =
      coeffs * gram.conjugate() * coeffs.adjoint();
  if (num::operator_norm(omega_gram - CMatrix::Identity(n, n)) > 1e-8)
    fail(ErrorCode::IllConditioned, "tmw_basis: orthonormality check failed");

  return {b, std::move(coeffs)};
}

CMatrix tmw_compression(const PointSet& a, const PointSet& b) {
  if (!sets_disjoint(a, b))
    fail(ErrorCode::SetsIntersect, "tmw_compression: point sets intersect");
  const TMWBasis basis = tmw_basis(b);
  const std::vector<Complex> bs = scalars(b);
  const int n = static_cast<int>(bs.size());
  const BlaschkeProduct b_a = product_of(a);

  // <B_A k_{b_l}, k_{b_m}> = B_A(b_m) k_{b_l}(b_m), so
  // M = conj(C) diag(B_A(b_m)) Gm C^T with C the coefficient matrix.
  CVector diag(n);
  for (int m = 0; m < n; ++m) diag(m) = blaschke_eval(b_a, bs[m]);
  const CMatrix gram = szego_gram(bs);
  return basis.coeffs.conjugate() * diag.asDiagonal() * gram *
         basis.coeffs.transpose();
}

RVector hankel_singular_values(const PointSet& a, const PointSet& b) {
  const GenericPartFrame frame = generic_frame(HardySpace{}, a, b);
  const int dim = 2 * frame.n;
  const CMatrix block =
      (CMatrix::Identity(dim, dim) - frame.p) * frame.q;
  return top_singular_values(block, frame.n);
}

double compression_duality_check(const PointSet& a, const PointSet& b) {
  const GenericPartFrame frame = generic_frame(HardySpace{}, a, b);
  const int dim = 2 * frame.n;
  const CMatrix identity = CMatrix::Identity(dim, dim);
  const CMatrix product = (identity - frame.p) * (identity - frame.q);
  const RVector cosines = top_singular_values(product, frame.n);

  RVector complements(frame.n);
  {
    const RVector t = num::svd(tmw_compression(a, b)).singular_values;
    for (int k = 0; k < frame.n; ++k) {
      const double tk = std::min(1.0, t(frame.n - 1 - k));  // ascending in k
      complements(k) = std::sqrt(1.0 - tk * tk);            // descending
    }
  }
  double residual = 0.0;
  for (int k = 0; k < frame.n; ++k)
    residual = std::max(residual, std::abs(cosines(k) - complements(k)));
  return residual;
}

double multiplier_image_check(const PointSet& a, const PointSet& b) {
  const GenericPartFrame frame = generic_frame(HardySpace{}, a, b);
  const int dim = 2 * frame.n;
  const BlaschkeProduct b_a = product_of(a);

  std::vector<Complex> nodes = scalars(a);
  for (const Complex& z : scalars(b)) nodes.push_back(z);

  // Columns: orthonormal coordinates of B_A k_{b_j}, expanded by evaluating
  // at the 2n nodes (exact inside H_0).
  CMatrix image(dim, frame.n);
  for (int j = 0; j < frame.n; ++j) {
    const Complex bj = frame.b[j].z();
    std::vector<Complex> values(dim);
    for (int m = 0; m < dim; ++m)
      values[m] =
          blaschke_eval(b_a, nodes[m]) / (1.0 - std::conj(bj) * nodes[m]);
    image.col(j) = frame_coordinates(frame, values);
  }
  Eigen::HouseholderQR<CMatrix> qr(image);
  const CMatrix thin_q = qr.householderQ() * CMatrix::Identity(dim, frame.n);
  const CMatrix projection = thin_q * thin_q.adjoint();
  return num::operator_norm(projection - frame.p);
}

BoundReport bound_suite(const PointSet& a, const PointSet& b) {
  const SpaceSpec hardy_space = HardySpace{};
  const GenericPartFrame frame = generic_frame(hardy_space, a, b);
  const GeodesicExponent exponent = geodesic_exponent(frame);
  const int n = frame.n;
  const std::vector<Complex> as = scalars(a);
  const std::vector<Complex> bs = scalars(b);
  const BlaschkeProduct b_a = product_of(a);
  const BlaschkeProduct b_b = product_of(b);

  BoundReport report;
  report.x_norm = exponent.lambdas(0);
  report.gamma_min = exponent.lambdas(n - 1);

  const double pq_norm = dixmier_cosine(frame);
  double max_corr = 0.0;
  double min_arccos = M_PI;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double c = normalized_correlation(hardy_space, a[i], b[j]);
      max_corr = std::max(max_corr, c);
      min_arccos = std::min(min_arccos, std::acos(c));
    }
  report.rows.push_back({"corr_le_dixmier", max_corr, pq_norm,
                         pq_norm - max_corr, true});
  report.rows.push_back({"dixmier_lt_one", pq_norm, 1.0, 1.0 - pq_norm, true});
  report.rows.push_back({"gamma_min_le_arccos_corr", report.gamma_min,
                         min_arccos, min_arccos - report.gamma_min, true});

  // Unit-norm witness f = (1-|b_{j0}|^2)^{1/2} k_{b_{j0}} B_A, evaluated at
  // every b_j.
  double witness_max = 0.0;
  for (int j0 = 0; j0 < n; ++j0)
    for (int j = 0; j < n; ++j) {
      const double value = std::sqrt(1.0 - std::norm(bs[j0])) *
                           std::abs(1.0 / (1.0 - std::conj(bs[j0]) * bs[j])) *
                           std::abs(blaschke_eval(b_a, bs[j])) *
                           std::sqrt(1.0 - std::norm(bs[j]));
      witness_max = std::max(witness_max, std::asin(std::min(1.0, value)));
    }
  report.rows.push_back({"witness_arcsin_le_norm", witness_max, report.x_norm,
                         report.x_norm - witness_max, true});

  std::vector<double> blaschke_a_at_b(n), blaschke_b_at_a(n);
  for (int j = 0; j < n; ++j) {
    blaschke_a_at_b[j] = std::abs(blaschke_eval(b_a, bs[j]));
    blaschke_b_at_a[j] = std::abs(blaschke_eval(b_b, as[j]));
  }
  const double max_ab =
      *std::max_element(blaschke_a_at_b.begin(), blaschke_a_at_b.end());
  const double max_ba =
      *std::max_element(blaschke_b_at_a.begin(), blaschke_b_at_a.end());
  report.rows.push_back({"blaschke_arcsin_le_norm", std::asin(max_ab),
                         report.x_norm, report.x_norm - std::asin(max_ab),
                         true});
  report.rows.push_back(
      {"norm_ge_arcsin_max", std::asin(std::max(max_ab, max_ba)),
       report.x_norm, report.x_norm - std::asin(std::max(max_ab, max_ba)),
       true});

  // Weyl chains against the singular values of P Q.
  const RVector s = top_singular_values(frame.p * frame.q, n);
  std::vector<double> moduli = blaschke_a_at_b;
  std::sort(moduli.begin(), moduli.end(), std::greater<double>());
  double lhs_prod = 1.0, rhs_prod = 1.0, lhs_sum = 0.0, rhs_sum = 0.0;
  for (int m = 1; m <= n; ++m) {
    const double complement =
        std::sqrt(std::max(0.0, 1.0 - s(n - m) * s(n - m)));
    lhs_prod *= moduli[m - 1];
    rhs_prod *= complement;
    lhs_sum += moduli[m - 1];
    rhs_sum += complement;
    const std::string suffix = "_m" + std::to_string(m);
    report.rows.push_back({"weyl_product" + suffix, lhs_prod, rhs_prod,
                           rhs_prod - lhs_prod, true});
    report.rows.push_back({"weyl_sum" + suffix, lhs_sum, rhs_sum,
                           rhs_sum - lhs_sum, true});
  }
  report.rows.push_back({"weyl_product_equality", lhs_prod, rhs_prod,
                         std::abs(rhs_prod - lhs_prod), true});
  report.rows.push_back({"smallest_sv_le_complement", s(n - 1),
                         std::sqrt(1.0 - max_ab * max_ab),
                         std::sqrt(1.0 - max_ab * max_ab) - s(n - 1), true});

  // Least-eigenvalue bounds derived from the Hankel norm of 1/(z - a_j).
  // Diagnostic: the unit value and the computed norm disagree for a_j != 0,
  // so neither row is enforced.
  double unit_min = M_PI, probe_min = M_PI;
  for (int j = 0; j < n; ++j) {
    const double base = blaschke_b_at_a[j] * (1.0 - std::norm(as[j]));
    unit_min = std::min(unit_min, std::asin(std::min(1.0, base)));
    const double n_a = hankel_norm_probe(as[j], 256).truncated_norm;
    probe_min = std::min(probe_min, std::asin(std::min(1.0, base * n_a)));
  }
  report.rows.push_back({"gamma_min_le_arcsin_unit", report.gamma_min,
                         unit_min, unit_min - report.gamma_min, false});
  report.rows.push_back({"gamma_min_le_arcsin_hankel", report.gamma_min,
                         probe_min, probe_min - report.gamma_min, false});
  return report;
}

HankelProbeReport hankel_norm_probe(Complex a, int n_trunc) {
  if (std::abs(a) >= 1.0)
    fail(ErrorCode::OutOfDomain, "hankel_norm_probe: |a| must be < 1");
  if (n_trunc < 1 || n_trunc > 4096)
    fail(ErrorCode::TooLarge, "hankel_norm_probe: N out of range");

  // Entries h[i][j] = a^{i+j}; power iteration on H* H with explicit
  // matrix-vector products (the closed forms are reported, never used here).
  std::vector<Complex> powers(2 * n_trunc);
  powers[0] = Complex(1.0, 0.0);
  for (int k = 1; k < 2 * n_trunc; ++k) powers[k] = powers[k - 1] * a;

  const auto apply_h = [&](const CVector& v) {
    CVector out(n_trunc);
    for (int i = 0; i < n_trunc; ++i) {
      Complex acc(0.0, 0.0);
      for (int j = 0; j < n_trunc; ++j) acc += powers[i + j] * v(j);
      out(i) = acc;
    }
    return out;
  };
  const auto apply_h_adj = [&](const CVector& v) {
    CVector out(n_trunc);
    for (int j = 0; j < n_trunc; ++j) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < n_trunc; ++i) acc += std::conj(powers[i + j]) * v(i);
      out(j) = acc;
    }
    return out;
  };

  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CVector v(n_trunc);
  for (int i = 0; i < n_trunc; ++i) v(i) = Complex(unit(rng), unit(rng));
  v /= v.norm();

  double sigma = 0.0;
  for (int it = 0; it < 200; ++it) {
    const CVector hv = apply_h(v);
    const double next = hv.norm();
    CVector w = apply_h_adj(hv);
    const double wn = w.norm();
    if (wn == 0.0) { sigma = 0.0; break; }
    v = w / wn;
    if (std::abs(next - sigma) <= 1e-13 * std::max(1.0, next) && it > 1) {
      sigma = next;
      break;
    }
    sigma = next;
  }

  HankelProbeReport report;
  report.truncated_norm = sigma;
  report.rank_one_norm = 1.0 / (1.0 - std::norm(a));
  report.claimed_unit_norm = 1.0;
  report.truncation = n_trunc;
  return report;
}

}  // namespace hardy
}  // namespace rkgeo

#include "rkgeo/blaschke.hpp"

#include <cmath>

namespace rkgeo {

double BlaschkeProduct::partial_blaschke_sum() const {
  double s = 0.0;
  for (const Complex& a : zeros) s += 1.0 - std::abs(a);
  return s;
}

BlaschkeProduct make_blaschke(std::vector<Complex> zeros) {
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (std::abs(zeros[i]) >= 1.0)
      fail(ErrorCode::OutOfDomain, "blaschke zero outside the open disk");
    for (std::size_t j = i + 1; j < zeros.size(); ++j)
      if (zeros[i] == zeros[j])
        fail(ErrorCode::InvalidArgument, "blaschke zeros must be distinct");
  }
  return BlaschkeProduct{std::move(zeros)};
}

Complex blaschke_factor(Complex a, Complex z) {
  if (a == Complex(0.0, 0.0)) return z;
  const Complex den = 1.0 - std::conj(a) * z;
  if (std::abs(den) < 1e-14)
    fail(ErrorCode::PoleOnBoundaryNumerics, "blaschke factor denominator ~ 0");
  return (std::conj(a) / std::abs(a)) * (a - z) / den;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z,
                      std::optional<int> truncation) {
  std::size_t count = b.zeros.size();
  if (truncation) count = std::min<std::size_t>(count, std::max(0, *truncation));
  Complex prod(1.0, 0.0);
  for (std::size_t k = 0; k < count; ++k) prod *= blaschke_factor(b.zeros[k], z);
  return prod;
}

}  // namespace rkgeo

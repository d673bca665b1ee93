#pragma once

#include <optional>
#include <vector>

#include "rkgeo/numerics.hpp"

namespace rkgeo {

/// Finite (or truncated-infinite) Blaschke product with simple zeros.
/// The factor for a zero a != 0 is (conj(a)/|a|) * (a - z) / (1 - conj(a) z);
/// a zero at the origin contributes the factor z.
struct BlaschkeProduct {
  std::vector<Complex> zeros;

  /// Sum of (1 - |a_k|) over the stored zeros (partial Blaschke sum).
  double partial_blaschke_sum() const;
};

/// Validates distinctness and |zero| < 1.
BlaschkeProduct make_blaschke(std::vector<Complex> zeros);

/// Product of the first `truncation` factors (all of them when absent).
/// z may lie on the closed disk; |1 - conj(a_k) z| < 1e-14 raises
/// PoleOnBoundaryNumerics.
Complex blaschke_eval(const BlaschkeProduct& b, Complex z,
                      std::optional<int> truncation = {});

/// Single factor b_a(z).
Complex blaschke_factor(Complex a, Complex z);

}  // namespace rkgeo

#pragma once

#include "arith.hpp"

namespace margeo {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector x;
  Rational value;
  /// When infeasible: y with yᵀA ≤ 0 and yᵀb > 0.
  RatVector farkas;
  std::size_t pivots = 0;
};

/// min cᵀx subject to A x = b, x ≥ 0. Dense two-phase tableau simplex with
/// Bland's rule, exact rationals.
LpResult solve_standard_form(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace margeo

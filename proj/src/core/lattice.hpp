#pragma once

#include <optional>

#include "arith.hpp"

namespace margeo {

/// Row Hermite normal form H = U * M with U unimodular.
///
/// The first `rank` rows of H are nonzero, each starts at a strictly later
/// pivot column, pivots are positive and entries above a pivot lie in
/// [0, pivot). `transform` is U and `inverse` is U^-1 (only filled when
/// requested).
struct RowHermite {
  IntMatrix reduced;
  IntMatrix transform;
  IntMatrix inverse;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RowHermite row_hermite(IntMatrix m, bool with_transform);

/// Fraction-free (Bareiss) elimination.
std::size_t rank_of(IntMatrix m);
Integer determinant(IntMatrix m);

/// Reduced row echelon form over Q, in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of the right kernel {x : M x = 0}, each vector primitive integer.
std::vector<IntVector> kernel_basis(const IntMatrix& m, std::size_t columns);

/// Some solution of M x = b over Q, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b, std::size_t columns);

/// Inverse of a square nonsingular integer matrix as adj / det with det > 0.
struct ScaledInverse {
  IntMatrix adjugate;
  Integer det;
};
ScaledInverse scaled_inverse(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m, std::size_t columns);

}  // namespace margeo

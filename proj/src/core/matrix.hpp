#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "complex.hpp"

namespace margeo {

/// Row label (σ, i_σ): a facet and a cell of states on it (states are 1-based).
struct RowLabel {
  Face facet;
  std::vector<int> cell;
};

/// The 0/1 design matrix A_{Γ,d}.
///
/// Rows: facet blocks in facet order, cells lexicographic inside a block.
/// Columns: joint states over the ground set, lexicographic with the first
/// ground-set vertex most significant.
class DesignMatrix {
public:
  DesignMatrix(const SimplicialComplex& complex, const StateCounts& d);

  const SimplicialComplex& complex() const { return complex_; }
  const StateCounts& counts() const { return d_; }

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_states_.size(); }
  const std::vector<RowLabel>& row_labels() const { return row_labels_; }
  const std::vector<std::vector<int>>& column_states() const { return col_states_; }

  int at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  /// Column a^j as an integer point.
  Point column(std::size_t c) const;
  std::vector<Point> columns() const;
  IntMatrix to_int_matrix() const;

  /// First row of each facet block (plus one past the end).
  const std::vector<std::size_t>& block_offsets() const { return block_offsets_; }
  /// Index of the column with the given joint state.
  std::size_t column_index(const std::vector<int>& state) const;

  std::string row_name(std::size_t r) const;
  std::string column_name(std::size_t c) const;

private:
  SimplicialComplex complex_;
  StateCounts d_;
  std::vector<RowLabel> row_labels_;
  std::vector<std::vector<int>> col_states_;
  std::vector<std::size_t> block_offsets_;
  std::vector<std::uint8_t> entries_;
};

/// Columns beyond this count are refused (dense storage, exact elimination).
constexpr std::uint64_t kMaxDesignColumns = std::uint64_t{1} << 16;

DesignMatrix design_matrix(const SimplicialComplex& complex, const StateCounts& d);

/// Sufficient statistics A u.
Point marginals(const DesignMatrix& a, const std::vector<std::int64_t>& u);

/// Column indices of B_{Γ,d}: for every face σ, states in {2..d_k} on σ and 1 elsewhere.
std::vector<std::size_t> structural_basis(const DesignMatrix& a);
/// Σ over faces σ of ∏_{k∈σ} (d_k − 1).
std::uint64_t structural_basis_size(const SimplicialComplex& complex, const StateCounts& d);

std::size_t matrix_rank(const DesignMatrix& a);

/// Some w with wᵀA = 𝟏, solved exactly.
RatVector normalization_functional(const DesignMatrix& a);

std::string to_csv(const DesignMatrix& a);
nlohmann::json to_json(const DesignMatrix& a);

/// Cells of a face in lexicographic order (states 1-based).
std::vector<std::vector<int>> cells_of(const Face& face, const StateCounts& d);

/// "11", "32" or "1,10" when a state exceeds 9.
std::string cell_name(const std::vector<int>& cell);

}  // namespace margeo

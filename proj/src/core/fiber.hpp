#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "invariants.hpp"
#include "matrix.hpp"

namespace margeo {

/// Coordinate-summing linear map: target coordinate t is the sum of the
/// source coordinates listed in sums[t].
struct CoordinateMap {
  std::size_t source_dim = 0;
  std::vector<std::vector<std::size_t>> sums;
  /// Sends everything to the single point (1).
  bool constant = false;

  std::size_t target_dim() const { return sums.size(); }
  Point apply(const Point& x) const;
};

/// π_S : Marg(Γ,d) → Marg(S,d_S). Target cell i_S collects the cells of the
/// first facet containing S that restrict to i_S.
struct MarginalizationMap {
  Face target;
  Face through_facet;
  std::vector<std::vector<int>> target_cells;
  CoordinateMap map;
};

MarginalizationMap marginalization_map(const DesignMatrix& a, const Face& target);

/// The constant map onto the one-point simplex.
CoordinateMap constant_map(std::size_t source_dim);

struct FiberProductResult {
  std::vector<Point> vertices;
  /// (index in V1, index in V2) for each output vertex.
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

/// Matched-vertex fiber product: all pairs (x, y) with π₁(x) = π₂(y), each
/// image required to be a standard unit vector.
FiberProductResult fiber_product(const std::vector<Point>& v1, const CoordinateMap& pi1, const std::vector<Point>& v2,
                                 const CoordinateMap& pi2);

struct FactorizationLevel {
  SimplicialComplex complex;
  ReducibleDecomposition decomposition;
  std::size_t direct_vertices = 0;
  std::size_t fiber_vertices = 0;
  bool equal = false;
  /// For each row block of Γ: which side it is read from.
  nlohmann::json identification;
};

struct FactorizationReport {
  bool holds = false;
  std::vector<FactorizationLevel> levels;
};

/// Compares the columns of A_{Γ,d} with the fiber product of the two pieces of
/// a reducible decomposition, recursing into reducible pieces.
FactorizationReport verify_reducible_factorization(const SimplicialComplex& complex, const StateCounts& d);

enum class TransferPrediction { gorenstein, not_gorenstein, undetermined };
const char* to_string(TransferPrediction p);

struct TransferReport {
  bool preconditions_met = false;
  std::string precondition_note;
  std::optional<ReducibleDecomposition> decomposition;
  std::optional<GorensteinCertificate> piece1, piece2;
  bool same_index = false;
  bool interior_points_ones = false;
  bool projections_agree = false;
  bool hypotheses_hold = false;
  TransferPrediction prediction = TransferPrediction::undetermined;
  GorensteinCertificate direct;
  bool agrees = true;
};

TransferReport gorenstein_transfer_check(const SimplicialComplex& complex, const StateCounts& d,
                                         const GorensteinOptions& options = {});

}  // namespace margeo

#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "complex.hpp"
#include "invariants.hpp"

namespace margeo {

class ResultCache;

enum class ScanSuite { codegree_conjecture, gorenstein_conjecture };
ScanSuite parse_scan_suite(std::string_view s);
const char* to_string(ScanSuite s);

/// Δ_s, C^i(∂Δ_{s+1−i}) for i = 0..s−2, or glued from two such pieces along
/// a clean reducible decomposition (recursively). Facets must all have s vertices.
bool in_conjectured_gorenstein_class(const SimplicialComplex& complex);

/// Complexes on [n] whose facets all have `size` vertices obtained by coning.
bool is_cone_over_boundary(const SimplicialComplex& complex);

struct ScanOptions {
  int n = 3;
  /// Geometric dimension of the facets; unset scans every dimension 0..n−1.
  std::optional<int> dim;
  /// Constant state count used for every vertex.
  int d_value = 2;
  ScanSuite suite = ScanSuite::gorenstein_conjecture;
  unsigned threads = 1;
  GorensteinOptions gorenstein;
  ResultCache* cache = nullptr;
};

/// Result object {suite, n, dims, d_value, entries[], summary{}}; entries are
/// ordered by (dimension, enumeration index).
nlohmann::json scan_classify(const ScanOptions& options);

/// One scan entry for a single complex, independent of enumeration.
nlohmann::json scan_entry(const SimplicialComplex& complex, const StateCounts& d, ScanSuite suite,
                          const GorensteinOptions& options);

}  // namespace margeo

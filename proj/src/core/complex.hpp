#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arith.hpp"

namespace margeo {

/// A face is a strictly increasing list of vertex labels (labels are >= 1).
using Face = std::vector<int>;

/// A finite simplicial complex given by its facets.
///
/// Facets keep the order in which they were supplied; design-matrix row
/// blocks follow it. The ground set may contain vertices that lie in no
/// facet. Such a vertex contributes states to the joint table but no
/// interaction; an isolated vertex in the graph sense is a singleton facet.
class SimplicialComplex {
public:
  /// Validates and normalizes: facets are sorted internally, duplicates and
  /// non-maximal entries are dropped (with a diagnostic), an empty ground set
  /// defaults to the union of the facets.
  SimplicialComplex(std::vector<int> ground_set, std::vector<Face> facets);
  explicit SimplicialComplex(std::vector<Face> facets) : SimplicialComplex({}, std::move(facets)) {}

  const std::vector<int>& ground_set() const { return ground_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  std::size_t num_vertices() const { return ground_.size(); }
  bool is_face(const Face& f) const;
  bool is_facet(const Face& f) const;
  bool is_simplex() const { return facets_.size() == 1; }
  bool is_pure() const;
  /// All facets have at most two vertices.
  bool is_graph() const;
  /// Vertices of the ground set lying in no facet.
  std::vector<int> ghost_vertices() const;
  /// Position of a vertex within the ground set.
  std::size_t index_of(int vertex) const;

  /// Bracket notation; vertices above 9 switch the facet to comma form.
  std::string to_string() const;
  nlohmann::json to_json() const;

  /// Same ground set and the same facet set (order ignored).
  bool same_as(const SimplicialComplex& other) const;

private:
  std::vector<int> ground_;
  std::vector<Face> facets_;
  std::vector<std::string> diagnostics_;
};

/// Number of states per ground-set vertex, aligned with `ground_set()`.
class StateCounts {
public:
  StateCounts() = default;
  StateCounts(const SimplicialComplex& complex, std::vector<int> counts);
  static StateCounts binary(const SimplicialComplex& complex);

  int of(int vertex) const;
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& values() const { return counts_; }
  /// Counts restricted to (and aligned with) another ground set.
  std::vector<int> restricted_to(const std::vector<int>& vertices) const;
  bool all_binary() const;

private:
  std::vector<int> vertices_;
  std::vector<int> counts_;
};

// ---------------------------------------------------------------------------
// parsing

/// Parses "[12][23]", "[1,10][10,11]" or "{1234}[12][23]" (ground-set prefix).
SimplicialComplex parse_complex(std::string_view text);

/// Accepts bracket notation and the named shorthands K<n>, C<n>, path-<n>,
/// star-<n>, simplex-<n>, boundary-<n> (also "tree:1-2,2-3" edge lists).
SimplicialComplex parse_complex_or_named(std::string_view text);

/// "3,2,2" -> {3,2,2}; rejects entries below 2.
std::vector<int> parse_counts(std::string_view text);

SimplicialComplex complex_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// faces and weights

/// Every face including the empty one, each once, ordered by (size, lex).
std::vector<Face> downward_closure(const SimplicialComplex& complex);

/// Product of the state counts over the face; 1 for the empty face.
std::uint64_t weight(const Face& face, const StateCounts& d);
std::uint64_t face_weight(const SimplicialComplex& complex, const Face& face, const StateCounts& d);
std::uint64_t max_weight(const SimplicialComplex& complex, const StateCounts& d);
bool equal_weights(const SimplicialComplex& complex, const StateCounts& d);

// ---------------------------------------------------------------------------
// constructions

/// C^r(Γ): r fresh apex vertices (max label + 1, ...), each joined to every face.
SimplicialComplex cone_over(const SimplicialComplex& complex, int repetitions);
/// The boundary of the (n-1)-simplex on [n].
SimplicialComplex boundary_simplex(int n);
SimplicialComplex full_simplex(int n);

// ---------------------------------------------------------------------------
// reducibility

struct ReducibleDecomposition {
  SimplicialComplex gamma1;
  Face separator;
  SimplicialComplex gamma2;
  /// True when the separator had to be added as an extra facet of that side.
  bool augmented1 = false;
  bool augmented2 = false;

  bool clean() const { return !augmented1 && !augmented2; }
};

/// First decomposition in the fixed search order: separators by size
/// descending then lexicographic; the side holding the lexicographically
/// least facet becomes gamma1.
std::optional<ReducibleDecomposition> find_reducible_decomposition(const SimplicialComplex& complex);

/// Every decomposition obtainable from a separator face and a bipartition of
/// the facet components it induces.
std::vector<ReducibleDecomposition> all_reducible_decompositions(const SimplicialComplex& complex);

bool is_decomposable(const SimplicialComplex& complex);

// ---------------------------------------------------------------------------
// graphs

bool is_chordal(const SimplicialComplex& graph);
bool is_k4_minor_free(const SimplicialComplex& graph);

// ---------------------------------------------------------------------------
// isomorphism

/// Relabels onto [n] and returns the lexicographically least sorted facet
/// list over all vertex permutations (brute force, n <= 9).
SimplicialComplex canonical_form(const SimplicialComplex& complex);

/// Canonical key for the pair (complex, state counts).
std::string canonical_key(const SimplicialComplex& complex, const StateCounts& d);

/// Permutations of the ground set (as relabelings old index -> new index)
/// that map the facet set onto itself.
std::vector<std::vector<std::size_t>> automorphisms(const SimplicialComplex& complex);

constexpr int kEnumerationVertexLimit = 7;

/// One canonical representative per isomorphism class of pure complexes on
/// [n] whose facets have dim+1 vertices and cover every vertex.
void for_each_pure_complex(int n, int dim, const std::function<void(const SimplicialComplex&)>& visit);
std::vector<SimplicialComplex> enumerate_pure_complexes(int n, int dim);

}  // namespace margeo

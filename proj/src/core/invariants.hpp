#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "geometry.hpp"
#include "matrix.hpp"

namespace margeo {

/// Marg(Γ,d) with its representations computed once.
struct MarginalPolytope {
  DesignMatrix matrix;
  VRep vertices;
  HRep facets;
  std::uint64_t omega = 0;
};

MarginalPolytope marginal_polytope(const SimplicialComplex& complex, const StateCounts& d);

// ---------------------------------------------------------------------------
// codegree

struct CodegreeStep {
  std::int64_t k = 0;
  std::size_t interior_points = 0;
};

struct CodegreeResult {
  std::int64_t codegree = 0;
  Point witness;
  /// Every relative-interior lattice point of codegree·P.
  std::vector<Point> interior_points;
  std::vector<CodegreeStep> evidence;
  std::size_t dim = 0;
  std::optional<std::uint64_t> omega;
  bool conjecture_holds = false;
};

CodegreeResult polytope_codegree(const VRep& v, const HRep& h);
CodegreeResult codegree(const MarginalPolytope& p);
CodegreeResult codegree(const SimplicialComplex& complex, const StateCounts& d);

// ---------------------------------------------------------------------------
// normality

enum class LatticeMode { ambient, columns };
enum class NormalityMethod { triangulation, dilate_scan };
enum class NormalityVerdict { normal, not_normal, normal_up_to_bound };

const char* to_string(LatticeMode m);
const char* to_string(NormalityMethod m);
const char* to_string(NormalityVerdict v);
LatticeMode parse_lattice_mode(std::string_view s);

struct Hole {
  std::int64_t degree = 0;
  Point point;
};

struct NormalityEvidence {
  NormalityVerdict verdict = NormalityVerdict::normal;
  NormalityMethod method = NormalityMethod::triangulation;
  LatticeMode mode = LatticeMode::ambient;
  std::int64_t degree_from = 2;
  std::int64_t degree_to = 2;
  std::vector<Hole> holes;
  /// Triangulation method only.
  bool compressed = false;
  std::size_t simplices = 0;
  std::uint64_t parallelepiped_points = 0;
  /// Index of the vertex-difference lattice in the saturated lattice.
  Integer lattice_index = 1;
};

struct NormalityOptions {
  LatticeMode mode = LatticeMode::ambient;
  NormalityMethod method = NormalityMethod::triangulation;
  /// Dilate scan only; 0 selects max(2, dim − 1).
  std::int64_t max_degree = 0;
  /// Triangulation method: accept facet width one as proof of normality.
  bool compressed_shortcut = true;
  /// When not normal, list every hole at the smallest failing degree.
  bool list_minimal_holes = true;
};

NormalityEvidence idp_normality(const VRep& v, const NormalityOptions& options = {});

// ---------------------------------------------------------------------------
// holes

/// Lattice points of kP that are not a sum of k generators.
std::vector<Point> holes_in_dilate(const VRep& generators, const HRep& h, std::int64_t k);
std::vector<Point> holes_in_dilate(const SimplicialComplex& complex, const StateCounts& d, std::int64_t k);

// ---------------------------------------------------------------------------
// Gorenstein

enum class StepStatus { passed, failed, skipped };
const char* to_string(StepStatus s);

struct GorensteinStep {
  std::string name;
  StepStatus status = StepStatus::skipped;
  std::string detail;
};

struct GorensteinCertificate {
  bool is_gorenstein = false;
  std::int64_t index = 0;
  std::uint64_t omega = 0;
  bool equal_weights = false;
  std::optional<Point> interior_point;
  std::vector<Point> interior_points;
  /// Lattice distance of the interior point to each facet, in H-rep order.
  std::vector<Integer> distances;
  std::optional<NormalityEvidence> normality;
  std::string failure_reason;
  std::vector<GorensteinStep> steps;
};

struct GorensteinOptions {
  NormalityOptions normality;
  /// Skip the remaining steps after the first failure.
  bool short_circuit = false;
};

GorensteinCertificate gorenstein_certificate(const MarginalPolytope& p, const GorensteinOptions& options = {});
GorensteinCertificate gorenstein_certificate(const SimplicialComplex& complex, const StateCounts& d,
                                             const GorensteinOptions& options = {});

// ---------------------------------------------------------------------------
// weak maximum likelihood threshold

struct WmltStep {
  std::int64_t m = 0;
  std::size_t distinct_marginals = 0;
  std::string status;
};

struct WmltResult {
  std::optional<std::int64_t> wmlt;
  std::vector<std::int64_t> witness_u;
  Point witness_marginal;
  std::int64_t start = 1;
  std::int64_t m_max = 0;
  std::int64_t codegree = 0;
  std::vector<WmltStep> per_m;
  /// The search stopped on the state bound rather than on m_max.
  bool truncated = false;
};

struct WmltOptions {
  /// 0 selects codegree + 4.
  std::int64_t m_max = 0;
  bool start_at_codegree = true;
  std::size_t max_states = 4'000'000;
};

WmltResult wmlt_search(const MarginalPolytope& p, const WmltOptions& options = {});
WmltResult wmlt_search(const SimplicialComplex& complex, const StateCounts& d, const WmltOptions& options = {});

}  // namespace margeo

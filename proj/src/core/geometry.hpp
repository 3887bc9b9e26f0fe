#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"

namespace margeo {

/// Vertex representation: integer points in a common ambient space, sorted
/// lexicographically and deduplicated.
struct VRep {
  std::size_t ambient = 0;
  std::vector<Point> vertices;
};

VRep make_vrep(std::vector<Point> points);

/// aᵀx = b (equation) or aᵀx ≤ b (inequality).
struct Constraint {
  IntVector a;
  Integer b;

  bool operator==(const Constraint& o) const { return a == o.a && b == o.b; }
};

struct HRep {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  std::vector<Constraint> equations;
  std::vector<Constraint> inequalities;

  bool operator==(const HRep& o) const
  {
    return ambient == o.ambient && dim == o.dim && equations == o.equations && inequalities == o.inequalities;
  }
};

/// Coordinates of the affine hull: x = origin + basis · y for integer y.
///
/// In the ambient frame the basis spans the saturated lattice Zⁿ ∩ aff(P) − origin
/// and `coords` recovers y = coords · (x − origin). In the column frame the
/// basis spans the lattice generated by vertex differences; `coords` is empty.
struct LatticeFrame {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  Point origin;
  IntMatrix basis;   // ambient × dim
  IntMatrix coords;  // dim × ambient
  IntMatrix equations;  // Hermite-reduced integer rows vanishing on the direction space
  std::vector<Point> points;  // the vertices in frame coordinates, same order as VRep
};

LatticeFrame ambient_frame(const VRep& v);
LatticeFrame column_frame(const VRep& v);

/// Index of the lattice generated by vertex differences inside the saturated lattice.
Integer column_lattice_index(const VRep& v);

/// Facets of cone{(1, y) : y ∈ points} for points affinely spanning Z^dim,
/// by double description. Each c satisfies c·(1, y) ≥ 0 with c[1..] primitive.
std::vector<IntVector> cone_facets(const std::vector<Point>& points, std::size_t dim);

/// Maximal independent integer equations of the affine hull (Hermite-reduced rows).
std::vector<Constraint> affine_hull(const VRep& v);

HRep facet_enumeration(const VRep& v);

/// The H-representation of kP.
HRep dilate(const HRep& h, std::int64_t k);

/// cone(P) from P and a rational functional w with w·x = 1 on P:
/// equations (e − β w)·x = 0 and inequalities (a − b w)·x ≤ 0, scaled to primitive integers.
HRep cone_hrep(const HRep& h, const RatVector& w);

enum class PointClass { outside, boundary, relative_interior };
const char* to_string(PointClass c);

PointClass classify_point(const RatVector& x, const HRep& h);
PointClass classify_point(const Point& x, const HRep& h);
bool contains(const HRep& h, const Point& x);

struct Membership {
  bool member = false;
  /// Convex weights over VRep vertices when member.
  RatVector lambda;
  /// Otherwise g·v ≤ threshold < g·x for every vertex v.
  RatVector separator;
  Rational threshold;
};

Membership convex_membership(const RatVector& x, const VRep& v);

enum class BoundMode { propagation, linear_program };

struct SearchOptions {
  bool interior_only = false;
  BoundMode bounds = BoundMode::propagation;
  std::size_t max_points = 20'000'000;
};

/// Integer points of kP (or of its relative interior), sorted lexicographically.
std::vector<Point> lattice_points_in_dilate(const VRep& v, const HRep& h, std::int64_t k,
                                            const SearchOptions& options = {});

/// b − aᵀx; throws when x violates the inequality.
Integer lattice_distance(const Point& x, const Constraint& inequality);

/// Lines "a_1 … a_n == b" then "a_1 … a_n <= b".
std::string to_text(const HRep& h);
nlohmann::json to_json(const HRep& h);

}  // namespace margeo

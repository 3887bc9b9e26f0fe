#include <doctest.h>

#include <random>

#include "geometry.hpp"
#include "invariants.hpp"
#include "lattice.hpp"
#include "lp.hpp"
#include "triangulation.hpp"

using namespace margeo;

namespace {

MarginalPolytope polytope(const std::string& text, std::vector<int> d = {})
{
  const auto c = parse_complex_or_named(text);
  return marginal_polytope(c, d.empty() ? StateCounts::binary(c) : StateCounts(c, d));
}

/// Every integer point of the bounding box of kP that satisfies the H-rep.
std::vector<Point> box_points(const VRep& v, const HRep& h, std::int64_t k, bool interior)
{
  const std::size_t n = v.ambient;
  Point lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = v.vertices.front()[i];
    for (const auto& p : v.vertices) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    lo[i] *= k;
    hi[i] *= k;
  }
  const HRep hk = dilate(h, k);
  std::vector<Point> out;
  Point x = lo;
  for (;;) {
    const auto cls = classify_point(x, hk);
    if (interior ? cls == PointClass::relative_interior : cls != PointClass::outside)
      out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0)
        return out;
    }
    if (n == 0)
      return out;
  }
}

}  // namespace

TEST_SUITE("geometry")
{
  TEST_CASE("facet counts of known marginal polytopes")
  {
    CHECK(polytope("[12][23]").facets.inequalities.size() == 8);
    CHECK(polytope("[12][23]", {3, 2, 2}).facets.inequalities.size() == 10);
    CHECK(polytope("[12][23]", {3, 2, 2}).facets.equations.size() == 3);
    CHECK(polytope("[12][23]", {3, 2, 2}).facets.dim == 7);
    // cut polytopes of K4 and K5
    CHECK(polytope("C3").facets.inequalities.size() == 16);
    CHECK(polytope("K4").facets.inequalities.size() == 56);
    CHECK(polytope("K4").facets.dim == 10);
    // a single facet gives a simplex
    const auto s = polytope("[12]", {2, 3});
    CHECK(s.facets.inequalities.size() == 6);
    CHECK(s.facets.dim == 5);
  }

  TEST_CASE("every inequality is valid and defines a facet")
  {
    for (const char* text : {"[12][23]", "C3", "[123][34]", "C4"}) {
      const auto p = polytope(text);
      const auto& v = p.vertices.vertices;
      for (const auto& e : p.facets.equations)
        for (const auto& x : v)
          CHECK(dot(e.a, x) == e.b);
      for (const auto& ineq : p.facets.inequalities) {
        std::vector<Point> tight;
        for (const auto& x : v) {
          CHECK(dot(ineq.a, x) <= ineq.b);
          if (dot(ineq.a, x) == ineq.b)
            tight.push_back(x);
        }
        REQUIRE(!tight.empty());
        IntMatrix diffs;
        for (const auto& x : tight) {
          IntVector row;
          for (std::size_t i = 0; i < x.size(); ++i)
            row.push_back(x[i] - tight.front()[i]);
          diffs.push_back(row);
        }
        CHECK(rank_of(diffs) + 1 == p.facets.dim);
      }
    }
  }

  TEST_CASE("V- and H-representations agree on random points")
  {
    std::mt19937_64 rng(20240611);
    for (const auto& [text, d] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"[12][23]", {}}, {"[12][23]", {3, 2, 2}}, {"C3", {}}, {"[12]", {2, 3}}, {"[1][2]", {2, 2}}}) {
      const auto p = polytope(text, d);
      const auto& verts = p.vertices.vertices;
      const std::size_t n = p.vertices.ambient;
      std::size_t inside = 0, outside = 0;
      for (int trial = 0; trial < 1000; ++trial) {
        RatVector x(n);
        const int mode = trial % 4;
        if (mode == 0 || mode == 1) {
          // convex combination of a random subset, optionally pushed along a random direction
          const std::size_t take = 1 + rng() % verts.size();
          Integer total = 0;
          std::vector<Integer> w(verts.size());
          for (std::size_t t = 0; t < take; ++t) {
            const auto j = rng() % verts.size();
            const Integer wj = 1 + static_cast<long>(rng() % 5);
            w[j] += wj;
            total += wj;
          }
          for (std::size_t j = 0; j < verts.size(); ++j)
            for (std::size_t i = 0; i < n; ++i)
              x[i] += Rational(w[j] * verts[j][i], total);
          if (mode == 1) {
            const auto i = rng() % n;
            x[i] += Rational(static_cast<long>(rng() % 5) - 2, 7);
          }
        } else if (mode == 2) {
          for (auto& xi : x)
            xi = Rational(static_cast<long>(rng() % 9) - 2, 4);
        } else {
          // keep the equations: mix two vertices with one coordinate perturbed along an edge direction
          const auto& a = verts[rng() % verts.size()];
          const auto& b = verts[rng() % verts.size()];
          const Rational t(static_cast<long>(rng() % 13) - 3, 6);
          for (std::size_t i = 0; i < n; ++i)
            x[i] = Rational(a[i]) + t * Rational(b[i] - a[i]);
        }
        const auto h_class = classify_point(x, p.facets);
        const auto m = convex_membership(x, p.vertices);
        CHECK(m.member == (h_class != PointClass::outside));
        if (m.member) {
          ++inside;
          Rational sum = 0;
          RatVector y(n);
          for (std::size_t j = 0; j < verts.size(); ++j) {
            CHECK(m.lambda[j] >= 0);
            sum += m.lambda[j];
            for (std::size_t i = 0; i < n; ++i)
              y[i] += m.lambda[j] * verts[j][i];
          }
          CHECK(sum == 1);
          CHECK(y == x);
        } else {
          ++outside;
          Rational gx = 0;
          for (std::size_t i = 0; i < n; ++i)
            gx += m.separator[i] * x[i];
          CHECK(gx > m.threshold);
          for (const auto& v : verts) {
            Rational gv = 0;
            for (std::size_t i = 0; i < n; ++i)
              gv += m.separator[i] * v[i];
            CHECK(gv <= m.threshold);
          }
        }
      }
      CHECK(inside > 100);
      CHECK(outside > 100);
    }
  }

  TEST_CASE("lattice search matches box enumeration")
  {
    for (const auto& [text, d, kmax] : std::vector<std::tuple<std::string, std::vector<int>, int>>{
             {"[12][23]", {}, 3}, {"C3", {}, 2}, {"[12]", {2, 3}, 3}, {"[12][23]", {3, 2, 2}, 2}}) {
      const auto p = polytope(text, d);
      for (std::int64_t k = 1; k <= kmax; ++k)
        for (bool interior : {false, true}) {
          SearchOptions o;
          o.interior_only = interior;
          const auto got = lattice_points_in_dilate(p.vertices, p.facets, k, o);
          CHECK_MESSAGE(got == box_points(p.vertices, p.facets, k, interior), text << " k=" << k);
          o.bounds = BoundMode::linear_program;
          CHECK(lattice_points_in_dilate(p.vertices, p.facets, k, o) == got);
        }
    }
  }

  TEST_CASE("vertex order does not change the facet description")
  {
    std::mt19937 rng(3);
    for (const char* text : {"C3", "[123][34]", "K4"}) {
      const auto p = polytope(text);
      auto shuffled = p.vertices.vertices;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const auto v = make_vrep(shuffled);
      CHECK(facet_enumeration(v) == p.facets);
    }
  }

  TEST_CASE("dilation scales right-hand sides")
  {
    const auto p = polytope("[12][23]");
    const auto h3 = dilate(p.facets, 3);
    for (std::size_t i = 0; i < h3.inequalities.size(); ++i)
      CHECK(h3.inequalities[i].b == 3 * p.facets.inequalities[i].b);
    for (std::size_t i = 0; i < h3.equations.size(); ++i)
      CHECK(h3.equations[i].b == 3 * p.facets.equations[i].b);
  }

  TEST_CASE("lattice distance")
  {
    const Constraint c{{1, 1}, 4};
    CHECK(lattice_distance({1, 1}, c) == 2);
    CHECK(lattice_distance({2, 2}, c) == 0);
    CHECK_THROWS_AS(lattice_distance({3, 3}, c), Error);
  }

  TEST_CASE("column lattice index")
  {
    CHECK(column_lattice_index(make_vrep({{0, 0}, {2, 0}, {0, 2}})) == 4);
    CHECK(column_lattice_index(make_vrep({{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK(column_lattice_index(polytope("K4").vertices) == 1);
  }

  TEST_CASE("text and json forms")
  {
    const auto p = polytope("[12]");
    const auto t = to_text(p.facets);
    CHECK(t.find("==") != std::string::npos);
    CHECK(t.find("<=") != std::string::npos);
    const auto j = to_json(p.facets);
    CHECK(j["inequalities"].size() == 4);
    CHECK(j["dim"] == 3);
  }
}

TEST_SUITE("lp")
{
  TEST_CASE("optimal")
  {
    // min x1 + x2  s.t.  x1 + 2 x2 = 4
    const auto r = solve_standard_form({{1, 2}}, {4}, {1, 1});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 2);
    CHECK(r.x == RatVector{0, 2});
  }

  TEST_CASE("infeasible with a Farkas certificate")
  {
    const RatMatrix a{{1, 1}, {1, -1}};
    const RatVector b{-1, 0};
    const auto r = solve_standard_form(a, b, {0, 0});
    REQUIRE(r.status == LpStatus::infeasible);
    Rational yb = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      yb += r.farkas[i] * b[i];
    CHECK(yb > 0);
    for (std::size_t j = 0; j < 2; ++j) {
      Rational ya = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        ya += r.farkas[i] * a[i][j];
      CHECK(ya <= 0);
    }
  }

  TEST_CASE("unbounded")
  {
    CHECK(solve_standard_form({{1, -1}}, {0}, {-1, 0}).status == LpStatus::unbounded);
  }

  TEST_CASE("degenerate problem terminates")
  {
    const RatMatrix a{{1, 1, 1, 0}, {1, 1, 0, 1}, {2, 2, 1, 1}};
    const auto r = solve_standard_form(a, {1, 1, 2}, {-1, -1, 0, 0});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == -1);
  }
}

TEST_SUITE("triangulation")
{
  TEST_CASE("unit square")
  {
    const std::vector<Point> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto t = placing_triangulation(sq, 2);
    CHECK(t.size() == 2);
    Integer total = 0;
    for (const auto& s : t)
      total += for_each_parallelepiped_point(sq, s, [](const Point&) {});
    CHECK(total == 2);
  }

  TEST_CASE("parallelepiped of a fat triangle")
  {
    const std::vector<Point> tri{{0, 0}, {2, 0}, {0, 2}};
    std::vector<Point> seen;
    const auto vol = for_each_parallelepiped_point(tri, {0, 1, 2}, [&](const Point& p) { seen.push_back(p); });
    CHECK(vol == 4);
    CHECK(seen.size() == 3);
    for (const auto& p : seen)
      CHECK(p.size() == 3);
  }

  TEST_CASE("volumes add up to the normalized volume")
  {
    // 2x2 square has normalized volume 8
    std::vector<Point> pts;
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= 2; ++y)
        pts.push_back({x, y});
    Integer total = 0;
    for (const auto& s : placing_triangulation(pts, 2))
      total += for_each_parallelepiped_point(pts, s, [](const Point&) {});
    CHECK(total == 8);
  }
}

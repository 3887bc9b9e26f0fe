#include <doctest.h>

#include "invariants.hpp"
#include "oracles.hpp"

using namespace margeo;

namespace {

MarginalPolytope polytope(const std::string& text, std::vector<int> d = {})
{
  const auto c = parse_complex_or_named(text);
  return marginal_polytope(c, d.empty() ? StateCounts::binary(c) : StateCounts(c, d));
}

bool all_ones(const Point& p)
{
  return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 1; });
}

/// Smallest m with a table of size m whose marginal is relative-interior in mP.
std::int64_t brute_force_wmlt(const MarginalPolytope& p, std::int64_t m_max)
{
  const auto& c = p.matrix.complex();
  const auto a = oracle::design_matrix(c.facets(), c.ground_set(), p.matrix.counts().values());
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const HRep hm = dilate(p.facets, m);
    for (const auto& u : oracle::tables_of_size(a.front().size(), static_cast<int>(m))) {
      Point x(a.size(), 0);
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t j = 0; j < u.size(); ++j)
          x[r] += a[r][j] * u[j];
      if (classify_point(x, hm) == PointClass::relative_interior)
        return m;
    }
  }
  return -1;
}

}  // namespace

TEST_SUITE("codegree")
{
  TEST_CASE("path with a three-state end vertex")
  {
    const auto r = codegree(parse_complex("[12][23]"), StateCounts(parse_complex("[12][23]"), {3, 2, 2}));
    CHECK(r.codegree == 6);
    CHECK(r.omega == 6u);
    CHECK(r.conjecture_holds);
    const std::vector<Point> expected = {
        {1, 1, 1, 1, 1, 1, 1, 2, 1, 2},
        {1, 1, 1, 1, 1, 1, 1, 2, 2, 1},
        {1, 1, 1, 1, 1, 1, 2, 1, 1, 2},
        {1, 1, 1, 1, 1, 1, 2, 1, 2, 1},
    };
    CHECK(r.interior_points == expected);
    for (std::size_t i = 0; i + 1 < r.evidence.size(); ++i)
      CHECK(r.evidence[i].interior_points == 0);
  }

  TEST_CASE("interior points of a chain match positive consistent tables")
  {
    for (const auto& [d, ks] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{3, 2, 2}, {5, 6, 7, 8}}, {{2, 2, 2}, {3, 4, 5, 6}}, {{2, 3, 2}, {6, 7, 8}}, {{2, 2, 3}, {6, 7}}}) {
      const auto p = polytope("[12][23]", d);
      SearchOptions o;
      o.interior_only = true;
      for (int k : ks)
        CHECK_MESSAGE(lattice_points_in_dilate(p.vertices, p.facets, k, o) ==
                          oracle::chain_interior_points(d[0], d[1], d[2], k),
                      "k=" << k);
    }
  }

  TEST_CASE("equal weights put the all-ones point alone in the first interior dilate")
  {
    for (int n = 1; n <= 3; ++n)
      for (int dim = 0; dim < n; ++dim)
        for (const auto& c : enumerate_pure_complexes(n, dim)) {
          const auto r = codegree(c, StateCounts::binary(c));
          CHECK(r.codegree == (std::int64_t{1} << (dim + 1)));
          REQUIRE(r.interior_points.size() == 1);
          CHECK(all_ones(r.interior_points.front()));
        }
  }

  TEST_CASE("codegree of a lattice simplex")
  {
    const VRep v = make_vrep({{0, 0}, {1, 0}, {0, 1}});
    CHECK(polytope_codegree(v, facet_enumeration(v)).codegree == 3);
    const VRep w = make_vrep({{0, 0}, {2, 0}, {0, 2}});
    CHECK(polytope_codegree(w, facet_enumeration(w)).codegree == 2);
  }
}

TEST_SUITE("normality")
{
  TEST_CASE("methods agree on small marginal polytopes")
  {
    for (const char* text : {"[12][23]", "C3", "C4", "[123][34]", "[12][13][14]"}) {
      const auto p = polytope(text);
      NormalityOptions tri, scan;
      scan.method = NormalityMethod::dilate_scan;
      const auto a = idp_normality(p.vertices, tri);
      const auto b = idp_normality(p.vertices, scan);
      CHECK_MESSAGE(a.verdict == NormalityVerdict::normal, text);
      CHECK(b.verdict != NormalityVerdict::not_normal);
    }
  }

  TEST_CASE("facet width one implies normal without the shortcut too")
  {
    std::size_t compressed = 0;
    for (const char* text : {"[12][23]", "C3", "C4", "[123][34]", "[12][13][14]", "[12][34]", "[123]", "K4",
                             "[123][124]", "[123][124][135][245]"}) {
      const auto p = polytope(text);
      NormalityOptions full;
      full.compressed_shortcut = false;
      const auto a = idp_normality(p.vertices);
      const auto b = idp_normality(p.vertices, full);
      CHECK_MESSAGE(a.verdict == b.verdict, text);
      CHECK_FALSE(b.compressed);
      if (a.compressed) {
        ++compressed;
        CHECK(b.verdict == NormalityVerdict::normal);
        CHECK(a.simplices == 0);
      }
    }
    CHECK(compressed >= 3);
    CHECK_FALSE(idp_normality(polytope("K4").vertices).compressed);
  }

  TEST_CASE("K4 is not normal with the all-ones hole in degree four")
  {
    const auto p = polytope("K4");
    const auto e = idp_normality(p.vertices);
    CHECK(e.verdict == NormalityVerdict::not_normal);
    REQUIRE(e.holes.size() == 1);
    CHECK(e.holes[0].degree == 4);
    CHECK(all_ones(e.holes[0].point));

    NormalityOptions scan;
    scan.method = NormalityMethod::dilate_scan;
    scan.max_degree = 4;
    const auto s = idp_normality(p.vertices, scan);
    CHECK(s.verdict == NormalityVerdict::not_normal);
    REQUIRE(s.holes.size() == 1);
    CHECK(s.holes[0].point == e.holes[0].point);
  }

  TEST_CASE("the lattice mode matters for a tall tetrahedron")
  {
    const VRep v = make_vrep({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    const auto ambient = idp_normality(v);
    CHECK(ambient.verdict == NormalityVerdict::not_normal);
    REQUIRE(!ambient.holes.empty());
    CHECK(ambient.holes[0].degree == 2);
    CHECK(ambient.holes[0].point == Point{1, 1, 1});
    CHECK(ambient.lattice_index == 2);
    NormalityOptions cols;
    cols.mode = LatticeMode::columns;
    CHECK(idp_normality(v, cols).verdict == NormalityVerdict::normal);
  }

  TEST_CASE("holes in a dilate")
  {
    const auto k4 = parse_complex_or_named("K4");
    const auto h = holes_in_dilate(k4, StateCounts::binary(k4), 4);
    REQUIRE(h.size() == 1);
    CHECK(all_ones(h[0]));
    CHECK(holes_in_dilate(k4, StateCounts::binary(k4), 2).empty());
    const auto path = parse_complex("[12][23]");
    CHECK(holes_in_dilate(path, StateCounts::binary(path), 3).empty());
  }
}

TEST_SUITE("gorenstein")
{
  TEST_CASE("triangle is Gorenstein of index four")
  {
    const auto c = parse_complex_or_named("C3");
    const auto cert = gorenstein_certificate(c, StateCounts::binary(c));
    CHECK(cert.is_gorenstein);
    CHECK(cert.index == 4);
    REQUIRE(cert.interior_point);
    CHECK(all_ones(*cert.interior_point));
    for (const auto& d : cert.distances)
      CHECK(d == 1);
    CHECK(cert.failure_reason.empty());
  }

  TEST_CASE("four-cycle fails on facet distances")
  {
    const auto c = parse_complex_or_named("C4");
    const auto cert = gorenstein_certificate(c, StateCounts::binary(c));
    CHECK_FALSE(cert.is_gorenstein);
    CHECK(cert.failure_reason.rfind("facet_distances", 0) == 0);
    REQUIRE(cert.steps.size() == 5);
    CHECK(cert.steps[4].status == StepStatus::passed);

    GorensteinOptions quick;
    quick.short_circuit = true;
    const auto q = gorenstein_certificate(c, StateCounts::binary(c), quick);
    CHECK_FALSE(q.is_gorenstein);
    CHECK(q.steps[4].status == StepStatus::skipped);
    CHECK_FALSE(q.normality);
  }

  TEST_CASE("unequal facet weights fail fast")
  {
    const auto c = parse_complex("[12][23]");
    const auto cert = gorenstein_certificate(c, StateCounts(c, {3, 2, 2}));
    CHECK_FALSE(cert.is_gorenstein);
    CHECK_FALSE(cert.equal_weights);
    CHECK(cert.steps[0].status == StepStatus::failed);
    for (std::size_t i = 1; i < cert.steps.size(); ++i)
      CHECK(cert.steps[i].status == StepStatus::skipped);
  }

  TEST_CASE("simplices are Gorenstein with index the weight")
  {
    const auto c = parse_complex("[12]");
    const auto cert = gorenstein_certificate(c, StateCounts(c, {2, 3}));
    CHECK(cert.is_gorenstein);
    CHECK(cert.index == 6);
  }
}

TEST_SUITE("wmlt")
{
  TEST_CASE("level-set search matches brute force over all tables")
  {
    for (const auto& [text, d] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"[12]", {2, 2}}, {"[12][23]", {2, 2, 2}}, {"C3", {}}, {"[1][2]", {2, 3}}, {"[12][23]", {2, 3, 2}}}) {
      const auto p = polytope(text, d);
      const auto r = wmlt_search(p);
      REQUIRE(r.wmlt);
      CHECK_MESSAGE(*r.wmlt == brute_force_wmlt(p, *r.wmlt), text);
      // the witness is a genuine table
      std::int64_t size = 0;
      for (auto x : r.witness_u) {
        CHECK(x >= 0);
        size += x;
      }
      CHECK(size == *r.wmlt);
      CHECK(marginals(p.matrix, r.witness_u) == r.witness_marginal);
      CHECK(classify_point(r.witness_marginal, dilate(p.facets, *r.wmlt)) == PointClass::relative_interior);
    }
  }

  TEST_CASE("K4 threshold is five")
  {
    const auto p = polytope("K4");
    const auto r = wmlt_search(p);
    REQUIRE(r.wmlt);
    CHECK(*r.wmlt == 5);
    CHECK(r.codegree == 4);
    CHECK(brute_force_wmlt(p, 5) == 5);
    REQUIRE(r.per_m.size() == 5);
    CHECK(r.per_m[0].distinct_marginals == 16);
  }

  TEST_CASE("a bound below the threshold reports no conclusion")
  {
    WmltOptions o;
    o.m_max = 4;
    const auto r = wmlt_search(polytope("K4"), o);
    CHECK_FALSE(r.wmlt);
    CHECK_FALSE(r.truncated);
    o.m_max = 2;
    CHECK_THROWS_AS(wmlt_search(polytope("K4"), o), Error);
  }

  TEST_CASE("codegree bounds the threshold and equals it on normal polytopes")
  {
    for (const char* text : {"[12][23]", "C3", "C4", "[123][34]", "star-4", "[12][34]"}) {
      const auto p = polytope(text);
      const auto cg = codegree(p).codegree;
      const auto r = wmlt_search(p);
      REQUIRE(r.wmlt);
      CHECK(cg <= *r.wmlt);
      if (idp_normality(p.vertices).verdict == NormalityVerdict::normal)
        CHECK_MESSAGE(cg == *r.wmlt, text);
    }
  }
}

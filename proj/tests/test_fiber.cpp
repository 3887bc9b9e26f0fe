#include <doctest.h>

#include <set>

#include "fiber.hpp"
#include "oracles.hpp"

using namespace margeo;

TEST_SUITE("fiber")
{
  TEST_CASE("marginalization onto the shared vertex")
  {
    const auto g1 = parse_complex("[12]");
    const DesignMatrix a1(g1, StateCounts(g1, {3, 2}));
    const auto m = marginalization_map(a1, {2});
    // cells 11,12,21,22,31,32: state of vertex 2 is the second digit
    CHECK(m.map.sums == std::vector<std::vector<std::size_t>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(m.map.apply({0, 0, 0, 0, 0, 1}) == Point{0, 1});
    CHECK_THROWS_AS(marginalization_map(a1, {3}), Error);
  }

  TEST_CASE("gluing a three-state edge to a binary edge")
  {
    const auto g1 = parse_complex("[12]");
    const auto g2 = parse_complex("[23]");
    const DesignMatrix a1(g1, StateCounts(g1, {3, 2}));
    const DesignMatrix a2(g2, StateCounts(g2, {2, 2}));
    const auto pi1 = marginalization_map(a1, {2});
    const auto pi2 = marginalization_map(a2, {2});
    const auto fp = fiber_product(a1.columns(), pi1.map, a2.columns(), pi2.map);
    CHECK(fp.vertices.size() == 12);
    const Point pair{0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    CHECK(std::find(fp.vertices.begin(), fp.vertices.end(), pair) != fp.vertices.end());

    // same vertex set as the columns of the glued complex
    const auto g = parse_complex("[12][23]");
    const DesignMatrix a(g, StateCounts(g, {3, 2, 2}));
    const auto cols = a.columns();
    CHECK(std::set<Point>(cols.begin(), cols.end()) == std::set<Point>(fp.vertices.begin(), fp.vertices.end()));
  }

  TEST_CASE("maps that do not hit simplex vertices are rejected")
  {
    CoordinateMap bad;
    bad.source_dim = 2;
    bad.sums = {{0, 1}};
    CHECK_THROWS_AS(fiber_product({{1, 1}}, bad, {{1, 0}}, bad), Error);
  }

  TEST_CASE("reducible factorization holds on reducible complexes")
  {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"[12][23]", {3, 2, 2}}, {"[12][23][34]", {2, 3, 2, 2}}, {"[123][34]", {2, 2, 2, 2}},
        {"[12][34]", {2, 2, 2, 2}}, {"[12][13][23][14][24]", {2, 2, 2, 2}}, {"[125][126][134]", {2, 2, 2, 2, 2, 2}},
        {"[1][2]", {2, 3}},
    };
    for (const auto& [text, d] : cases) {
      const auto c = parse_complex(text);
      const auto r = verify_reducible_factorization(c, StateCounts(c, d));
      CHECK_MESSAGE(r.holds, text);
      CHECK(!r.levels.empty());
      for (const auto& l : r.levels)
        CHECK(l.direct_vertices == l.fiber_vertices);
    }
    const auto c4 = parse_complex_or_named("C4");
    CHECK_THROWS_AS(verify_reducible_factorization(c4, StateCounts::binary(c4)), Error);
  }

  TEST_CASE("transfer prediction agrees with direct certificates")
  {
    for (const char* text : {"[12][23]", "[12][13][23][14][24]", "[123][234]", "[12][23][34]", "[12][13][14][23][24][34]"}) {
      const auto c = parse_complex_or_named(text);
      const auto t = gorenstein_transfer_check(c, StateCounts::binary(c));
      CHECK_MESSAGE(t.agrees, text);
    }
    const auto path = parse_complex("[12][23]");
    const auto t = gorenstein_transfer_check(path, StateCounts::binary(path));
    CHECK(t.preconditions_met);
    CHECK(t.hypotheses_hold);
    CHECK(t.prediction == TransferPrediction::gorenstein);
    CHECK(t.direct.is_gorenstein);

    const auto unequal = gorenstein_transfer_check(path, StateCounts(path, {3, 2, 2}));
    CHECK(unequal.prediction == TransferPrediction::not_gorenstein);
    CHECK_FALSE(unequal.direct.is_gorenstein);

    // a reducible complex glued from a non-Gorenstein piece
    const auto glued = parse_complex("[12][23][34][14][15]");
    const auto g = gorenstein_transfer_check(glued, StateCounts::binary(glued));
    CHECK(g.preconditions_met);
    CHECK(g.prediction == TransferPrediction::not_gorenstein);
    CHECK_FALSE(g.direct.is_gorenstein);
    CHECK(g.agrees);
  }
}

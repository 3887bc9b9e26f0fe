#include <doctest.h>

#include "lattice.hpp"
#include "matrix.hpp"
#include "oracles.hpp"

using namespace margeo;

namespace {

oracle::Table table_of(const DesignMatrix& a)
{
  oracle::Table t(a.rows(), std::vector<int>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      t[r][c] = a.at(r, c);
  return t;
}

}  // namespace

TEST_SUITE("matrix")
{
  TEST_CASE("binary path on three vertices")
  {
    const auto c = parse_complex("[12][23]");
    const DesignMatrix a(c, StateCounts::binary(c));
    const oracle::Table expected = {
        {1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1},
        {1, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 1},
    };
    CHECK(table_of(a) == expected);
    CHECK(a.row_name(0) == "([12],11)");
    CHECK(a.row_name(7) == "([23],22)");
    CHECK(a.column_name(5) == "212");
    CHECK(matrix_rank(a) == 6);
  }

  TEST_CASE("entries match the definition on many complexes and state counts")
  {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"[12][23]", {3, 2, 2}}, {"[12][23]", {2, 3, 4}}, {"[123]", {2, 3, 2}}, {"[12][13][23]", {2, 2, 3}},
        {"[1][2]", {3, 2}},      {"{123}[12]", {2, 2, 3}}, {"[124][23][34]", {2, 3, 2, 2}},
    };
    for (const auto& [text, d] : cases) {
      const auto c = parse_complex(text);
      const DesignMatrix a(c, StateCounts(c, d));
      CHECK_MESSAGE(table_of(a) == oracle::design_matrix(c.facets(), c.ground_set(), d), text);
    }
  }

  TEST_CASE("each column has exactly one 1 per facet block")
  {
    const auto c = parse_complex_or_named("K4");
    const DesignMatrix a(c, StateCounts::binary(c));
    for (std::size_t col = 0; col < a.cols(); ++col)
      for (std::size_t b = 0; b + 1 < a.block_offsets().size(); ++b) {
        int ones = 0;
        for (std::size_t r = a.block_offsets()[b]; r < a.block_offsets()[b + 1]; ++r)
          ones += a.at(r, col);
        CHECK(ones == 1);
      }
  }

  TEST_CASE("rank equals the size of the structural basis")
  {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"[12][23]", {2, 2, 2}}, {"[12][23]", {3, 2, 2}}, {"K4", {2, 2, 2, 2}},  {"[123]", {2, 3, 2}},
        {"C5", {2, 2, 2, 2, 2}}, {"[12][13][23]", {3, 2, 2}}, {"[123][234]", {2, 2, 2, 3}}, {"{123}[12]", {2, 2, 3}},
    };
    for (const auto& [text, dv] : cases) {
      const auto c = parse_complex_or_named(text);
      const StateCounts d(c, dv);
      const DesignMatrix a(c, d);
      // Σ over faces of ∏ (d_k − 1), computed here from the face list
      std::uint64_t expected = 0;
      for (const auto& f : downward_closure(c)) {
        std::uint64_t p = 1;
        for (int v : f)
          p *= static_cast<std::uint64_t>(d.of(v) - 1);
        expected += p;
      }
      CHECK_MESSAGE(matrix_rank(a) == expected, text);
      CHECK(structural_basis_size(c, d) == expected);
      const auto basis = structural_basis(a);
      CHECK(basis.size() == expected);
      IntMatrix sub;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        IntVector row;
        for (auto col : basis)
          row.push_back(a.at(r, col));
        sub.push_back(row);
      }
      CHECK(rank_of(sub) == expected);
    }
  }

  TEST_CASE("normalization functional sums every column to one")
  {
    for (const char* text : {"[12][23]", "K4", "[123][34]"}) {
      const auto c = parse_complex_or_named(text);
      const DesignMatrix a(c, StateCounts::binary(c));
      const auto w = normalization_functional(a);
      for (std::size_t col = 0; col < a.cols(); ++col) {
        Rational s = 0;
        for (std::size_t r = 0; r < a.rows(); ++r)
          s += w[r] * a.at(r, col);
        CHECK(s == 1);
      }
    }
  }

  TEST_CASE("marginals of a table")
  {
    const auto c = parse_complex("[12][23]");
    const DesignMatrix a(c, StateCounts::binary(c));
    CHECK(marginals(a, {1, 0, 0, 0, 0, 0, 0, 0}) == Point{1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(marginals(a, {1, 1, 1, 1, 1, 1, 1, 1}) == Point{2, 2, 2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(marginals(a, {1, 2}), Error);
  }

  TEST_CASE("csv and json exports")
  {
    const auto c = parse_complex("[12]");
    const DesignMatrix a(c, StateCounts::binary(c));
    CHECK(to_csv(a).rfind("row,11,12,21,22\n", 0) == 0);
    const auto j = to_json(a);
    CHECK(j["entries"].size() == 4);
    CHECK(j["columns"][3] == "22");
  }

  TEST_CASE("oversized joint tables are refused")
  {
    const auto c = parse_complex_or_named("simplex-17");
    CHECK_THROWS_AS(DesignMatrix(c, StateCounts::binary(c)), Error);
  }
}

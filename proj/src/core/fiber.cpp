#include "fiber.hpp"

#include <algorithm>
#include <set>

namespace margeo {

Point CoordinateMap::apply(const Point& x) const
{
  if (x.size() != source_dim)
    fail(ErrorKind::invalid_argument, "point has the wrong dimension for this map");
  if (constant)
    return Point{1};
  Point y(sums.size(), 0);
  for (std::size_t t = 0; t < sums.size(); ++t)
    for (auto s : sums[t])
      y[t] += x[s];
  return y;
}

MarginalizationMap marginalization_map(const DesignMatrix& a, const Face& target)
{
  const auto& complex = a.complex();
  Face s = target;
  std::sort(s.begin(), s.end());
  if (!complex.is_face(s))
    fail(ErrorKind::invalid_argument, "marginalization target is not a face of the complex");

  MarginalizationMap out;
  out.target = s;
  out.target_cells = cells_of(s, a.counts());
  out.map.source_dim = a.rows();
  out.map.sums.resize(out.target_cells.size());

  std::size_t block = 0;
  while (!std::includes(complex.facets()[block].begin(), complex.facets()[block].end(), s.begin(), s.end()))
    ++block;
  out.through_facet = complex.facets()[block];

  std::vector<std::size_t> pos;  // position of each target vertex inside the facet
  for (int v : s)
    pos.push_back(static_cast<std::size_t>(
        std::find(out.through_facet.begin(), out.through_facet.end(), v) - out.through_facet.begin()));
  for (std::size_t r = a.block_offsets()[block]; r < a.block_offsets()[block + 1]; ++r) {
    std::vector<int> restricted;
    for (auto p : pos)
      restricted.push_back(a.row_labels()[r].cell[p]);
    const auto t = static_cast<std::size_t>(
        std::lower_bound(out.target_cells.begin(), out.target_cells.end(), restricted) - out.target_cells.begin());
    out.map.sums[t].push_back(r);
  }
  return out;
}

CoordinateMap constant_map(std::size_t source_dim)
{
  CoordinateMap m;
  m.source_dim = source_dim;
  m.sums.assign(1, {});
  m.constant = true;
  return m;
}

namespace {

std::optional<std::size_t> unit_index(const Point& y)
{
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0)
      continue;
    if (y[i] != 1 || hit)
      return std::nullopt;
    hit = i;
  }
  return hit;
}

}  // namespace

FiberProductResult fiber_product(const std::vector<Point>& v1, const CoordinateMap& pi1, const std::vector<Point>& v2,
                                 const CoordinateMap& pi2)
{
  if (pi1.target_dim() != pi2.target_dim())
    fail(ErrorKind::invalid_argument, "the two maps have different targets");
  auto images = [&](const std::vector<Point>& v, const CoordinateMap& pi) {
    std::vector<std::size_t> out;
    for (const auto& x : v) {
      const auto u = unit_index(pi.apply(x));
      if (!u)
        fail(ErrorKind::precondition, "maps do not send vertices onto simplex vertices");
      out.push_back(*u);
    }
    return out;
  };
  const auto i1 = images(v1, pi1);
  const auto i2 = images(v2, pi2);

  FiberProductResult out;
  for (std::size_t a = 0; a < v1.size(); ++a)
    for (std::size_t b = 0; b < v2.size(); ++b) {
      if (i1[a] != i2[b])
        continue;
      Point z = v1[a];
      z.insert(z.end(), v2[b].begin(), v2[b].end());
      out.vertices.push_back(std::move(z));
      out.provenance.emplace_back(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

StateCounts restrict_counts(const SimplicialComplex& piece, const StateCounts& d)
{
  return StateCounts(piece, d.restricted_to(piece.ground_set()));
}

std::string facet_text(const Face& f) { return SimplicialComplex(std::vector<Face>{f}).to_string(); }

void verify_level(const SimplicialComplex& complex, const StateCounts& d, FactorizationReport& report)
{
  auto dec = find_reducible_decomposition(complex);
  if (!dec)
    fail(ErrorKind::precondition, "complex " + complex.to_string() + " is not reducible");

  const DesignMatrix a(complex, d);
  const DesignMatrix a1(dec->gamma1, restrict_counts(dec->gamma1, d));
  const DesignMatrix a2(dec->gamma2, restrict_counts(dec->gamma2, d));
  const auto pi1 = marginalization_map(a1, dec->separator);
  const auto pi2 = marginalization_map(a2, dec->separator);
  const auto fp = fiber_product(a1.columns(), pi1.map, a2.columns(), pi2.map);

  // Product coordinate feeding each row of A_{Γ,d}.
  std::vector<std::size_t> source(a.rows());
  nlohmann::json ident = nlohmann::json::array();
  for (std::size_t b = 0; b < complex.facets().size(); ++b) {
    const auto& f = complex.facets()[b];
    const auto& f1 = dec->gamma1.facets();
    const auto& f2 = dec->gamma2.facets();
    std::size_t base = 0;
    std::string side;
    if (auto it = std::find(f1.begin(), f1.end(), f); it != f1.end()) {
      base = a1.block_offsets()[static_cast<std::size_t>(it - f1.begin())];
      side = "gamma1";
    } else {
      auto jt = std::find(f2.begin(), f2.end(), f);
      base = a1.rows() + a2.block_offsets()[static_cast<std::size_t>(jt - f2.begin())];
      side = "gamma2";
    }
    for (std::size_t r = a.block_offsets()[b]; r < a.block_offsets()[b + 1]; ++r)
      source[r] = base + (r - a.block_offsets()[b]);
    ident.push_back({{"block", facet_text(f)},
                     {"from", side},
                     {"product_rows", {base, base + (a.block_offsets()[b + 1] - a.block_offsets()[b]) - 1}}});
  }
  ident.push_back({{"separator", dec->separator},
                   {"gamma1_through", facet_text(pi1.through_facet)},
                   {"gamma2_through", facet_text(pi2.through_facet)},
                   {"note", "separator marginals are matched, not stored twice"}});

  std::set<Point> direct;
  for (const auto& c : a.columns())
    direct.insert(c);
  std::set<Point> glued;
  for (const auto& z : fp.vertices) {
    Point x(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
      x[r] = z[source[r]];
    glued.insert(std::move(x));
  }

  FactorizationLevel level{complex, *dec, direct.size(), glued.size(), direct == glued, std::move(ident)};
  report.levels.push_back(std::move(level));

  for (const auto* piece : {&dec->gamma1, &dec->gamma2})
    if (piece->facets().size() >= 2 && find_reducible_decomposition(*piece))
      verify_level(*piece, restrict_counts(*piece, d), report);
}

}  // namespace

FactorizationReport verify_reducible_factorization(const SimplicialComplex& complex, const StateCounts& d)
{
  FactorizationReport report;
  verify_level(complex, d, report);
  report.holds = std::all_of(report.levels.begin(), report.levels.end(),
                             [](const FactorizationLevel& l) { return l.equal; });
  return report;
}

// ---------------------------------------------------------------------------

const char* to_string(TransferPrediction p)
{
  switch (p) {
  case TransferPrediction::gorenstein: return "gorenstein";
  case TransferPrediction::not_gorenstein: return "not_gorenstein";
  case TransferPrediction::undetermined: return "undetermined";
  }
  return "?";
}

TransferReport gorenstein_transfer_check(const SimplicialComplex& complex, const StateCounts& d,
                                         const GorensteinOptions& options)
{
  TransferReport out;
  out.direct = gorenstein_certificate(complex, d, options);
  auto finish = [&] {
    out.agrees = out.prediction == TransferPrediction::undetermined ||
                 (out.prediction == TransferPrediction::gorenstein) == out.direct.is_gorenstein;
    return out;
  };

  if (complex.facets().size() < 2) {
    out.precondition_note = "a simplex is not reducible";
    return finish();
  }
  if (!equal_weights(complex, d)) {
    out.precondition_note = "facet weights differ, so the complex cannot be Gorenstein";
    out.prediction = TransferPrediction::not_gorenstein;
    return finish();
  }
  // Clean decompositions keep both pieces equal-weight; prefer one.
  std::optional<ReducibleDecomposition> dec;
  for (auto& cand : all_reducible_decompositions(complex))
    if (cand.clean()) {
      dec = std::move(cand);
      break;
    }
  if (!dec)
    dec = find_reducible_decomposition(complex);
  if (!dec) {
    out.precondition_note = "complex is not reducible";
    return finish();
  }
  out.preconditions_met = true;
  out.decomposition = dec;

  const auto p1 = marginal_polytope(dec->gamma1, restrict_counts(dec->gamma1, d));
  const auto p2 = marginal_polytope(dec->gamma2, restrict_counts(dec->gamma2, d));
  out.piece1 = gorenstein_certificate(p1, options);
  out.piece2 = gorenstein_certificate(p2, options);

  const auto omega = static_cast<std::int64_t>(max_weight(complex, d));
  out.same_index = out.piece1->index == omega && out.piece2->index == omega;
  auto ones = [](const std::optional<Point>& p) {
    return p && std::all_of(p->begin(), p->end(), [](std::int64_t x) { return x == 1; });
  };
  out.interior_points_ones = ones(out.piece1->interior_point) && ones(out.piece2->interior_point);
  if (out.piece1->interior_point && out.piece2->interior_point) {
    const auto m1 = marginalization_map(p1.matrix, dec->separator);
    const auto m2 = marginalization_map(p2.matrix, dec->separator);
    out.projections_agree = m1.map.apply(*out.piece1->interior_point) == m2.map.apply(*out.piece2->interior_point);
  }
  out.hypotheses_hold = out.piece1->is_gorenstein && out.piece2->is_gorenstein && out.same_index &&
                        out.interior_points_ones && out.projections_agree;
  if (out.hypotheses_hold)
    out.prediction = TransferPrediction::gorenstein;
  else if (dec->clean())
    out.prediction = TransferPrediction::not_gorenstein;
  else
    out.prediction = TransferPrediction::undetermined;
  return finish();
}

}  // namespace margeo

#include "invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "lattice.hpp"
#include "triangulation.hpp"

namespace margeo {

MarginalPolytope marginal_polytope(const SimplicialComplex& complex, const StateCounts& d)
{
  DesignMatrix a(complex, d);
  VRep v = make_vrep(a.columns());
  HRep h = facet_enumeration(v);
  return MarginalPolytope{std::move(a), std::move(v), std::move(h), max_weight(complex, d)};
}

// ---------------------------------------------------------------------------
// codegree

CodegreeResult polytope_codegree(const VRep& v, const HRep& h)
{
  CodegreeResult out;
  out.dim = h.dim;
  SearchOptions interior;
  interior.interior_only = true;
  // A lattice polytope of dimension n has an interior point in (n+1)P.
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(h.dim) + 1; ++k) {
    auto pts = lattice_points_in_dilate(v, h, k, interior);
    out.evidence.push_back({k, pts.size()});
    if (!pts.empty()) {
      out.codegree = k;
      out.witness = pts.front();
      out.interior_points = std::move(pts);
      return out;
    }
  }
  fail(ErrorKind::internal, "no interior lattice point up to dilate dim+1");
}

CodegreeResult codegree(const MarginalPolytope& p)
{
  auto out = polytope_codegree(p.vertices, p.facets);
  out.omega = p.omega;
  out.conjecture_holds = static_cast<std::uint64_t>(out.codegree) == p.omega;
  return out;
}

CodegreeResult codegree(const SimplicialComplex& complex, const StateCounts& d)
{
  return codegree(marginal_polytope(complex, d));
}

// ---------------------------------------------------------------------------
// decomposition into generators

namespace {

using i64 = std::int64_t;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p)
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

/// Decides whether a lattice point of kP is a sum of k generators.
class Decomposer {
public:
  Decomposer(const HRep& h, std::vector<Point> generators) : gens_(std::move(generators))
  {
    for (const auto& e : h.inequalities)
      ineq_.push_back({to_point(e.a), to_int64(e.b)});
    for (const auto& e : h.equations)
      eq_.push_back({to_point(e.a), to_int64(e.b)});
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  bool member(const Point& x, i64 k) const
  {
    for (const auto& [a, b] : eq_)
      if (dot64(a, x) != k * b)
        return false;
    for (const auto& [a, b] : ineq_)
      if (dot64(a, x) > k * b)
        return false;
    return true;
  }

  bool decomposable(const Point& x, i64 k)
  {
    if (k == 1)
      return std::binary_search(gens_.begin(), gens_.end(), x);
    Point key = x;
    key.push_back(k);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    bool result = false;
    Point rest(x.size());
    for (const auto& g : gens_) {
      for (std::size_t i = 0; i < x.size(); ++i)
        rest[i] = x[i] - g[i];
      if (member(rest, k - 1) && decomposable(rest, k - 1)) {
        result = true;
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  static i64 dot64(const Point& a, const Point& x)
  {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i] * x[i];
    return s;
  }

  std::vector<Point> gens_;
  std::vector<std::pair<Point, i64>> ineq_, eq_;
  std::unordered_map<Point, bool, PointHash> memo_;
};

Point to_ambient(const LatticeFrame& f, const Point& y, i64 k)
{
  Point x(f.ambient);
  for (std::size_t r = 0; r < f.ambient; ++r) {
    Integer s = Integer(f.origin[r]) * k;
    for (std::size_t c = 0; c < f.dim; ++c)
      if (f.basis[r][c] != 0 && y[c] != 0)
        s += f.basis[r][c] * y[c];
    x[r] = to_int64(s);
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// normality

const char* to_string(LatticeMode m) { return m == LatticeMode::ambient ? "ambient" : "columns"; }

const char* to_string(NormalityMethod m)
{
  return m == NormalityMethod::triangulation ? "triangulation" : "dilate_scan";
}

const char* to_string(NormalityVerdict v)
{
  switch (v) {
  case NormalityVerdict::normal: return "normal";
  case NormalityVerdict::not_normal: return "not_normal";
  case NormalityVerdict::normal_up_to_bound: return "normal_up_to_bound";
  }
  return "?";
}

LatticeMode parse_lattice_mode(std::string_view s)
{
  if (s == "ambient")
    return LatticeMode::ambient;
  if (s == "columns")
    return LatticeMode::columns;
  fail(ErrorKind::invalid_argument, "lattice mode must be 'ambient' or 'columns'");
}

NormalityEvidence idp_normality(const VRep& v, const NormalityOptions& options)
{
  NormalityEvidence ev;
  ev.method = options.method;
  ev.mode = options.mode;
  const LatticeFrame frame = options.mode == LatticeMode::ambient ? ambient_frame(v) : column_frame(v);
  ev.lattice_index = column_lattice_index(v);
  const auto dim = static_cast<i64>(frame.dim);
  ev.degree_to = std::max<i64>(2, dim - 1);
  if (dim == 0) {
    ev.verdict = NormalityVerdict::normal;
    return ev;
  }

  // Work with the full-dimensional copy Q ⊂ Z^dim of P.
  const VRep q = make_vrep(frame.points);
  const HRep hq = facet_enumeration(q);
  Decomposer dec(hq, lattice_points_in_dilate(q, hq, 1));

  auto scan_degree = [&](i64 k, std::vector<Hole>& holes) {
    for (const auto& y : lattice_points_in_dilate(q, hq, k))
      if (!dec.decomposable(y, k))
        holes.push_back({k, to_ambient(frame, y, k)});
  };

  if (options.method == NormalityMethod::dilate_scan) {
    const i64 bound = options.max_degree > 0 ? options.max_degree : std::max<i64>(2, dim - 1);
    ev.degree_to = bound;
    for (i64 k = 2; k <= bound; ++k) {
      scan_degree(k, ev.holes);
      if (!ev.holes.empty()) {
        ev.verdict = NormalityVerdict::not_normal;
        ev.degree_to = k;
        return ev;
      }
    }
    ev.verdict = bound >= dim - 1 ? NormalityVerdict::normal : NormalityVerdict::normal_up_to_bound;
    return ev;
  }

  // Facet width one everywhere means Q is compressed: every pulling
  // triangulation is unimodular, so Q is normal.
  ev.compressed = options.compressed_shortcut && std::all_of(hq.inequalities.begin(), hq.inequalities.end(), [&](const Constraint& c) {
    Integer width = 0;
    for (const auto& x : q.vertices)
      width = std::max(width, c.b - dot(c.a, x));
    return width == 1;
  });
  if (ev.compressed) {
    ev.verdict = NormalityVerdict::normal;
    ev.degree_to = dim;
    return ev;
  }

  // Every lattice point of the cone over Q reduces, modulo the vertices of a
  // simplex containing it, to a point of that simplex's half-open
  // parallelepiped. Q is normal iff all those points decompose.
  ev.degree_to = dim;
  const auto simplices = placing_triangulation(q.vertices, frame.dim);
  ev.simplices = simplices.size();
  std::set<std::pair<i64, Point>> bad;
  Point y(frame.dim);
  for (const auto& s : simplices) {
    for_each_parallelepiped_point(q.vertices, s, [&](const Point& p) {
      ++ev.parallelepiped_points;
      const i64 height = p[0];
      if (height < 2)
        return;
      std::copy(p.begin() + 1, p.end(), y.begin());
      if (!dec.decomposable(y, height))
        bad.insert({height, y});
    });
  }
  if (bad.empty()) {
    ev.verdict = NormalityVerdict::normal;
    return ev;
  }
  ev.verdict = NormalityVerdict::not_normal;
  const i64 lowest = bad.begin()->first;
  if (options.list_minimal_holes) {
    try {
      std::vector<Hole> holes;
      scan_degree(lowest, holes);
      ev.holes = std::move(holes);
      return ev;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::limit)
        throw;
    }
  }
  for (const auto& [k, pt] : bad)
    ev.holes.push_back({k, to_ambient(frame, pt, k)});
  return ev;
}

// ---------------------------------------------------------------------------
// holes

std::vector<Point> holes_in_dilate(const VRep& generators, const HRep& h, std::int64_t k)
{
  if (k < 1)
    fail(ErrorKind::invalid_argument, "dilation factor must be at least 1");
  Decomposer dec(h, generators.vertices);
  std::vector<Point> out;
  for (auto& x : lattice_points_in_dilate(generators, h, k))
    if (!dec.decomposable(x, k))
      out.push_back(std::move(x));
  return out;
}

std::vector<Point> holes_in_dilate(const SimplicialComplex& complex, const StateCounts& d, std::int64_t k)
{
  const auto p = marginal_polytope(complex, d);
  return holes_in_dilate(p.vertices, p.facets, k);
}

// ---------------------------------------------------------------------------
// Gorenstein

const char* to_string(StepStatus s)
{
  switch (s) {
  case StepStatus::passed: return "passed";
  case StepStatus::failed: return "failed";
  case StepStatus::skipped: return "skipped";
  }
  return "?";
}

GorensteinCertificate gorenstein_certificate(const MarginalPolytope& p, const GorensteinOptions& options)
{
  GorensteinCertificate cert;
  const auto& complex = p.matrix.complex();
  const auto& d = p.matrix.counts();
  cert.omega = p.omega;
  cert.equal_weights = equal_weights(complex, d);

  auto record = [&](std::string name, StepStatus status, std::string detail) {
    if (status == StepStatus::failed && cert.failure_reason.empty())
      cert.failure_reason = name + ": " + detail;
    cert.steps.push_back({std::move(name), status, std::move(detail)});
  };
  auto skip_rest = [&](std::initializer_list<const char*> names, const std::string& why) {
    for (const char* n : names)
      record(n, StepStatus::skipped, why);
  };

  if (!cert.equal_weights) {
    std::string detail = "facet weights";
    for (const auto& f : complex.facets())
      detail += " " + std::to_string(weight(f, d));
    detail += " are not all equal";
    record("equal_weights", StepStatus::failed, detail);
    skip_rest({"unique_interior_point", "interior_point_is_ones", "facet_distances", "normality"},
              "equal-weight gate failed");
    return cert;
  }
  record("equal_weights", StepStatus::passed, "every facet has weight " + std::to_string(p.omega));

  const auto cd = codegree(p);
  cert.index = cd.codegree;
  cert.interior_points = cd.interior_points;
  const bool unique = cd.interior_points.size() == 1;
  if (unique)
    cert.interior_point = cd.interior_points.front();
  record("unique_interior_point", unique ? StepStatus::passed : StepStatus::failed,
         "codegree " + std::to_string(cd.codegree) + " with " + std::to_string(cd.interior_points.size()) +
             " interior lattice point(s)");

  auto stop = [&] { return options.short_circuit && !cert.failure_reason.empty(); };

  if (!unique || stop()) {
    skip_rest({"interior_point_is_ones", "facet_distances"},
              unique ? "short-circuited" : "no unique interior lattice point");
  } else {
    const auto& pt = *cert.interior_point;
    const bool ones = std::all_of(pt.begin(), pt.end(), [](std::int64_t x) { return x == 1; });
    record("interior_point_is_ones", ones ? StepStatus::passed : StepStatus::failed,
           "interior point " + to_string(pt));
    if (stop()) {
      skip_rest({"facet_distances"}, "short-circuited");
    } else {
      std::size_t off = 0;
      for (const auto& e : p.facets.inequalities) {
        Integer dist = e.b * cd.codegree - dot(e.a, pt);
        if (dist != 1)
          ++off;
        cert.distances.push_back(std::move(dist));
      }
      record("facet_distances", off == 0 ? StepStatus::passed : StepStatus::failed,
             std::to_string(off) + " of " + std::to_string(p.facets.inequalities.size()) +
                 " facets at lattice distance other than 1");
    }
  }

  if (stop()) {
    skip_rest({"normality"}, "short-circuited");
  } else {
    cert.normality = idp_normality(p.vertices, options.normality);
    const bool normal = cert.normality->verdict == NormalityVerdict::normal;
    std::string detail = std::string(to_string(cert.normality->verdict)) + " (" + to_string(cert.normality->method) +
                         ", " + to_string(cert.normality->mode) + " lattice)";
    record("normality", normal ? StepStatus::passed : StepStatus::failed, detail);
  }

  cert.is_gorenstein = std::all_of(cert.steps.begin(), cert.steps.end(),
                                   [](const GorensteinStep& s) { return s.status == StepStatus::passed; });
  return cert;
}

GorensteinCertificate gorenstein_certificate(const SimplicialComplex& complex, const StateCounts& d,
                                             const GorensteinOptions& options)
{
  return gorenstein_certificate(marginal_polytope(complex, d), options);
}

// ---------------------------------------------------------------------------
// wMLT

WmltResult wmlt_search(const MarginalPolytope& p, const WmltOptions& options)
{
  WmltResult out;
  const auto cd = codegree(p);
  out.codegree = cd.codegree;
  out.start = options.start_at_codegree ? cd.codegree : 1;
  out.m_max = options.m_max > 0 ? options.m_max : cd.codegree + 4;
  if (out.m_max < out.start)
    fail(ErrorKind::invalid_argument, "m_max " + std::to_string(out.m_max) + " is below the starting sample size " +
                                          std::to_string(out.start));

  const HRep cone = cone_hrep(p.facets, normalization_functional(p.matrix));
  const auto cols = p.matrix.columns();
  std::vector<std::size_t> distinct;  // first column index of each distinct column
  {
    std::set<Point> seen;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (seen.insert(cols[c]).second)
        distinct.push_back(c);
  }

  struct Level {
    std::vector<Point> points;
    std::vector<std::pair<std::size_t, std::size_t>> parent;  // (index in previous level, column)
  };
  std::vector<Level> levels;

  for (std::int64_t m = 1; m <= out.m_max; ++m) {
    Level next;
    std::unordered_map<Point, std::size_t, PointHash> index;
    auto add = [&](Point x, std::size_t prev, std::size_t col) {
      if (index.emplace(x, next.points.size()).second) {
        next.points.push_back(std::move(x));
        next.parent.emplace_back(prev, col);
      }
    };
    if (m == 1) {
      for (auto c : distinct)
        add(cols[c], 0, c);
    } else {
      const auto& prev = levels.back();
      for (std::size_t i = 0; i < prev.points.size(); ++i)
        for (auto c : distinct) {
          Point x = prev.points[i];
          for (std::size_t r = 0; r < x.size(); ++r)
            x[r] += cols[c][r];
          add(std::move(x), i, c);
          if (next.points.size() > options.max_states) {
            out.truncated = true;
            out.per_m.push_back({m, next.points.size(), "exceeds search bound"});
            return out;
          }
        }
    }
    // Lexicographic order makes the reported witness deterministic.
    std::vector<std::size_t> order(next.points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return next.points[a] < next.points[b]; });
    Level sorted;
    for (auto i : order) {
      sorted.points.push_back(std::move(next.points[i]));
      sorted.parent.push_back(next.parent[i]);
    }
    levels.push_back(std::move(sorted));
    const auto& level = levels.back();

    if (m < out.start) {
      out.per_m.push_back({m, level.points.size(), "below codegree, not tested"});
      continue;
    }
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < level.points.size() && !hit; ++i)
      if (classify_point(level.points[i], cone) == PointClass::relative_interior)
        hit = i;
    if (!hit) {
      out.per_m.push_back({m, level.points.size(), "no sufficient statistic in the relative interior"});
      continue;
    }
    out.per_m.push_back({m, level.points.size(), "relative-interior sufficient statistic found"});
    out.wmlt = m;
    out.witness_marginal = level.points[*hit];
    out.witness_u.assign(cols.size(), 0);
    std::size_t idx = *hit;
    for (std::int64_t l = m; l >= 1; --l) {
      const auto [prev, col] = levels[static_cast<std::size_t>(l - 1)].parent[idx];
      ++out.witness_u[col];
      idx = prev;
    }
    return out;
  }
  return out;
}

WmltResult wmlt_search(const SimplicialComplex& complex, const StateCounts& d, const WmltOptions& options)
{
  return wmlt_search(marginal_polytope(complex, d), options);
}

}  // namespace margeo

#include "geometry.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lattice.hpp"
#include "lp.hpp"

namespace margeo {

VRep make_vrep(std::vector<Point> points)
{
  if (points.empty())
    fail(ErrorKind::invalid_argument, "a polytope needs at least one vertex");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n)
      fail(ErrorKind::invalid_argument, "vertices have different dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return VRep{n, std::move(points)};
}

// ---------------------------------------------------------------------------
// frames

LatticeFrame ambient_frame(const VRep& v)
{
  const std::size_t n = v.ambient;
  const std::size_t cols = v.vertices.size() - 1;
  LatticeFrame f;
  f.ambient = n;
  f.origin = v.vertices.front();

  IntMatrix diffs(n, IntVector(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < n; ++r)
      diffs[r][c] = v.vertices[c + 1][r] - f.origin[r];
  auto h = row_hermite(std::move(diffs), true);
  const std::size_t dim = h.rank;
  f.dim = dim;

  f.basis.assign(n, IntVector(dim));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      f.basis[r][c] = h.inverse[r][c];
  f.coords.assign(h.transform.begin(), h.transform.begin() + static_cast<std::ptrdiff_t>(dim));

  IntMatrix annihilator(h.transform.begin() + static_cast<std::ptrdiff_t>(dim), h.transform.end());
  if (!annihilator.empty()) {
    auto e = row_hermite(std::move(annihilator), false);
    f.equations.assign(e.reduced.begin(), e.reduced.begin() + static_cast<std::ptrdiff_t>(e.rank));
  }

  f.points.reserve(v.vertices.size());
  for (const auto& p : v.vertices) {
    Point y(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      Integer s = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (f.coords[i][r] != 0 && p[r] != f.origin[r])
          s += f.coords[i][r] * (p[r] - f.origin[r]);
      y[i] = to_int64(s);
    }
    f.points.push_back(std::move(y));
  }
  return f;
}

namespace {

/// Rows generating the lattice spanned by the frame points, as a square
/// upper-triangular matrix.
IntMatrix generated_lattice(const LatticeFrame& f)
{
  IntMatrix rows;
  for (const auto& p : f.points)
    rows.push_back(to_integers(p));
  auto h = row_hermite(std::move(rows), false);
  return IntMatrix(h.reduced.begin(), h.reduced.begin() + static_cast<std::ptrdiff_t>(f.dim));
}

}  // namespace

Integer column_lattice_index(const VRep& v)
{
  const auto f = ambient_frame(v);
  if (f.dim == 0)
    return 1;
  return abs(determinant(generated_lattice(f)));
}

LatticeFrame column_frame(const VRep& v)
{
  auto f = ambient_frame(v);
  if (f.dim == 0)
    return f;
  // Columns of g (= rowsᵀ) form a basis of the generated lattice: y = g y'.
  const IntMatrix g = transpose(generated_lattice(f), f.dim);
  const auto inv = scaled_inverse(g);
  for (auto& p : f.points) {
    Point q(f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < f.dim; ++j)
        s += inv.adjugate[i][j] * p[j];
      if (s % inv.det != 0)
        fail(ErrorKind::internal, "vertex outside its own generated lattice");
      q[i] = to_int64(s / inv.det);
    }
    p = std::move(q);
  }
  IntMatrix basis(f.ambient, IntVector(f.dim, 0));
  for (std::size_t r = 0; r < f.ambient; ++r)
    for (std::size_t c = 0; c < f.dim; ++c)
      for (std::size_t k = 0; k < f.dim; ++k)
        if (f.basis[r][k] != 0 && g[k][c] != 0)
          basis[r][c] += f.basis[r][k] * g[k][c];
  f.basis = std::move(basis);
  f.coords.clear();
  return f;
}

// ---------------------------------------------------------------------------
// double description

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i])
      return false;
  return true;
}

std::size_t popcount(const Bits& a)
{
  std::size_t n = 0;
  for (auto w : a)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

struct Ray {
  IntVector c;
  Bits zeros;
};

Integer eval(const IntVector& c, const Point& y)
{
  Integer s = c[0];
  for (std::size_t i = 0; i < y.size(); ++i)
    if (c[i + 1] != 0 && y[i] != 0)
      s += c[i + 1] * y[i];
  return s;
}

}  // namespace

std::vector<IntVector> cone_facets(const std::vector<Point>& points, std::size_t dim)
{
  const std::size_t total = points.size();
  const std::size_t words = (total + 63) / 64;
  auto set_bit = [](Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); };

  // Greedy choice of dim+1 affinely independent points, in input order.
  std::vector<std::size_t> initial;
  IntMatrix chosen;
  for (std::size_t i = 0; i < total && initial.size() < dim + 1; ++i) {
    IntVector w(dim + 1);
    w[0] = 1;
    for (std::size_t k = 0; k < dim; ++k)
      w[k + 1] = points[i][k];
    chosen.push_back(w);
    if (rank_of(chosen) == chosen.size())
      initial.push_back(i);
    else
      chosen.pop_back();
  }
  if (initial.size() != dim + 1)
    fail(ErrorKind::internal, "points do not span the stated dimension");

  // Rays of the initial simplicial cone: columns of the inverse.
  const auto inv = scaled_inverse(chosen);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k <= dim; ++k) {
    IntVector c(dim + 1);
    for (std::size_t r = 0; r <= dim; ++r)
      c[r] = inv.adjugate[r][k];
    make_primitive(c);
    Ray ray{std::move(c), Bits(words, 0)};
    for (std::size_t j = 0; j <= dim; ++j)
      if (j != k)
        set_bit(ray.zeros, initial[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(total, false);
  for (auto i : initial)
    done[i] = true;

  for (std::size_t idx = 0; idx < total; ++idx) {
    if (done[idx])
      continue;
    done[idx] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = eval(rays[r].c, points[idx]);
      if (s[r] > 0)
        pos.push_back(r);
      else if (s[r] < 0)
        neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (s[r] == 0)
          set_bit(rays[r].zeros, idx);
      continue;
    }

    std::vector<Ray> next;
    for (auto p : pos)
      for (auto q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w)
          common[w] = rays[p].zeros[w] & rays[q].zeros[w];
        if (dim >= 1 && popcount(common) + 1 < dim)
          continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset_of(common, rays[r].zeros))
            adjacent = false;
        if (!adjacent)
          continue;
        IntVector c(dim + 1);
        for (std::size_t k = 0; k <= dim; ++k)
          c[k] = s[p] * rays[q].c[k] - s[q] * rays[p].c[k];
        make_primitive(c);
        set_bit(common, idx);
        next.push_back(Ray{std::move(c), std::move(common)});
      }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0)
        continue;
      if (s[r] == 0)
        set_bit(rays[r].zeros, idx);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    IntVector tail(r.c.begin() + 1, r.c.end());
    const Integer g = gcd_of(tail);
    if (g > 1)
      for (auto& x : r.c)
        x /= g;
    out.push_back(std::move(r.c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// H-representation

std::vector<Constraint> affine_hull(const VRep& v)
{
  const auto f = ambient_frame(v);
  std::vector<Constraint> out;
  for (const auto& e : f.equations)
    out.push_back({e, dot(e, f.origin)});
  return out;
}

namespace {

void reduce_modulo(IntVector& a, const IntMatrix& equations)
{
  for (const auto& e : equations) {
    std::size_t p = 0;
    while (e[p] == 0)
      ++p;
    const Integer q = floor_div(a[p], e[p]);
    if (q == 0)
      continue;
    for (std::size_t j = p; j < a.size(); ++j)
      if (e[j] != 0)
        a[j] -= q * e[j];
  }
}

}  // namespace

HRep facet_enumeration(const VRep& v)
{
  const auto f = ambient_frame(v);
  HRep h;
  h.ambient = v.ambient;
  h.dim = f.dim;
  for (const auto& e : f.equations)
    h.equations.push_back({e, dot(e, f.origin)});
  if (f.dim == 0)
    return h;

  for (const auto& c : cone_facets(f.points, f.dim)) {
    const IntVector normal(c.begin() + 1, c.end());
    IntVector a(v.ambient, 0);
    bool unit = false;
    // Prefer a coordinate functional when one represents the facet.
    for (std::size_t i = 0; i < v.ambient && !unit; ++i) {
      bool same = true, opposite = true;
      for (std::size_t k = 0; k < f.dim; ++k) {
        same = same && f.basis[i][k] == normal[k];
        opposite = opposite && f.basis[i][k] == -normal[k];
      }
      if (same || opposite) {
        a[i] = same ? -1 : 1;
        unit = true;
      }
    }
    if (!unit) {
      for (std::size_t k = 0; k < f.dim; ++k) {
        if (normal[k] == 0)
          continue;
        for (std::size_t j = 0; j < v.ambient; ++j)
          if (f.coords[k][j] != 0)
            a[j] -= normal[k] * f.coords[k][j];
      }
      reduce_modulo(a, f.equations);
    }
    Integer b = dot(a, v.vertices.front());
    for (const auto& p : v.vertices)
      b = std::max(b, dot(a, p));
    h.inequalities.push_back({std::move(a), std::move(b)});
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const Constraint& x, const Constraint& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  return h;
}

HRep dilate(const HRep& h, std::int64_t k)
{
  if (k <= 0)
    fail(ErrorKind::invalid_argument, "dilation factor must be positive");
  HRep out = h;
  for (auto& e : out.equations)
    e.b *= k;
  for (auto& e : out.inequalities)
    e.b *= k;
  return out;
}

namespace {

IntVector primitive_row(const IntVector& a, const Integer& b, const RatVector& w)
{
  RatVector r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    r[j] = Rational(a[j]) - Rational(b) * w[j];
  return primitive_multiple(r);
}

}  // namespace

HRep cone_hrep(const HRep& h, const RatVector& w)
{
  if (w.size() != h.ambient)
    fail(ErrorKind::invalid_argument, "normalization functional has the wrong length");
  HRep out;
  out.ambient = h.ambient;
  out.dim = h.dim + 1;
  IntMatrix eq;
  for (const auto& e : h.equations) {
    auto row = primitive_row(e.a, e.b, w);
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; }))
      eq.push_back(std::move(row));
  }
  if (!eq.empty()) {
    auto r = row_hermite(std::move(eq), false);
    for (std::size_t i = 0; i < r.rank; ++i)
      out.equations.push_back({r.reduced[i], 0});
  }
  for (const auto& ineq : h.inequalities)
    out.inequalities.push_back({primitive_row(ineq.a, ineq.b, w), 0});
  return out;
}

// ---------------------------------------------------------------------------
// classification and membership

const char* to_string(PointClass c)
{
  switch (c) {
  case PointClass::outside: return "outside";
  case PointClass::boundary: return "boundary";
  case PointClass::relative_interior: return "relative_interior";
  }
  return "?";
}

PointClass classify_point(const RatVector& x, const HRep& h)
{
  if (x.size() != h.ambient)
    fail(ErrorKind::invalid_argument, "point has the wrong dimension");
  for (const auto& e : h.equations)
    if (dot(e.a, x) != Rational(e.b))
      return PointClass::outside;
  bool tight = false;
  for (const auto& e : h.inequalities) {
    const Rational s = dot(e.a, x);
    if (s > Rational(e.b))
      return PointClass::outside;
    tight = tight || s == Rational(e.b);
  }
  return tight ? PointClass::boundary : PointClass::relative_interior;
}

PointClass classify_point(const Point& x, const HRep& h)
{
  if (x.size() != h.ambient)
    fail(ErrorKind::invalid_argument, "point has the wrong dimension");
  for (const auto& e : h.equations)
    if (dot(e.a, x) != e.b)
      return PointClass::outside;
  bool tight = false;
  for (const auto& e : h.inequalities) {
    const Integer s = dot(e.a, x);
    if (s > e.b)
      return PointClass::outside;
    tight = tight || s == e.b;
  }
  return tight ? PointClass::boundary : PointClass::relative_interior;
}

bool contains(const HRep& h, const Point& x) { return classify_point(x, h) != PointClass::outside; }

Membership convex_membership(const RatVector& x, const VRep& v)
{
  if (x.size() != v.ambient)
    fail(ErrorKind::invalid_argument, "point has the wrong dimension");
  const std::size_t n = v.ambient, m = v.vertices.size();
  RatMatrix a(n + 1, RatVector(m));
  RatVector b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      a[r][c] = v.vertices[c][r];
    b[r] = x[r];
  }
  for (std::size_t c = 0; c < m; ++c)
    a[n][c] = 1;
  b[n] = 1;

  const auto lp = solve_standard_form(a, b, RatVector(m, 0));
  Membership out;
  if (lp.status == LpStatus::optimal) {
    out.member = true;
    out.lambda = lp.x;
    return out;
  }
  out.separator.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(n));
  out.threshold = -lp.farkas[n];
  return out;
}

Integer lattice_distance(const Point& x, const Constraint& inequality)
{
  const Integer d = inequality.b - dot(inequality.a, x);
  if (d < 0)
    fail(ErrorKind::precondition, "point violates the inequality");
  return d;
}

// ---------------------------------------------------------------------------
// export

std::string to_text(const HRep& h)
{
  std::ostringstream os;
  auto line = [&](const Constraint& c, const char* rel) {
    for (std::size_t j = 0; j < c.a.size(); ++j)
      os << (j ? " " : "") << c.a[j];
    os << ' ' << rel << ' ' << c.b << '\n';
  };
  for (const auto& e : h.equations)
    line(e, "==");
  for (const auto& e : h.inequalities)
    line(e, "<=");
  return os.str();
}

namespace {

nlohmann::json constraint_json(const Constraint& c)
{
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : c.a)
    arr.push_back(to_int64(x));
  return {{"a", arr}, {"b", to_int64(c.b)}};
}

}  // namespace

nlohmann::json to_json(const HRep& h)
{
  nlohmann::json eq = nlohmann::json::array(), in = nlohmann::json::array();
  for (const auto& e : h.equations)
    eq.push_back(constraint_json(e));
  for (const auto& e : h.inequalities)
    in.push_back(constraint_json(e));
  return {{"ambient", h.ambient}, {"dim", h.dim}, {"equations", eq}, {"inequalities", in}};
}

}  // namespace margeo

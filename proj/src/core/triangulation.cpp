#include "triangulation.hpp"

#include <algorithm>
#include <map>

#include "lattice.hpp"

namespace margeo {

namespace {

struct BoundaryFacet {
  std::vector<std::size_t> vertices;  // sorted
  IntVector normal;                   // inside: normal·y ≤ offset
  Integer offset;
};

Integer eval(const IntVector& c, const Point& y)
{
  Integer s = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (c[i] != 0 && y[i] != 0)
      s += c[i] * y[i];
  return s;
}

BoundaryFacet make_facet(const std::vector<Point>& points, std::vector<std::size_t> vertices, const Point& reference,
                         const Integer& reference_scale)
{
  std::sort(vertices.begin(), vertices.end());
  const auto& base = points[vertices.front()];
  const std::size_t dim = base.size();
  IntMatrix diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    IntVector row(dim);
    for (std::size_t k = 0; k < dim; ++k)
      row[k] = points[vertices[i]][k] - base[k];
    diffs.push_back(std::move(row));
  }
  auto kernel = kernel_basis(diffs, dim);
  if (kernel.size() != 1)
    fail(ErrorKind::internal, "degenerate boundary facet in triangulation");
  BoundaryFacet f{std::move(vertices), std::move(kernel.front()), 0};
  f.offset = eval(f.normal, base);
  // The reference point (scaled) lies strictly inside.
  if (eval(f.normal, reference) > f.offset * reference_scale) {
    for (auto& x : f.normal)
      x = -x;
    f.offset = -f.offset;
  }
  return f;
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<Point>& points, std::size_t dim)
{
  std::vector<std::vector<std::size_t>> simplices;
  if (dim == 0) {
    simplices.push_back({0});
    return simplices;
  }
  std::vector<std::size_t> initial;
  IntMatrix chosen;
  for (std::size_t i = 0; i < points.size() && initial.size() < dim + 1; ++i) {
    IntVector w(dim + 1);
    w[0] = 1;
    for (std::size_t k = 0; k < dim; ++k)
      w[k + 1] = points[i][k];
    chosen.push_back(std::move(w));
    if (rank_of(chosen) == chosen.size())
      initial.push_back(i);
    else
      chosen.pop_back();
  }
  if (initial.size() != dim + 1)
    fail(ErrorKind::internal, "points are not full-dimensional");
  simplices.push_back(initial);

  Point reference(dim, 0);
  for (auto i : initial)
    for (std::size_t k = 0; k < dim; ++k)
      reference[k] += points[i][k];
  const Integer scale = static_cast<long>(dim + 1);

  std::vector<BoundaryFacet> boundary;
  for (std::size_t drop = 0; drop <= dim; ++drop) {
    std::vector<std::size_t> verts;
    for (std::size_t j = 0; j <= dim; ++j)
      if (j != drop)
        verts.push_back(initial[j]);
    boundary.push_back(make_facet(points, std::move(verts), reference, scale));
  }

  std::vector<bool> used(points.size(), false);
  for (auto i : initial)
    used[i] = true;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (used[p])
      continue;
    std::vector<BoundaryFacet> kept;
    std::vector<const BoundaryFacet*> visible;
    for (const auto& f : boundary)
      if (eval(f.normal, points[p]) > f.offset)
        visible.push_back(&f);
    if (visible.empty())
      continue;

    std::map<std::vector<std::size_t>, int> ridges;
    for (const auto* f : visible) {
      auto simplex = f->vertices;
      simplex.push_back(p);
      simplices.push_back(std::move(simplex));
      for (std::size_t drop = 0; drop < f->vertices.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t j = 0; j < f->vertices.size(); ++j)
          if (j != drop)
            ridge.push_back(f->vertices[j]);
        ++ridges[ridge];
      }
    }
    std::vector<BoundaryFacet> added;
    for (const auto& [ridge, count] : ridges) {
      if (count != 1)
        continue;
      auto verts = ridge;
      verts.push_back(p);
      added.push_back(make_facet(points, std::move(verts), reference, scale));
    }
    for (auto& f : boundary)
      if (std::find(visible.begin(), visible.end(), &f) == visible.end())
        kept.push_back(std::move(f));
    for (auto& f : added)
      kept.push_back(std::move(f));
    boundary = std::move(kept);
  }
  return simplices;
}

Integer for_each_parallelepiped_point(const std::vector<Point>& points, const std::vector<std::size_t>& simplex,
                                      const std::function<void(const Point&)>& visit)
{
  const std::size_t n = simplex.size();
  IntMatrix w(n, IntVector(n));  // columns are (1, y_i)
  for (std::size_t i = 0; i < n; ++i) {
    w[0][i] = 1;
    for (std::size_t k = 1; k < n; ++k)
      w[k][i] = points[simplex[i]][k - 1];
  }
  const auto inv = scaled_inverse(w);
  const Integer volume = inv.det;
  if (volume == 1)
    return volume;
  if (volume > 50'000'000)
    fail(ErrorKind::limit, "simplex volume " + volume.str() + " too large for parallelepiped enumeration");

  // Coset representatives of Z^n modulo the column lattice of w: the lattice
  // equals that of the lower-triangular (row Hermite form of wᵀ)ᵀ.
  const auto h = row_hermite(transpose(w, n), false);
  std::vector<std::int64_t> diag(n);
  for (std::size_t i = 0; i < n; ++i)
    diag[i] = to_int64(h.reduced[i][i]);

  const std::int64_t det = to_int64(volume);
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n));
  std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      adj[i][j] = to_int64(inv.adjugate[i][j]);
      cols[i][j] = to_int64(w[i][j]);
    }

  std::vector<std::int64_t> z(n, 0);
  std::vector<std::int64_t> lambda(n);
  Point p(n);
  while (true) {
    // advance the odometer; the all-zero representative is skipped
    std::size_t k = 0;
    while (k < n && ++z[k] == diag[k])
      z[k++] = 0;
    if (k == n)
      break;
    for (std::size_t i = 0; i < n; ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += static_cast<__int128>(adj[i][j]) * z[j];
      s %= det;
      if (s < 0)
        s += det;
      lambda[i] = static_cast<std::int64_t>(s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      __int128 s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += static_cast<__int128>(cols[r][i]) * lambda[i];
      p[r] = static_cast<std::int64_t>(s / det);
    }
    visit(p);
  }
  return volume;
}

}  // namespace margeo

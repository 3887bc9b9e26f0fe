#pragma once

// Brute-force reference implementations used to cross-check the library.
// None of these call into the code they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Facets = std::vector<std::vector<int>>;
using Table = std::vector<std::vector<int>>;

/// A_{Γ,d} straight from the definition: rows (facet, cell) with cells in
/// lexicographic order, columns all joint states in lexicographic order,
/// entry 1 iff the joint state restricts to the cell.
inline Table design_matrix(const Facets& facets, const std::vector<int>& ground, const std::vector<int>& d)
{
  auto pos = [&](int v) { return static_cast<std::size_t>(std::find(ground.begin(), ground.end(), v) - ground.begin()); };
  std::vector<std::vector<int>> joint{{}};
  for (std::size_t g = 0; g < ground.size(); ++g) {
    std::vector<std::vector<int>> next;
    for (const auto& p : joint)
      for (int s = 1; s <= d[g]; ++s) {
        auto q = p;
        q.push_back(s);
        next.push_back(q);
      }
    joint = next;
  }
  Table rows;
  for (const auto& f : facets) {
    std::vector<std::vector<int>> cells{{}};
    for (int v : f) {
      std::vector<std::vector<int>> next;
      for (const auto& c : cells)
        for (int s = 1; s <= d[pos(v)]; ++s) {
          auto q = c;
          q.push_back(s);
          next.push_back(q);
        }
      cells = next;
    }
    for (const auto& c : cells) {
      std::vector<int> row;
      for (const auto& j : joint) {
        bool match = true;
        for (std::size_t t = 0; t < f.size(); ++t)
          match = match && j[pos(f[t])] == c[t];
        row.push_back(match ? 1 : 0);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// graphs on vertices 1..n given by edge lists

using Edges = std::vector<std::pair<int, int>>;

inline std::vector<std::vector<bool>> adjacency(int n, const Edges& e)
{
  std::vector<std::vector<bool>> a(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : e)
    a[u][v] = a[v][u] = true;
  return a;
}

inline bool connected(int n, const Edges& e)
{
  auto a = adjacency(n, e);
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 1; v <= n; ++v)
      if (a[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v])
      return false;
  return true;
}

/// No induced cycle of length at least four.
inline bool chordal(int n, const Edges& e)
{
  auto a = adjacency(n, e);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1)
        vs.push_back(v);
    if (vs.size() < 4)
      continue;
    bool all_two = true;
    for (int u : vs) {
      int deg = 0;
      for (int v : vs)
        deg += a[u][v];
      all_two = all_two && deg == 2;
    }
    if (!all_two)
      continue;
    // 2-regular and connected means one cycle.
    std::set<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : vs)
        if (a[u][v] && seen.insert(v).second)
          stack.push_back(v);
    }
    if (seen.size() == vs.size())
      return false;
  }
  return true;
}

namespace detail {

using EdgeSet = std::set<std::pair<int, int>>;

inline EdgeSet normalize(const EdgeSet& e)
{
  EdgeSet out;
  for (auto [u, v] : e)
    if (u != v)
      out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

inline bool has_k4_subgraph(const EdgeSet& e)
{
  std::set<int> vs;
  for (auto [u, v] : e) {
    vs.insert(u);
    vs.insert(v);
  }
  std::vector<int> list(vs.begin(), vs.end());
  const std::size_t m = list.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          int q[4] = {list[a], list[b], list[c], list[d]};
          bool all = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              all = all && e.count({std::min(q[i], q[j]), std::max(q[i], q[j])});
          if (all)
            return true;
        }
  return false;
}

inline bool has_k4_minor(const EdgeSet& e, std::map<EdgeSet, bool>& memo)
{
  if (e.size() < 6)
    return false;
  if (auto it = memo.find(e); it != memo.end())
    return it->second;
  bool found = has_k4_subgraph(e);
  for (auto it = e.begin(); !found && it != e.end(); ++it) {
    EdgeSet deleted = e;
    deleted.erase(*it);
    if (has_k4_minor(deleted, memo)) {
      found = true;
      break;
    }
    const auto [keep, gone] = *it;
    EdgeSet contracted;
    for (auto [u, v] : e)
      contracted.insert({u == gone ? keep : u, v == gone ? keep : v});
    if (has_k4_minor(normalize(contracted), memo))
      found = true;
  }
  memo[e] = found;
  return found;
}

}  // namespace detail

inline bool k4_minor_free(const Edges& e)
{
  detail::EdgeSet s;
  for (auto [u, v] : e)
    s.insert({std::min(u, v), std::max(u, v)});
  std::map<detail::EdgeSet, bool> memo;
  return !detail::has_k4_minor(s, memo);
}

/// Every graph on [n] (edge subsets of K_n), no isomorphism reduction.
inline std::vector<Edges> all_graphs(int n)
{
  Edges all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      all.push_back({u, v});
  std::vector<Edges> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    Edges e;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1)
        e.push_back(all[i]);
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// complexes

/// Antichains of nonempty subsets of [n] whose union is [n], one per
/// isomorphism class (minimum over all relabelings as the key).
inline std::vector<Facets> all_complexes(int n)
{
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s <= full; ++s)
    subsets.push_back(s);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<unsigned>> seen;
  std::vector<Facets> out;
  std::vector<unsigned> chosen;
  auto key_of = [&](const std::vector<unsigned>& sets) {
    std::vector<unsigned> best;
    for (const auto& perm : perms) {
      std::vector<unsigned> mapped;
      for (unsigned s : sets) {
        unsigned t = 0;
        for (int b = 0; b < n; ++b)
          if (s >> b & 1)
            t |= 1u << perm[b];
        mapped.push_back(t);
      }
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best)
        best = mapped;
    }
    return best;
  };
  auto rec = [&](auto&& self, std::size_t from, unsigned covered) -> void {
    if (covered == full && !chosen.empty()) {
      auto key = key_of(chosen);
      if (seen.insert(key).second) {
        Facets f;
        for (unsigned s : key) {
          std::vector<int> face;
          for (int b = 0; b < n; ++b)
            if (s >> b & 1)
              face.push_back(b + 1);
          f.push_back(face);
        }
        out.push_back(f);
      }
    }
    for (std::size_t i = from; i < subsets.size(); ++i) {
      const unsigned s = subsets[i];
      bool antichain = true;
      for (unsigned c : chosen)
        antichain = antichain && (s & c) != s && (s & c) != c;
      if (!antichain)
        continue;
      chosen.push_back(s);
      self(self, i + 1, covered | s);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Graham reduction: a hypergraph is decomposable exactly when repeatedly
/// deleting vertices seen by a single edge and edges inside other edges
/// empties it.
inline bool decomposable(const Facets& facets)
{
  std::vector<std::set<int>> edges;
  for (const auto& f : facets)
    edges.emplace_back(f.begin(), f.end());
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, int> count;
    for (const auto& e : edges)
      for (int v : e)
        ++count[v];
    for (auto& e : edges)
      for (auto it = e.begin(); it != e.end();)
        if (count[*it] == 1) {
          it = e.erase(it);
          changed = true;
        } else {
          ++it;
        }
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = 0; j < edges.size(); ++j)
        if (i != j && std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(), edges[i].end())) {
          edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          i = edges.size();
          break;
        }
  }
  return edges.size() <= 1;
}

// ---------------------------------------------------------------------------
// lattice points

/// Positive integer tables on the facets of the chain [12][23] with sizes
/// (d1,d2,d3), each table summing to k, whose vertex-2 margins agree. For a
/// decomposable complex these are exactly the relative-interior lattice
/// points of k·Marg. Coordinates follow the design-matrix row order.
inline std::vector<std::vector<std::int64_t>> chain_interior_points(int d1, int d2, int d3, int k)
{
  // all positive compositions of `total` into `parts` parts
  auto compositions = [](int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int slots) -> void {
      if (slots == 1) {
        if (left >= 1) {
          cur.push_back(left);
          out.push_back(cur);
          cur.pop_back();
        }
        return;
      }
      for (int x = 1; x <= left - (slots - 1); ++x) {
        cur.push_back(x);
        self(self, left - x, slots - 1);
        cur.pop_back();
      }
    };
    if (parts > 0)
      rec(rec, total, parts);
    return out;
  };
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& t12 : compositions(k, d1 * d2)) {
    std::vector<int> margin(d2, 0);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j)
        margin[j] += t12[i * d2 + j];
    // rows of the [23] table must sum to the margin
    std::vector<std::vector<std::vector<int>>> per_row;
    for (int j = 0; j < d2; ++j)
      per_row.push_back(compositions(margin[j], d3));
    std::vector<std::size_t> idx(d2, 0);
    bool any = std::all_of(per_row.begin(), per_row.end(), [](const auto& r) { return !r.empty(); });
    while (any) {
      std::vector<std::int64_t> x(t12.begin(), t12.end());
      for (int j = 0; j < d2; ++j)
        for (int v : per_row[j][idx[j]])
          x.push_back(v);
      out.push_back(x);
      int j = d2 - 1;
      while (j >= 0 && ++idx[j] == per_row[j].size())
        idx[j--] = 0;
      if (j < 0)
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every nonnegative integer vector of the given length summing to m.
inline std::vector<std::vector<std::int64_t>> tables_of_size(std::size_t cells, int m)
{
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(cells, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == cells) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace oracle

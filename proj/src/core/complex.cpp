#include "complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace margeo {

namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Face intersect(const Face& a, const Face& b)
{
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool needs_commas(const std::vector<int>& labels)
{
  return std::any_of(labels.begin(), labels.end(), [](int v) { return v > 9; });
}

std::string format_face(const Face& f, bool commas)
{
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (commas && i)
      s += ',';
    s += std::to_string(f[i]);
  }
  return s;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<int> ground_set, std::vector<Face> facets)
{
  if (facets.empty())
    fail(ErrorKind::invalid_argument, "a simplicial complex needs at least one facet");

  for (auto& f : facets) {
    if (f.empty())
      fail(ErrorKind::invalid_argument, "facets must be non-empty");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(ErrorKind::invalid_argument, "repeated vertex inside a facet");
    if (f.front() < 1)
      fail(ErrorKind::invalid_argument, "vertex labels must be positive");
  }

  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < facets.size() && !absorbed; ++j) {
      if (i == j || !is_subset(facets[i], facets[j]))
        continue;
      // Equal entries: keep the first occurrence.
      absorbed = facets[i] != facets[j] || j < i;
    }
    if (absorbed)
      diagnostics_.push_back("non-maximal or repeated face [" + format_face(facets[i], true) + "] absorbed");
    else
      facets_.push_back(facets[i]);
  }

  std::set<int> used;
  for (const auto& f : facets_)
    used.insert(f.begin(), f.end());
  if (ground_set.empty()) {
    ground_.assign(used.begin(), used.end());
  } else {
    std::sort(ground_set.begin(), ground_set.end());
    ground_set.erase(std::unique(ground_set.begin(), ground_set.end()), ground_set.end());
    if (ground_set.front() < 1)
      fail(ErrorKind::invalid_argument, "vertex labels must be positive");
    for (int v : used)
      if (!std::binary_search(ground_set.begin(), ground_set.end(), v))
        fail(ErrorKind::invalid_argument, "facet vertex " + std::to_string(v) + " is not in the ground set");
    ground_ = std::move(ground_set);
  }
}

bool SimplicialComplex::is_face(const Face& f) const
{
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
}

bool SimplicialComplex::is_facet(const Face& f) const
{
  return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

bool SimplicialComplex::is_pure() const
{
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::is_graph() const
{
  return std::all_of(facets_.begin(), facets_.end(), [](const Face& f) { return f.size() <= 2; });
}

std::vector<int> SimplicialComplex::ghost_vertices() const
{
  std::vector<int> out;
  for (int v : ground_)
    if (!is_face({v}))
      out.push_back(v);
  return out;
}

std::size_t SimplicialComplex::index_of(int vertex) const
{
  auto it = std::lower_bound(ground_.begin(), ground_.end(), vertex);
  if (it == ground_.end() || *it != vertex)
    fail(ErrorKind::invalid_argument, "vertex " + std::to_string(vertex) + " is not in the ground set");
  return static_cast<std::size_t>(it - ground_.begin());
}

std::string SimplicialComplex::to_string() const
{
  const bool commas = needs_commas(ground_);
  std::string s;
  if (!ghost_vertices().empty())
    s += "{" + format_face(ground_, commas) + "}";
  for (const auto& f : facets_)
    s += "[" + format_face(f, commas) + "]";
  return s;
}

nlohmann::json SimplicialComplex::to_json() const
{
  return {{"ground_set", ground_}, {"facets", facets_}};
}

bool SimplicialComplex::same_as(const SimplicialComplex& other) const
{
  if (ground_ != other.ground_ || facets_.size() != other.facets_.size())
    return false;
  auto a = facets_, b = other.facets_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------

StateCounts::StateCounts(const SimplicialComplex& complex, std::vector<int> counts)
    : vertices_(complex.ground_set()), counts_(std::move(counts))
{
  if (counts_.size() != vertices_.size())
    fail(ErrorKind::invalid_argument, "state count vector has " + std::to_string(counts_.size()) +
                                          " entries but the ground set has " + std::to_string(vertices_.size()));
  for (int c : counts_)
    if (c < 2)
      fail(ErrorKind::invalid_argument, "every state count must be at least 2");
}

StateCounts StateCounts::binary(const SimplicialComplex& complex)
{
  return StateCounts(complex, std::vector<int>(complex.num_vertices(), 2));
}

int StateCounts::of(int vertex) const
{
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end() || *it != vertex)
    fail(ErrorKind::invalid_argument, "no state count for vertex " + std::to_string(vertex));
  return counts_[static_cast<std::size_t>(it - vertices_.begin())];
}

std::vector<int> StateCounts::restricted_to(const std::vector<int>& vertices) const
{
  std::vector<int> out;
  out.reserve(vertices.size());
  for (int v : vertices)
    out.push_back(of(v));
  return out;
}

bool StateCounts::all_binary() const
{
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 2; });
}

// ---------------------------------------------------------------------------
// parsing

namespace {

void skip_space(std::string_view t, std::size_t& i)
{
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i])))
    ++i;
}

std::vector<int> parse_vertex_group(std::string_view body)
{
  std::vector<int> out;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string_view::npos)
        end = body.size();
      std::string token;
      for (char c : body.substr(start, end - start))
        if (!std::isspace(static_cast<unsigned char>(c)))
          token += c;
      if (token.empty())
        fail(ErrorKind::parse, "empty entry in comma-separated facet");
      if (token[0] == '-')
        fail(ErrorKind::parse, "negative vertex label " + token);
      if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(ErrorKind::parse, "malformed vertex label '" + token + "'");
      if (token.size() > 6)
        fail(ErrorKind::parse, "vertex label too large: " + token);
      const int v = std::stoi(token);
      if (v == 0)
        fail(ErrorKind::parse, "vertex 0 is not allowed (labels start at 1)");
      out.push_back(v);
      start = end + 1;
    }
    return out;
  }
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c == '-')
      fail(ErrorKind::parse, "negative vertex label");
    if (c == '0')
      fail(ErrorKind::parse, "vertex 0 is not allowed (labels start at 1)");
    if (c < '1' || c > '9')
      fail(ErrorKind::parse, std::string("unexpected character '") + c + "' inside brackets");
    out.push_back(c - '0');
  }
  return out;
}

std::string_view read_group(std::string_view t, std::size_t& i, char open, char close)
{
  if (i >= t.size() || t[i] != open)
    fail(ErrorKind::parse, std::string("expected '") + open + "' at position " + std::to_string(i));
  const std::size_t end = t.find(close, i + 1);
  if (end == std::string_view::npos)
    fail(ErrorKind::parse, std::string("unterminated '") + open + "'");
  const auto body = t.substr(i + 1, end - i - 1);
  if (body.find(open) != std::string_view::npos)
    fail(ErrorKind::parse, std::string("nested '") + open + "'");
  i = end + 1;
  return body;
}

int parse_size(std::string_view s, std::string_view what)
{
  if (s.empty() || s.size() > 4 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorKind::parse, "malformed size in " + std::string(what));
  return std::stoi(std::string(s));
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text)
{
  std::size_t i = 0;
  skip_space(text, i);
  if (i == text.size())
    fail(ErrorKind::parse, "empty complex description");

  std::vector<int> ground;
  if (text[i] == '{') {
    ground = parse_vertex_group(read_group(text, i, '{', '}'));
    if (ground.empty())
      fail(ErrorKind::parse, "empty ground-set prefix");
    skip_space(text, i);
  }

  std::vector<Face> facets;
  while (i < text.size()) {
    if (text[i] != '[')
      fail(ErrorKind::parse, std::string("unexpected character '") + text[i] + "' outside brackets");
    auto f = parse_vertex_group(read_group(text, i, '[', ']'));
    if (f.empty())
      fail(ErrorKind::parse, "empty facet '[]'");
    facets.push_back(std::move(f));
    skip_space(text, i);
  }
  if (facets.empty())
    fail(ErrorKind::parse, "no facets given");
  try {
    return SimplicialComplex(std::move(ground), std::move(facets));
  } catch (const Error& e) {
    fail(ErrorKind::parse, e.what());
  }
}

SimplicialComplex parse_complex_or_named(std::string_view text)
{
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  if (t.empty())
    fail(ErrorKind::parse, "empty complex description");
  if (t[0] == '[' || t[0] == '{')
    return parse_complex(t);

  auto starts = [&](std::string_view p) { return t.rfind(p, 0) == 0; };
  std::vector<Face> facets;
  if (starts("tree:")) {
    std::stringstream ss(t.substr(5));
    std::string edge;
    while (std::getline(ss, edge, ',')) {
      const auto dash = edge.find('-');
      if (dash == std::string::npos)
        fail(ErrorKind::parse, "tree edges are written a-b");
      const int a = parse_size(std::string_view(edge).substr(0, dash), "tree edge");
      const int b = parse_size(std::string_view(edge).substr(dash + 1), "tree edge");
      if (a == 0 || b == 0)
        fail(ErrorKind::parse, "vertex 0 is not allowed (labels start at 1)");
      facets.push_back({a, b});
    }
    if (facets.empty())
      fail(ErrorKind::parse, "tree without edges");
    return SimplicialComplex(std::move(facets));
  }
  if (t[0] == 'K' || t[0] == 'C') {
    const int n = parse_size(std::string_view(t).substr(1), "named graph");
    if (t[0] == 'K') {
      if (n < 2)
        fail(ErrorKind::parse, "K<n> needs n >= 2");
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          facets.push_back({a, b});
    } else {
      if (n < 3)
        fail(ErrorKind::parse, "C<n> needs n >= 3");
      for (int a = 1; a < n; ++a)
        facets.push_back({a, a + 1});
      facets.push_back({1, n});
    }
    return SimplicialComplex(std::move(facets));
  }
  const auto dash = t.find('-');
  if (dash == std::string::npos)
    fail(ErrorKind::parse, "unrecognized complex '" + t + "'");
  const std::string name = t.substr(0, dash);
  const int n = parse_size(std::string_view(t).substr(dash + 1), name);
  if (name == "path") {
    if (n < 2)
      fail(ErrorKind::parse, "path-<n> needs n >= 2");
    for (int a = 1; a < n; ++a)
      facets.push_back({a, a + 1});
    return SimplicialComplex(std::move(facets));
  }
  if (name == "star") {
    if (n < 2)
      fail(ErrorKind::parse, "star-<n> needs n >= 2");
    for (int a = 2; a <= n; ++a)
      facets.push_back({1, a});
    return SimplicialComplex(std::move(facets));
  }
  if (name == "simplex") {
    if (n < 1)
      fail(ErrorKind::parse, "simplex-<n> needs n >= 1");
    return full_simplex(n);
  }
  if (name == "boundary") {
    if (n < 2)
      fail(ErrorKind::parse, "boundary-<n> needs n >= 2");
    return boundary_simplex(n);
  }
  fail(ErrorKind::parse, "unrecognized complex '" + t + "'");
}

std::vector<int> parse_counts(std::string_view text)
{
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      fail(ErrorKind::parse, "empty entry in state count list");
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        token.size() > 6)
      fail(ErrorKind::parse, "malformed state count '" + token + "'");
    const int v = std::stoi(token);
    if (v < 2)
      fail(ErrorKind::parse, "state counts must be at least 2");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c == ',')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

SimplicialComplex complex_from_json(const nlohmann::json& j)
{
  try {
    return SimplicialComplex(j.at("ground_set").get<std::vector<int>>(), j.at("facets").get<std::vector<Face>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed complex JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// faces and weights

std::vector<Face> downward_closure(const SimplicialComplex& complex)
{
  std::set<Face> faces;
  for (const auto& f : complex.facets()) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Face sub;
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1)
          sub.push_back(f[k]);
      faces.insert(std::move(sub));
    }
  }
  std::vector<Face> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::uint64_t weight(const Face& face, const StateCounts& d)
{
  std::uint64_t w = 1;
  for (int v : face) {
    const auto c = static_cast<std::uint64_t>(d.of(v));
    if (w > UINT64_MAX / c)
      fail(ErrorKind::limit, "face weight overflows 64 bits");
    w *= c;
  }
  return w;
}

std::uint64_t face_weight(const SimplicialComplex& complex, const Face& face, const StateCounts& d)
{
  if (!complex.is_face(face))
    fail(ErrorKind::invalid_argument, "weight requested for a set that is not a face");
  return weight(face, d);
}

std::uint64_t max_weight(const SimplicialComplex& complex, const StateCounts& d)
{
  std::uint64_t best = 0;
  for (const auto& f : complex.facets())
    best = std::max(best, weight(f, d));
  return best;
}

bool equal_weights(const SimplicialComplex& complex, const StateCounts& d)
{
  const auto w = weight(complex.facets().front(), d);
  return std::all_of(complex.facets().begin(), complex.facets().end(),
                     [&](const Face& f) { return weight(f, d) == w; });
}

// ---------------------------------------------------------------------------
// constructions

SimplicialComplex cone_over(const SimplicialComplex& complex, int repetitions)
{
  if (repetitions < 1)
    fail(ErrorKind::invalid_argument, "cone repetition count must be at least 1");
  auto ground = complex.ground_set();
  auto facets = complex.facets();
  for (int r = 0; r < repetitions; ++r) {
    const int apex = ground.back() + 1;
    ground.push_back(apex);
    for (auto& f : facets)
      f.push_back(apex);
  }
  return SimplicialComplex(std::move(ground), std::move(facets));
}

SimplicialComplex boundary_simplex(int n)
{
  if (n < 2)
    fail(ErrorKind::invalid_argument, "boundary_simplex needs n >= 2");
  std::vector<Face> facets;
  for (int skip = n; skip >= 1; --skip) {
    Face f;
    for (int v = 1; v <= n; ++v)
      if (v != skip)
        f.push_back(v);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex full_simplex(int n)
{
  if (n < 1)
    fail(ErrorKind::invalid_argument, "full_simplex needs n >= 1");
  Face f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 1);
  return SimplicialComplex({f});
}

// ---------------------------------------------------------------------------
// reducibility

namespace {

constexpr std::size_t kSeparatorFacet = static_cast<std::size_t>(-1);

/// Component root per facet; a facet equal to the separator is kSeparatorFacet
/// and later goes to both sides.
std::vector<std::size_t> facet_components(const SimplicialComplex& complex, const Face& separator)
{
  const auto& facets = complex.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j)
      if (!is_subset(intersect(facets[i], facets[j]), separator))
        parent[find(i)] = find(j);
  std::vector<std::size_t> comp(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    comp[i] = facets[i] == separator ? kSeparatorFacet : find(i);
  return comp;
}

/// Every face of the complex, largest first, then lexicographic.
std::vector<Face> candidate_separators(const SimplicialComplex& complex)
{
  auto out = downward_closure(complex);
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

/// side[i]: 1 or 2 for the component sides, 0 for the separator facet (both).
SimplicialComplex side(const SimplicialComplex& complex, const std::vector<int>& sides, int which,
                       const Face& separator, bool& augmented)
{
  std::vector<Face> facets;
  augmented = true;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (sides[i] == which || sides[i] == 0) {
      facets.push_back(complex.facets()[i]);
      if (is_subset(separator, complex.facets()[i]))
        augmented = false;
    }
  if (augmented)
    facets.push_back(separator);
  return SimplicialComplex(std::move(facets));
}

ReducibleDecomposition make_decomposition(const SimplicialComplex& complex, const std::vector<int>& sides,
                                          const Face& separator)
{
  bool aug1 = false, aug2 = false;
  auto g1 = side(complex, sides, 1, separator, aug1);
  auto g2 = side(complex, sides, 2, separator, aug2);
  return ReducibleDecomposition{std::move(g1), separator, std::move(g2), aug1, aug2};
}

/// Lexicographically least facet other than the separator.
std::size_t anchor_facet(const SimplicialComplex& complex, const std::vector<std::size_t>& comp)
{
  const auto& f = complex.facets();
  std::size_t best = kSeparatorFacet;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (comp[i] != kSeparatorFacet && (best == kSeparatorFacet || f[i] < f[best]))
      best = i;
  return best;
}

/// Component roots other than the anchor's, in facet order.
std::vector<std::size_t> other_roots(const std::vector<std::size_t>& comp, std::size_t anchor)
{
  std::vector<std::size_t> roots;
  for (auto c : comp)
    if (c != kSeparatorFacet && c != comp[anchor] && std::find(roots.begin(), roots.end(), c) == roots.end())
      roots.push_back(c);
  return roots;
}

}  // namespace

std::optional<ReducibleDecomposition> find_reducible_decomposition(const SimplicialComplex& complex)
{
  if (complex.facets().size() < 2)
    return std::nullopt;
  for (const auto& sep : candidate_separators(complex)) {
    const auto comp = facet_components(complex, sep);
    const auto anchor = anchor_facet(complex, comp);
    if (anchor == kSeparatorFacet || other_roots(comp, anchor).empty())
      continue;
    std::vector<int> sides(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      sides[i] = comp[i] == kSeparatorFacet ? 0 : comp[i] == comp[anchor] ? 1 : 2;
    return make_decomposition(complex, sides, sep);
  }
  return std::nullopt;
}

std::vector<ReducibleDecomposition> all_reducible_decompositions(const SimplicialComplex& complex)
{
  std::vector<ReducibleDecomposition> out;
  if (complex.facets().size() < 2)
    return out;
  for (const auto& sep : candidate_separators(complex)) {
    const auto comp = facet_components(complex, sep);
    const auto anchor = anchor_facet(complex, comp);
    if (anchor == kSeparatorFacet)
      continue;
    const auto roots = other_roots(comp, anchor);
    if (roots.empty())
      continue;
    // The anchor's component always stays on side one; the others are split.
    const std::uint64_t combos = std::uint64_t{1} << roots.size();
    for (std::uint64_t mask = 0; mask + 1 < combos; ++mask) {
      std::vector<int> sides(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (comp[i] == kSeparatorFacet) {
          sides[i] = 0;
        } else if (comp[i] == comp[anchor]) {
          sides[i] = 1;
        } else {
          const auto k = static_cast<std::size_t>(std::find(roots.begin(), roots.end(), comp[i]) - roots.begin());
          sides[i] = (mask >> k & 1) ? 1 : 2;
        }
      }
      out.push_back(make_decomposition(complex, sides, sep));
    }
  }
  return out;
}

namespace {

bool decomposable_memo(const SimplicialComplex& complex, std::map<std::string, bool>& memo)
{
  if (complex.is_simplex())
    return true;
  const std::string key = canonical_form(complex).to_string();
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  bool result = false;
  for (const auto& dec : all_reducible_decompositions(complex)) {
    if (decomposable_memo(dec.gamma1, memo) && decomposable_memo(dec.gamma2, memo)) {
      result = true;
      break;
    }
  }
  memo[key] = result;
  return result;
}

}  // namespace

bool is_decomposable(const SimplicialComplex& complex)
{
  // Ghost vertices play no role in the face poset.
  SimplicialComplex core(complex.facets());
  std::map<std::string, bool> memo;
  return decomposable_memo(core, memo);
}

// ---------------------------------------------------------------------------
// graphs

namespace {

std::vector<std::set<std::size_t>> adjacency(const SimplicialComplex& graph)
{
  if (!graph.is_graph())
    fail(ErrorKind::invalid_argument, "graph operation on a complex with facets of size > 2");
  std::vector<std::set<std::size_t>> adj(graph.num_vertices());
  for (const auto& f : graph.facets())
    if (f.size() == 2) {
      const auto a = graph.index_of(f[0]), b = graph.index_of(f[1]);
      adj[a].insert(b);
      adj[b].insert(a);
    }
  return adj;
}

}  // namespace

bool is_chordal(const SimplicialComplex& graph)
{
  const auto adj = adjacency(graph);
  const std::size_t n = adj.size();
  // Maximum cardinality search; visiting order reversed is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> label(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> position(n);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!visited[v] && (best == n || label[v] > label[best]))
        best = v;
    visited[best] = true;
    position[best] = step;
    order.push_back(best);
    for (auto u : adj[best])
      if (!visited[u])
        ++label[u];
  }
  for (auto v : order) {
    // Neighbours visited before v; the latest of them must see all others.
    std::vector<std::size_t> earlier;
    for (auto u : adj[v])
      if (position[u] < position[v])
        earlier.push_back(u);
    if (earlier.size() < 2)
      continue;
    const auto parent = *std::max_element(earlier.begin(), earlier.end(),
                                          [&](auto a, auto b) { return position[a] < position[b]; });
    for (auto u : earlier)
      if (u != parent && !adj[parent].count(u))
        return false;
  }
  return true;
}

bool is_k4_minor_free(const SimplicialComplex& graph)
{
  auto adj = adjacency(graph);
  std::vector<bool> alive(adj.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (!alive[v])
        continue;
      if (adj[v].size() <= 1) {
        for (auto u : adj[v])
          adj[u].erase(v);
        adj[v].clear();
        alive[v] = false;
        changed = true;
      } else if (adj[v].size() == 2) {
        const auto a = *adj[v].begin(), b = *std::next(adj[v].begin());
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);  // parallel edges merge automatically
        adj[b].insert(a);
        adj[v].clear();
        alive[v] = false;
        changed = true;
      }
    }
  }
  // Minimum degree >= 3 forces a K4 minor.
  return std::none_of(alive.begin(), alive.end(), [](bool a) { return a; });
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

std::vector<Face> relabel(const std::vector<Face>& facets, const std::vector<int>& ground,
                          const std::vector<std::size_t>& perm)
{
  std::vector<Face> out;
  out.reserve(facets.size());
  for (const auto& f : facets) {
    Face g;
    g.reserve(f.size());
    for (int v : f) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), v) - ground.begin());
      g.push_back(static_cast<int>(perm[idx]) + 1);
    }
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_small(std::size_t n)
{
  if (n > 9)
    fail(ErrorKind::limit, "canonical forms are computed by brute force and limited to 9 vertices");
}

}  // namespace

SimplicialComplex canonical_form(const SimplicialComplex& complex)
{
  const auto& ground = complex.ground_set();
  const std::size_t n = ground.size();
  require_small(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Face> best = relabel(complex.facets(), ground, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cand = relabel(complex.facets(), ground, perm);
    if (cand < best)
      best = std::move(cand);
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return SimplicialComplex(std::move(labels), std::move(best));
}

std::string canonical_key(const SimplicialComplex& complex, const StateCounts& d)
{
  const auto& ground = complex.ground_set();
  const std::size_t n = ground.size();
  require_small(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::pair<std::vector<Face>, std::vector<int>> best;
  bool first = true;
  do {
    std::vector<int> counts(n);
    for (std::size_t i = 0; i < n; ++i)
      counts[perm[i]] = d.of(ground[i]);
    auto cand = std::make_pair(relabel(complex.facets(), ground, perm), std::move(counts));
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::string key = SimplicialComplex(labels, best.first).to_string();
  if (!SimplicialComplex(labels, best.first).ghost_vertices().empty() || n != labels.size())
    key = "{" + std::to_string(n) + "}" + key;
  key += "|d=";
  for (std::size_t i = 0; i < n; ++i)
    key += (i ? "," : "") + std::to_string(best.second[i]);
  return key;
}

std::vector<std::vector<std::size_t>> automorphisms(const SimplicialComplex& complex)
{
  const auto& ground = complex.ground_set();
  const std::size_t n = ground.size();
  require_small(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = relabel(complex.facets(), ground, perm);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (relabel(complex.facets(), ground, perm) == base)
      out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void for_each_pure_complex(int n, int dim, const std::function<void(const SimplicialComplex&)>& visit)
{
  if (n < 1 || n > kEnumerationVertexLimit)
    fail(ErrorKind::limit, "pure complex enumeration supports 1 <= n <= " + std::to_string(kEnumerationVertexLimit));
  const int size = dim + 1;
  if (size < 1 || size > n)
    fail(ErrorKind::invalid_argument, "facet dimension out of range for this vertex count");

  // Candidate facets in lexicographic order; index 0 is the most significant bit.
  std::vector<Face> cand;
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::function<void(int, int)> gen = [&](int start, int depth) {
    if (depth == size) {
      cand.push_back(pick);
      return;
    }
    for (int v = start; v <= n; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      gen(v + 1, depth + 1);
    }
  };
  gen(1, 0);
  const std::size_t m = cand.size();
  if (m > 64)
    fail(ErrorKind::limit, "too many candidate facets for bitmask enumeration");

  std::vector<std::vector<std::size_t>> action;  // per permutation: facet index -> facet index
  {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<std::size_t> act(m);
      for (std::size_t i = 0; i < m; ++i) {
        Face img;
        for (int v : cand[i])
          img.push_back(perm[static_cast<std::size_t>(v - 1)]);
        std::sort(img.begin(), img.end());
        act[i] = static_cast<std::size_t>(std::lower_bound(cand.begin(), cand.end(), img) - cand.begin());
      }
      action.push_back(std::move(act));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto bit = [&](std::size_t i) { return std::uint64_t{1} << (m - 1 - i); };
  auto canonical = [&](std::uint64_t mask) {
    for (const auto& act : action) {
      std::uint64_t img = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & bit(i))
          img |= bit(act[i]);
      if (img > mask)
        return false;
    }
    return true;
  };
  const std::uint64_t full_cover = (n == 64) ? ~0ull : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> facet_vertices(m);
  for (std::size_t i = 0; i < m; ++i)
    for (int v : cand[i])
      facet_vertices[i] |= std::uint64_t{1} << (v - 1);

  // Orderly generation: canonical sets stay canonical when their largest
  // element is removed, so extending by larger indices reaches every class.
  std::function<void(std::uint64_t, std::size_t, std::uint64_t)> grow = [&](std::uint64_t mask, std::size_t next,
                                                                           std::uint64_t covered) {
    if (mask && covered == full_cover) {
      std::vector<Face> facets;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & bit(i))
          facets.push_back(cand[i]);
      std::vector<int> ground(static_cast<std::size_t>(n));
      std::iota(ground.begin(), ground.end(), 1);
      visit(SimplicialComplex(std::move(ground), std::move(facets)));
    }
    for (std::size_t e = next; e < m; ++e) {
      const std::uint64_t child = mask | bit(e);
      if (canonical(child))
        grow(child, e + 1, covered | facet_vertices[e]);
    }
  };
  grow(0, 0, 0);
}

std::vector<SimplicialComplex> enumerate_pure_complexes(int n, int dim)
{
  std::vector<SimplicialComplex> out;
  for_each_pure_complex(n, dim, [&](const SimplicialComplex& c) { out.push_back(c); });
  return out;
}

}  // namespace margeo

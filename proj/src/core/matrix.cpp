#include "matrix.hpp"

#include <algorithm>
#include <sstream>

#include "lattice.hpp"

namespace margeo {

std::vector<std::vector<int>> cells_of(const Face& face, const StateCounts& d)
{
  std::vector<std::vector<int>> out;
  std::vector<int> cell(face.size(), 1);
  while (true) {
    out.push_back(cell);
    std::size_t k = face.size();
    while (k > 0) {
      --k;
      if (cell[k] < d.of(face[k])) {
        ++cell[k];
        std::fill(cell.begin() + static_cast<std::ptrdiff_t>(k) + 1, cell.end(), 1);
        break;
      }
      if (k == 0)
        return out;
    }
    if (face.empty())
      return out;
  }
}

std::string cell_name(const std::vector<int>& cell)
{
  const bool commas = std::any_of(cell.begin(), cell.end(), [](int s) { return s > 9; });
  std::string s;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (commas && i)
      s += ',';
    s += std::to_string(cell[i]);
  }
  return s;
}

DesignMatrix::DesignMatrix(const SimplicialComplex& complex, const StateCounts& d) : complex_(complex), d_(d)
{
  if (d.vertices() != complex.ground_set())
    fail(ErrorKind::invalid_argument, "state counts do not match the ground set of the complex");
  std::uint64_t total = 1;
  for (int c : d.values()) {
    total *= static_cast<std::uint64_t>(c);
    if (total > kMaxDesignColumns)
      fail(ErrorKind::limit, "design matrix would have more than " + std::to_string(kMaxDesignColumns) + " columns");
  }
  col_states_ = cells_of(complex.ground_set(), d);

  for (const auto& f : complex.facets()) {
    block_offsets_.push_back(row_labels_.size());
    for (auto& cell : cells_of(f, d))
      row_labels_.push_back({f, std::move(cell)});
  }
  block_offsets_.push_back(row_labels_.size());

  entries_.assign(rows() * cols(), 0);
  // Position of each facet vertex within the ground set.
  std::vector<std::vector<std::size_t>> where;
  for (const auto& f : complex.facets()) {
    std::vector<std::size_t> idx;
    for (int v : f)
      idx.push_back(complex.index_of(v));
    where.push_back(std::move(idx));
  }
  for (std::size_t c = 0; c < cols(); ++c) {
    const auto& state = col_states_[c];
    for (std::size_t b = 0; b < where.size(); ++b) {
      // Rank of the restricted cell inside its block (mixed radix).
      std::size_t offset = 0;
      for (std::size_t k = 0; k < where[b].size(); ++k) {
        const auto v = complex.facets()[b][k];
        offset = offset * static_cast<std::size_t>(d.of(v)) + static_cast<std::size_t>(state[where[b][k]] - 1);
      }
      entries_[(block_offsets_[b] + offset) * cols() + c] = 1;
    }
  }
}

Point DesignMatrix::column(std::size_t c) const
{
  Point p(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    p[r] = at(r, c);
  return p;
}

std::vector<Point> DesignMatrix::columns() const
{
  std::vector<Point> out;
  out.reserve(cols());
  for (std::size_t c = 0; c < cols(); ++c)
    out.push_back(column(c));
  return out;
}

IntMatrix DesignMatrix::to_int_matrix() const
{
  IntMatrix m(rows(), IntVector(cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      m[r][c] = at(r, c);
  return m;
}

std::size_t DesignMatrix::column_index(const std::vector<int>& state) const
{
  if (state.size() != complex_.num_vertices())
    fail(ErrorKind::invalid_argument, "joint state has the wrong length");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    const int dk = d_.values()[k];
    if (state[k] < 1 || state[k] > dk)
      fail(ErrorKind::invalid_argument, "joint state out of range");
    idx = idx * static_cast<std::size_t>(dk) + static_cast<std::size_t>(state[k] - 1);
  }
  return idx;
}

std::string DesignMatrix::row_name(std::size_t r) const
{
  const auto& l = row_labels_[r];
  return "([" + SimplicialComplex({l.facet}).to_string().substr(1) + "," + cell_name(l.cell) + ")";
}

std::string DesignMatrix::column_name(std::size_t c) const { return cell_name(col_states_[c]); }

DesignMatrix design_matrix(const SimplicialComplex& complex, const StateCounts& d) { return DesignMatrix(complex, d); }

Point marginals(const DesignMatrix& a, const std::vector<std::int64_t>& u)
{
  if (u.size() != a.cols())
    fail(ErrorKind::invalid_argument, "count vector has " + std::to_string(u.size()) + " entries, expected " +
                                          std::to_string(a.cols()));
  Point out(a.rows(), 0);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (u[c] < 0)
      fail(ErrorKind::invalid_argument, "count vector entries must be non-negative");
    if (u[c] == 0)
      continue;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a.at(r, c))
        out[r] += u[c];
  }
  return out;
}

std::vector<std::size_t> structural_basis(const DesignMatrix& a)
{
  const auto& ground = a.complex().ground_set();
  std::vector<std::size_t> out;
  for (const auto& face : downward_closure(a.complex())) {
    // States 2..d_k on the face: enumerate cells and shift by one.
    std::vector<int> reduced;
    bool empty_range = false;
    for (int v : face) {
      reduced.push_back(a.counts().of(v) - 1);
      empty_range = empty_range || reduced.back() < 1;
    }
    if (empty_range)
      continue;
    std::vector<int> cell(face.size(), 2);
    while (true) {
      std::vector<int> state(ground.size(), 1);
      for (std::size_t k = 0; k < face.size(); ++k)
        state[a.complex().index_of(face[k])] = cell[k];
      out.push_back(a.column_index(state));
      std::size_t k = face.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (cell[k] < a.counts().of(face[k])) {
          ++cell[k];
          std::fill(cell.begin() + static_cast<std::ptrdiff_t>(k) + 1, cell.end(), 2);
          done = false;
          break;
        }
      }
      if (done)
        break;
    }
  }
  return out;
}

std::uint64_t structural_basis_size(const SimplicialComplex& complex, const StateCounts& d)
{
  std::uint64_t total = 0;
  for (const auto& face : downward_closure(complex)) {
    std::uint64_t p = 1;
    for (int v : face)
      p *= static_cast<std::uint64_t>(d.of(v) - 1);
    total += p;
  }
  return total;
}

std::size_t matrix_rank(const DesignMatrix& a) { return rank_of(a.to_int_matrix()); }

RatVector normalization_functional(const DesignMatrix& a)
{
  const auto at = transpose(a.to_int_matrix(), a.cols());
  auto w = solve_rational(at, RatVector(a.cols(), Rational(1)), a.rows());
  if (!w)
    fail(ErrorKind::internal, "no functional w with wᵀA = 1");
  return *w;
}

std::string to_csv(const DesignMatrix& a)
{
  std::ostringstream os;
  os << "row";
  for (std::size_t c = 0; c < a.cols(); ++c)
    os << "," << a.column_name(c);
  os << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << '"' << a.row_name(r) << '"';
    for (std::size_t c = 0; c < a.cols(); ++c)
      os << ',' << a.at(r, c);
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const DesignMatrix& a)
{
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < a.rows(); ++r)
    rows.push_back({{"facet", a.row_labels()[r].facet}, {"cell", a.row_labels()[r].cell}, {"name", a.row_name(r)}});
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t c = 0; c < a.cols(); ++c)
    cols.push_back(a.column_name(c));
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<int> row(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
      row[c] = a.at(r, c);
    entries.push_back(row);
  }
  return {{"rows", rows}, {"columns", cols}, {"entries", entries}};
}

}  // namespace margeo

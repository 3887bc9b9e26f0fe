#include "lattice.hpp"

#include <utility>

namespace margeo {

namespace {

void combine_rows(IntVector& r, IntVector& q, const Integer& s, const Integer& t, const Integer& a,
                  const Integer& b)
{
  // [r; q] <- [[s, t], [-b, a]] * [r; q]
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (r[c] == 0 && q[c] == 0)
      continue;
    Integer nr = s * r[c] + t * q[c];
    Integer nq = a * q[c] - b * r[c];
    r[c] = std::move(nr);
    q[c] = std::move(nq);
  }
}

void combine_inverse_columns(IntMatrix& inv, std::size_t cr, std::size_t cq, const Integer& s,
                             const Integer& t, const Integer& a, const Integer& b)
{
  // inv <- inv * [[a, -t], [b, s]] on columns (cr, cq)
  for (auto& row : inv) {
    if (row[cr] == 0 && row[cq] == 0)
      continue;
    Integer nr = a * row[cr] + b * row[cq];
    Integer nq = s * row[cq] - t * row[cr];
    row[cr] = std::move(nr);
    row[cq] = std::move(nq);
  }
}

}  // namespace

RowHermite row_hermite(IntMatrix m, bool with_transform)
{
  RowHermite out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (with_transform) {
    out.transform.assign(rows, IntVector(rows, 0));
    out.inverse.assign(rows, IntVector(rows, 0));
    for (std::size_t i = 0; i < rows; ++i)
      out.transform[i][i] = out.inverse[i][i] = 1;
  }

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0)
        continue;
      if (m[r][c] == 0) {
        std::swap(m[r], m[i]);
        if (with_transform) {
          std::swap(out.transform[r], out.transform[i]);
          for (auto& row : out.inverse)
            std::swap(row[r], row[i]);
        }
        continue;
      }
      Integer s, t;
      const Integer g = extended_gcd(m[r][c], m[i][c], s, t);
      const Integer a = m[r][c] / g;
      const Integer b = m[i][c] / g;
      combine_rows(m[r], m[i], s, t, a, b);
      if (with_transform) {
        combine_rows(out.transform[r], out.transform[i], s, t, a, b);
        combine_inverse_columns(out.inverse, r, i, s, t, a, b);
      }
    }
    if (m[r][c] == 0)
      continue;
    if (m[r][c] < 0) {
      for (auto& x : m[r])
        x = -x;
      if (with_transform) {
        for (auto& x : out.transform[r])
          x = -x;
        for (auto& row : out.inverse)
          row[r] = -row[r];
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(m[k][c], m[r][c]);
      if (q == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j)
        m[k][j] -= q * m[r][j];
      if (with_transform) {
        for (std::size_t j = 0; j < rows; ++j)
          out.transform[k][j] -= q * out.transform[r][j];
        for (auto& row : out.inverse)
          row[r] += q * row[k];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

namespace {

/// Bareiss elimination in place; returns rank and the sign-corrected last
/// pivot (the determinant for square full-rank input).
std::pair<std::size_t, Integer> bareiss(IntMatrix& m)
{
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return {r, sign * prev};
}

}  // namespace

std::size_t rank_of(IntMatrix m) { return bareiss(m).first; }

Integer determinant(IntMatrix m)
{
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  auto [r, last] = bareiss(m);
  if (r < n)
    return 0;
  // Without column skips the final pivot of Bareiss is the determinant.
  return last;
}

std::vector<std::size_t> rref(RatMatrix& m)
{
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0)
          m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m, std::size_t columns)
{
  RatMatrix a;
  a.reserve(m.size());
  for (const auto& row : m)
    a.emplace_back(row.begin(), row.end());
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots)
    is_pivot[p] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f])
      continue;
    RatVector v(columns, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][f];
    basis.push_back(primitive_multiple(v));
  }
  return basis;
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b, std::size_t columns)
{
  RatMatrix a;
  a.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    RatVector row(m[i].begin(), m[i].end());
    row.push_back(b[i]);
    a.push_back(std::move(row));
  }
  const auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == columns)
    return std::nullopt;
  RatVector x(columns, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = a[i][columns];
  return x;
}

ScaledInverse scaled_inverse(const IntMatrix& m)
{
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  const auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    fail(ErrorKind::internal, "scaled_inverse: singular matrix");
  Integer det = abs(determinant(m));
  ScaledInverse out{IntMatrix(n, IntVector(n)), det};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = a[i][n + j] * det;
      if (denominator(v) != 1)
        fail(ErrorKind::internal, "scaled_inverse: non-integral adjugate");
      out.adjugate[i][j] = numerator(v);
    }
  return out;
}

IntMatrix transpose(const IntMatrix& m, std::size_t columns)
{
  IntMatrix t(columns, IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < columns; ++j)
      t[j][i] = m[i][j];
  return t;
}

}  // namespace margeo

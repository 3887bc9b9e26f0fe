#include "lp.hpp"

namespace margeo {

namespace {

class Tableau {
public:
  Tableau(const RatMatrix& a, const RatVector& b, std::size_t n) : m_(a.size()), n_(n), sign_(m_, 1)
  {
    width_ = n_ + m_ + 1;
    rows_.assign(m_, RatVector(width_, 0));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j)
        rows_[i][j] = sign_[i] * a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][width_ - 1] = sign_[i] * b[i];
      basis_[i] = n_ + i;
    }
  }

  void set_objective(const RatVector& cost)
  {
    obj_.assign(width_, 0);
    for (std::size_t j = 0; j + 1 < width_; ++j)
      obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0)
        continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[i][j] != 0)
          obj_[j] -= cb * rows_[i][j];
    }
  }

  /// Runs Bland's rule over columns [0, allowed); false when unbounded.
  bool optimize(std::size_t allowed)
  {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed)
        return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0)
          continue;
        Rational ratio = rows_[i][width_ - 1] / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_)
        return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c)
  {
    ++pivots_;
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r])
      if (x != 0)
        x *= inv;
    auto eliminate = [&](RatVector& row) {
      if (row[c] == 0)
        return;
      const Rational f = row[c];
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[r][j] != 0)
          row[j] -= f * rows_[r][j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r)
        eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = c;
  }

  /// Moves artificial variables out of the basis where possible.
  void drive_out_artificials()
  {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_)
        continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  Rational value() const { return -obj_[width_ - 1]; }
  const Rational& reduced_cost(std::size_t j) const { return obj_[j]; }

  RatVector solution() const
  {
    RatVector x(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_)
        x[basis_[i]] = rows_[i][width_ - 1];
    return x;
  }

  int sign(std::size_t i) const { return sign_[i]; }
  std::size_t pivots() const { return pivots_; }

private:
  std::size_t m_, n_, width_ = 0;
  std::vector<int> sign_;
  RatMatrix rows_;
  RatVector obj_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve_standard_form(const RatMatrix& a, const RatVector& b, const RatVector& c)
{
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m)
    fail(ErrorKind::invalid_argument, "LP right-hand side has the wrong length");
  for (const auto& row : a)
    if (row.size() != n)
      fail(ErrorKind::invalid_argument, "LP constraint row has the wrong length");

  LpResult out;
  Tableau t(a, b, n);
  RatVector phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i)
    phase1[n + i] = 1;
  t.set_objective(phase1);
  t.optimize(n + m);  // bounded below by zero

  if (t.value() > 0) {
    out.status = LpStatus::infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      out.farkas[i] = t.sign(i) * (1 - t.reduced_cost(n + i));
    out.pivots = t.pivots();
    return out;
  }

  t.drive_out_artificials();
  RatVector phase2(n + m, 0);
  for (std::size_t j = 0; j < n; ++j)
    phase2[j] = c[j];
  t.set_objective(phase2);
  if (!t.optimize(n)) {
    out.status = LpStatus::unbounded;
    out.pivots = t.pivots();
    return out;
  }
  out.status = LpStatus::optimal;
  out.x = t.solution();
  out.value = t.value();
  out.pivots = t.pivots();
  return out;
}

}  // namespace margeo

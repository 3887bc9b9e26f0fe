#include <algorithm>
#include <limits>

#include "geometry.hpp"
#include "lattice.hpp"
#include "lp.hpp"

namespace margeo {

namespace {

using i64 = std::int64_t;

i64 checked_mul(i64 a, i64 b)
{
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::limit, "lattice search bound overflow");
  return r;
}

/// A row a·x ≤ rhs in machine integers.
struct Row {
  std::vector<i64> a;
  i64 rhs = 0;
  std::vector<i64> suffix_min;  // minimum of Σ_{i≥j} a_i x_i over the global box
};

/// x_pivot = (rhs − Σ coef_j x_j) / scale, with every j < pivot.
struct Solved {
  std::size_t pivot = 0;
  i64 scale = 1;
  std::vector<std::pair<std::size_t, i64>> terms;
  i64 rhs = 0;
};

class Search {
public:
  Search(const VRep& v, const HRep& h, i64 k, const SearchOptions& opt)
      : v_(v), h_(h), k_(k), opt_(opt), n_(v.ambient)
  {
    lo_.assign(n_, 0);
    hi_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      i64 mn = v.vertices.front()[i], mx = mn;
      for (const auto& p : v.vertices) {
        mn = std::min(mn, p[i]);
        mx = std::max(mx, p[i]);
      }
      lo_[i] = checked_mul(mn, k);
      hi_[i] = checked_mul(mx, k);
    }

    for (const auto& e : h.inequalities) {
      Row r{to_point(e.a), to_int64(e.b * k), {}};
      if (opt.interior_only)
        r.rhs -= 1;
      rows_.push_back(std::move(r));
    }
    for (const auto& e : h.equations) {
      Row r{to_point(e.a), to_int64(e.b * k), {}};
      Row s = r;
      for (auto& x : s.a)
        x = -x;
      s.rhs = -s.rhs;
      rows_.push_back(std::move(r));
      rows_.push_back(std::move(s));
    }
    tighten_box();
    compute_suffix_min();
    nonzero_.resize(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[r].a[j] != 0)
          nonzero_[j].push_back(r);

    solve_equations(h);
    partial_.assign(rows_.size(), 0);
    x_.assign(n_, 0);
  }

  std::vector<Point> run()
  {
    if (empty_)
      return {};
    if (n_ == 0) {
      out_.push_back({});
      return out_;
    }
    // Interior searches can stall when the equations hide tight bounds.
    // After a node budget, bound every coordinate by LP and restart.
    if (opt_.interior_only)
      budget_ = 200'000;
    try {
      descend(0);
    } catch (const BudgetExceeded&) {
      out_.clear();
      std::fill(partial_.begin(), partial_.end(), 0);
      std::fill(x_.begin(), x_.end(), 0);
      budget_ = std::numeric_limits<std::uint64_t>::max();
      relaxation_box(h_);
      if (empty_)
        return {};
      tighten_box();
      if (empty_)
        return {};
      compute_suffix_min();
      descend(0);
    }
    return std::move(out_);
  }

private:
  struct BudgetExceeded {};

  void compute_suffix_min()
  {
    for (auto& r : rows_) {
      r.suffix_min.assign(n_ + 1, 0);
      for (std::size_t j = n_; j-- > 0;)
        r.suffix_min[j] = r.suffix_min[j + 1] + std::min(checked_mul(r.a[j], lo_[j]), checked_mul(r.a[j], hi_[j]));
    }
  }

  /// Box of the rational interior system, x = p − q with slacks; empty_
  /// when infeasible.
  void relaxation_box(const HRep& h)
  {
    const std::size_t m = h.inequalities.size();
    RatMatrix a;
    RatVector b;
    auto add = [&](const Constraint& c, const Integer& rhs, std::size_t slack) {
      RatVector row(2 * n_ + m);
      for (std::size_t j = 0; j < n_; ++j) {
        row[j] = c.a[j];
        row[n_ + j] = -c.a[j];
      }
      if (slack < m)
        row[2 * n_ + slack] = 1;
      a.push_back(std::move(row));
      b.push_back(rhs);
    };
    for (std::size_t i = 0; i < m; ++i)
      add(h.inequalities[i], h.inequalities[i].b * k_ - 1, i);
    for (const auto& e : h.equations)
      add(e, e.b * k_, m);
    RatVector cost(2 * n_ + m);
    for (std::size_t j = 0; j < n_; ++j) {
      if (lo_[j] == hi_[j])
        continue;
      for (int sign : {1, -1}) {
        cost[j] = sign;
        cost[n_ + j] = -sign;
        const auto r = solve_standard_form(a, b, cost);
        cost[j] = cost[n_ + j] = 0;
        if (r.status == LpStatus::infeasible) {
          empty_ = true;
          return;
        }
        if (r.status != LpStatus::optimal)
          continue;
        const Rational v = r.value * sign;
        if (sign > 0)
          lo_[j] = std::max(lo_[j], to_int64(ceil_div(Integer(numerator(v)), Integer(denominator(v)))));
        else
          hi_[j] = std::min(hi_[j], to_int64(floor_div(Integer(numerator(v)), Integer(denominator(v)))));
        if (lo_[j] > hi_[j]) {
          empty_ = true;
          return;
        }
      }
    }
  }

  /// Shrinks the coordinate box by propagating every row to a fixpoint.
  void tighten_box()
  {
    for (int round = 0; round < 256; ++round) {
      bool changed = false;
      for (const auto& r : rows_) {
        i64 base = 0;
        for (std::size_t j = 0; j < n_; ++j)
          base += std::min(checked_mul(r.a[j], lo_[j]), checked_mul(r.a[j], hi_[j]));
        for (std::size_t j = 0; j < n_; ++j) {
          const i64 a = r.a[j];
          if (a == 0)
            continue;
          const i64 own = std::min(checked_mul(a, lo_[j]), checked_mul(a, hi_[j]));
          const i64 slack = r.rhs - (base - own);
          if (a > 0) {
            const i64 h = floor_div(slack, a);
            if (h < hi_[j]) {
              hi_[j] = h;
              changed = true;
            }
          } else {
            const i64 l = ceil_div(slack, a);
            if (l > lo_[j]) {
              lo_[j] = l;
              changed = true;
            }
          }
          if (lo_[j] > hi_[j]) {
            empty_ = true;
            return;
          }
          base = base - own + std::min(checked_mul(a, lo_[j]), checked_mul(a, hi_[j]));
        }
      }
      if (!changed)
        return;
    }
  }

  void solve_equations(const HRep& h)
  {
    solved_.assign(n_, -1);
    if (h.equations.empty())
      return;
    // RREF over reversed columns: each pivot is the last variable of its row.
    RatMatrix m;
    for (const auto& e : h.equations) {
      RatVector row(n_ + 1);
      for (std::size_t j = 0; j < n_; ++j)
        row[j] = e.a[n_ - 1 - j];
      row[n_] = e.b;
      m.push_back(std::move(row));
    }
    const auto pivots = rref(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Integer scale = 1;
      for (const auto& x : m[r])
        scale = lcm(scale, Integer(denominator(x)));
      Solved s;
      s.pivot = n_ - 1 - pivots[r];
      s.scale = to_int64(scale);
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t col = n_ - 1 - j;
        if (j == pivots[r] || m[r][j] == 0)
          continue;
        const Rational c = m[r][j] * scale;
        s.terms.emplace_back(col, to_int64(numerator(c)));
      }
      s.rhs = checked_mul(to_int64(numerator(Rational(m[r][n_] * scale))), k_);
      solved_[s.pivot] = static_cast<int>(equations_.size());
      equations_.push_back(std::move(s));
    }
  }

  /// Range allowed for x_j given x_0..x_{j-1}; empty when lo > hi.
  std::pair<i64, i64> bounds(std::size_t j)
  {
    i64 lo = lo_[j], hi = hi_[j];
    for (auto r : nonzero_[j]) {
      const auto& row = rows_[r];
      const i64 slack = row.rhs - partial_[r] - row.suffix_min[j + 1];
      const i64 a = row.a[j];
      if (a > 0)
        hi = std::min(hi, floor_div(slack, a));
      else
        lo = std::max(lo, ceil_div(slack, a));
      if (lo > hi)
        break;
    }
    if (opt_.bounds == BoundMode::linear_program && lo <= hi) {
      auto [l, u] = lp_bounds(j);
      lo = std::max(lo, l);
      hi = std::min(hi, u);
    }
    return {lo, hi};
  }

  /// Exact LP over convex weights μ with Σμ = k and the fixed prefix.
  std::pair<i64, i64> lp_bounds(std::size_t j)
  {
    const std::size_t m = v_.vertices.size();
    RatMatrix a(j + 1, RatVector(m));
    RatVector b(j + 1);
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t c = 0; c < m; ++c)
        a[i][c] = v_.vertices[c][i];
      b[i] = x_[i];
    }
    for (std::size_t c = 0; c < m; ++c)
      a[j][c] = 1;
    b[j] = k_;
    RatVector cost(m);
    for (std::size_t c = 0; c < m; ++c)
      cost[c] = v_.vertices[c][j];
    const auto low = solve_standard_form(a, b, cost);
    if (low.status != LpStatus::optimal)
      return {1, 0};
    for (auto& c : cost)
      c = -c;
    const auto high = solve_standard_form(a, b, cost);
    const Rational lv = low.value, hv = -high.value;
    return {to_int64(ceil_div(Integer(numerator(lv)), Integer(denominator(lv)))),
            to_int64(floor_div(Integer(numerator(hv)), Integer(denominator(hv))))};
  }

  void assign(std::size_t j, i64 value, int sign)
  {
    x_[j] = sign > 0 ? value : 0;
    for (auto r : nonzero_[j])
      partial_[r] += sign * rows_[r].a[j] * value;
  }

  void descend(std::size_t j)
  {
    if (++nodes_ > budget_)
      throw BudgetExceeded{};
    if (j == n_) {
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (partial_[r] > rows_[r].rhs)
          return;
      out_.push_back(x_);
      if (out_.size() > opt_.max_points)
        fail(ErrorKind::limit, "lattice point enumeration exceeded " + std::to_string(opt_.max_points) + " points");
      return;
    }
    auto [lo, hi] = bounds(j);
    if (lo > hi)
      return;
    if (solved_[j] >= 0) {
      const auto& s = equations_[static_cast<std::size_t>(solved_[j])];
      i64 num = s.rhs;
      for (const auto& [col, c] : s.terms)
        num -= c * x_[col];
      if (num % s.scale != 0)
        return;
      const i64 value = num / s.scale;
      if (value < lo || value > hi)
        return;
      assign(j, value, 1);
      descend(j + 1);
      assign(j, value, -1);
      return;
    }
    for (i64 value = lo; value <= hi; ++value) {
      assign(j, value, 1);
      descend(j + 1);
      assign(j, value, -1);
    }
  }

  const VRep& v_;
  const HRep& h_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = std::numeric_limits<std::uint64_t>::max();
  i64 k_;
  SearchOptions opt_;
  std::size_t n_;
  std::vector<i64> lo_, hi_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::size_t>> nonzero_;
  std::vector<int> solved_;
  std::vector<Solved> equations_;
  std::vector<i64> partial_;
  Point x_;
  std::vector<Point> out_;
  bool empty_ = false;
};

}  // namespace

std::vector<Point> lattice_points_in_dilate(const VRep& v, const HRep& h, std::int64_t k, const SearchOptions& options)
{
  if (k <= 0)
    fail(ErrorKind::invalid_argument, "dilation factor must be positive");
  if (h.ambient != v.ambient)
    fail(ErrorKind::invalid_argument, "H-representation does not match the vertex set");
  return Search(v, h, k, options).run();
}

}  // namespace margeo

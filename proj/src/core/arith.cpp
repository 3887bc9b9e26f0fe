#include "arith.hpp"

#include <limits>
#include <sstream>

namespace margeo {

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

std::int64_t to_int64(const Integer& value)
{
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi)
    fail(ErrorKind::limit, "integer " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::int64_t>();
}

Integer floor_div(const Integer& a, const Integer& b)
{
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0)))
    ++q;
  return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0)))
    ++q;
  return q;
}

Integer gcd_of(const IntVector& v)
{
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0)
      g = gcd(g, x);
    if (g == 1)
      break;
  }
  return abs(g);
}

void make_primitive(IntVector& v)
{
  const Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v)
      x /= g;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t)
{
  Integer old_r = a, r = b;
  Integer old_s = 1, cur_s = 0;
  Integer old_t = 0, cur_t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Integer dot(const IntVector& a, const IntVector& b)
{
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const Point& b)
{
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b)
{
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s += Rational(a[i]) * b[i];
  return s;
}

IntVector to_integers(const Point& p) { return IntVector(p.begin(), p.end()); }

Point to_point(const IntVector& v)
{
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    p[i] = to_int64(v[i]);
  return p;
}

RatVector to_rationals(const Point& p) { return RatVector(p.begin(), p.end()); }

IntVector primitive_multiple(const RatVector& v)
{
  Integer l = 1;
  for (const auto& x : v)
    l = lcm(l, Integer(denominator(x)));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = numerator(v[i]) * (l / denominator(v[i]));
  make_primitive(out);
  return out;
}

std::string to_string(const Point& p)
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace margeo

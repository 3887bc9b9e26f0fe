#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace margeo {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// A lattice point in ambient coordinates. Everything the library enumerates
/// (design-matrix columns, dilate points, count vectors) fits in 64 bits.
using Point = std::vector<std::int64_t>;

enum class ErrorKind { parse, invalid_argument, precondition, limit, io, internal };

/// Library error. The C API maps `kind` onto its status codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

std::int64_t to_int64(const Integer& value);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

Integer gcd_of(const IntVector& v);

/// Divides by the gcd of the entries; the zero vector is left untouched.
void make_primitive(IntVector& v);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

Integer dot(const IntVector& a, const IntVector& b);
Integer dot(const IntVector& a, const Point& b);
Rational dot(const IntVector& a, const RatVector& b);

IntVector to_integers(const Point& p);
Point to_point(const IntVector& v);
RatVector to_rationals(const Point& p);

/// Clears denominators and returns the primitive integer vector on the same ray.
IntVector primitive_multiple(const RatVector& v);

std::string to_string(const Point& p);

}  // namespace margeo

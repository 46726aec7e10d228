#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace equiquad {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision integer parts.
///
/// Always kept normalized: the denominator is positive, numerator and
/// denominator are coprime, and zero is stored as 0/1. Equality is
/// therefore structural. All arithmetic is exact.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int value) : num_(value), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  /// Throws std::invalid_argument if den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rational operator-() const;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  /// Throws std::invalid_argument on division by zero.
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational &lhs, const Rational &rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

  /// Nearest double; correctly rounded even when the parts overflow double.
  double to_double() const;

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &value);

/// Parses an integer ("3"), a fraction ("-5/8"), or a finite decimal
/// ("-0.5", converted exactly, never through floating point).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Generalized binomial coefficient C(a, j) = a(a-1)...(a-j+1)/j! for
/// rational a, computed by the recursion C(a,0) = 1,
/// C(a,j) = C(a,j-1)*(a-j+1)/j. Throws std::invalid_argument if j < 0.
Rational binomial_general(const Rational &a, int j);

/// Exact integer power; pow(x, 0) == 1 for every x including zero.
/// Negative exponents invert; throws std::invalid_argument for 0^-k.
Rational pow(const Rational &base, int exponent);

Rational abs(const Rational &value);

} // namespace equiquad

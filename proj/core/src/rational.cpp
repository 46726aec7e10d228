#include "equiquad/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace equiquad {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

BigInt parse_digits(std::string_view digits) {
  return BigInt(std::string(digits));
}

[[noreturn]] void bad_rational(std::string_view text, const char *why) {
  throw std::invalid_argument("cannot parse rational \"" + std::string(text) +
                              "\": " + why);
}

} // namespace

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0)
    throw std::invalid_argument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.num_ = -r.num_;
  return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.num_ == 0)
    throw std::invalid_argument("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
  const BigInt a = lhs.num_ * rhs.den_;
  const BigInt b = rhs.num_ * lhs.den_;
  if (a < b)
    return std::strong_ordering::less;
  if (a > b)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rational::to_double() const {
  return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::ostream &operator<<(std::ostream &os, const Rational &value) {
  return os << value.str();
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    bad_rational(text, "no digits");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool den_negative = false;
    if (!den.empty() && (den.front() == '+' || den.front() == '-')) {
      den_negative = den.front() == '-';
      den.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den))
      bad_rational(text, "expected integer/integer");
    BigInt d = parse_digits(den);
    if (d == 0)
      bad_rational(text, "zero denominator");
    BigInt n = parse_digits(num);
    if (negative != den_negative)
      n = -n;
    return Rational(std::move(n), std::move(d));
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      bad_rational(text, "no digits");
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_rational(text, "expected a finite decimal");
    BigInt n = whole.empty() ? BigInt(0) : parse_digits(whole);
    BigInt d = 1;
    for (char ch : frac) {
      n = n * 10 + (ch - '0');
      d *= 10;
    }
    if (negative)
      n = -n;
    return Rational(std::move(n), std::move(d));
  }

  if (!all_digits(s))
    bad_rational(text, "expected an integer, fraction, or decimal");
  BigInt n = parse_digits(s);
  if (negative)
    n = -n;
  return Rational(std::move(n));
}

Rational binomial_general(const Rational &a, int j) {
  if (j < 0)
    throw std::invalid_argument("binomial_general: negative lower index");
  Rational result(1);
  for (int t = 1; t <= j; ++t)
    result *= (a - Rational(t - 1)) / Rational(t);
  return result;
}

Rational pow(const Rational &base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero())
      throw std::invalid_argument("pow: zero base with negative exponent");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational x = base;
  for (int e = exponent; e > 0; e /= 2) {
    if (e % 2)
      result *= x;
    x *= x;
  }
  return result;
}

Rational abs(const Rational &value) {
  return value.sign() < 0 ? -value : value;
}

} // namespace equiquad

#include "equiquad/corrections.hpp"

#include <stdexcept>

namespace equiquad {

namespace {

BigInt int_binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  BigInt result = 1;
  for (int t = 1; t <= k; ++t) {
    result *= n - t + 1;
    result /= t;
  }
  return result;
}

int sign_pow(int e) { return e % 2 ? -1 : 1; }

} // namespace

std::vector<Rational> solve_b(const Rational &alpha, int m) {
  if (m < 0)
    throw std::invalid_argument("solve_b: m must be nonnegative");
  std::vector<Rational> b;
  b.reserve(m + 1);
  for (int i = 0; i <= m; ++i) {
    Rational rhs = Rational(sign_pow(i + 1), i + 2) - binomial_general(-alpha, i + 1);
    for (int k = 0; k < i; ++k)
      rhs -= Rational(sign_pow(i - k), i - k + 1) * b[k];
    b.push_back(std::move(rhs)); // unit diagonal: b_i is the remainder
  }
  return b;
}

std::vector<Rational> b_to_c(std::span<const Rational> b) {
  if (b.empty())
    throw std::invalid_argument("b_to_c: empty input");
  const int m = static_cast<int>(b.size()) - 1;
  std::vector<Rational> c;
  c.reserve(b.size());
  for (int i = 0; i <= m; ++i) {
    Rational ci;
    for (int k = i; k <= m; ++k)
      ci += Rational(sign_pow(k - i) * int_binomial(k, i)) * b[k];
    c.push_back(std::move(ci));
  }
  return c;
}

std::vector<Rational> c_to_b(std::span<const Rational> c) {
  if (c.empty())
    throw std::invalid_argument("c_to_b: empty input");
  const int m = static_cast<int>(c.size()) - 1;
  std::vector<Rational> b(c.size());
  for (int i = m; i >= 0; --i) {
    Rational bi = c[i];
    for (int k = i + 1; k <= m; ++k)
      bi -= Rational(sign_pow(k - i) * int_binomial(k, i)) * b[k];
    b[i] = std::move(bi);
  }
  return b;
}

CorrectionSet correction_set(const Rational &alpha, int m) {
  CorrectionSet set;
  set.alpha = alpha;
  set.degree = m;
  set.b = solve_b(alpha, m);
  set.c = b_to_c(set.b);
  return set;
}

} // namespace equiquad

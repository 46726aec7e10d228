#include "equiquad/rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace equiquad {

void RuleSpec::validate() const {
  if (m_left < 0 || m_right < 0)
    throw std::invalid_argument("rule spec: correction depths must be nonnegative");
  if (n < 0)
    throw std::invalid_argument("rule spec: n must be nonnegative");
  if (span().sign() <= 0)
    throw std::invalid_argument("rule spec: empty or inverted range (n + alpha + beta = " +
                                span().str() + ")");
}

const Rational &WeightVector::at(int index) const {
  static const Rational zero;
  if (index < lo || index > hi())
    return zero;
  return weights[index - lo];
}

Rational WeightVector::sum() const {
  Rational total;
  for (const Rational &w : weights)
    total += w;
  return total;
}

WeightVector build_weights(const RuleSpec &spec) {
  spec.validate();
  const std::vector<Rational> c = b_to_c(solve_b(spec.alpha, spec.m_left));
  const std::vector<Rational> d = b_to_c(solve_b(spec.beta, spec.m_right));

  WeightVector result;
  result.spec = spec;
  result.lo = std::min(0, spec.n - spec.m_right);
  const int hi = std::max(spec.n, spec.m_left);
  result.weights.reserve(hi - result.lo + 1);

  for (int i = result.lo; i <= hi; ++i) {
    Rational w = (i >= 0 && i <= spec.n) ? Rational(1) : Rational(0);
    if (i >= 0 && i <= spec.m_left)
      w += c[i];
    const int j = spec.n - i;
    if (j >= 0 && j <= spec.m_right)
      w += d[j];
    result.weights.push_back(std::move(w));
  }
  return result;
}

PhysicalRule map_to_interval(const RuleSpec &spec, double a, double b) {
  spec.validate();
  if (!(a < b))
    throw std::invalid_argument("map_to_interval: require a < b");

  const WeightVector wv = build_weights(spec);
  PhysicalRule rule;
  rule.a = a;
  rule.b = b;
  rule.h = (b - a) / spec.span().to_double();
  const double alpha = spec.alpha.to_double();
  rule.nodes.reserve(wv.weights.size());
  rule.weights.reserve(wv.weights.size());
  for (int i = wv.lo; i <= wv.hi(); ++i) {
    rule.nodes.push_back(a + (alpha + i) * rule.h);
    rule.weights.push_back(wv.weights[i - wv.lo].to_double() * rule.h);
  }
  return rule;
}

WeightVector newton_cotes_closed(int points) {
  if (points < 2)
    throw std::invalid_argument("newton_cotes_closed: need at least 2 points");
  return build_weights({Rational(0), Rational(0), points - 1, points - 1, points - 1});
}

WeightVector newton_cotes_open(int points) {
  if (points < 1)
    throw std::invalid_argument("newton_cotes_open: need at least 1 point");
  return build_weights({Rational(1), Rational(1), points - 1, points - 1, points - 1});
}

WeightVector gregory_rule(int m, int n) {
  return build_weights({Rational(0), Rational(0), m, m, n});
}

WeightVector adams_bashforth(int steps, Direction direction) {
  if (steps < 1)
    throw std::invalid_argument("adams_bashforth: need at least 1 step");
  const int m = steps - 1;
  if (direction == Direction::forward)
    return build_weights({Rational(-m), Rational(1), m, m, m});
  return build_weights({Rational(1), Rational(-m), m, m, m});
}

WeightVector adams_moulton(int steps) {
  if (steps < 2)
    throw std::invalid_argument("adams_moulton: need at least 2 steps");
  const int m = steps - 1;
  return build_weights({Rational(1 - m), Rational(0), m, m, m});
}

WeightVector discretized_corrected_trapezoid(int n) {
  return build_weights({Rational(-1), Rational(-1), 2, 2, n});
}

WeightVector discretized_corrected_midpoint(int n) {
  return build_weights({Rational(-1, 2), Rational(-1, 2), 1, 1, n});
}

} // namespace equiquad

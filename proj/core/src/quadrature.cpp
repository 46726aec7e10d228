#include "equiquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace equiquad {

namespace {

// Neumaier compensated summation; keeps convergence studies out of the
// rounding noise at fine resolutions.
class CompensatedSum {
public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term))
      compensation_ += (sum_ - t) + term;
    else
      compensation_ += (term - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

private:
  double sum_ = 0;
  double compensation_ = 0;
};

Rational eval_polynomial(std::span<const Rational> coefficients, const Rational &t) {
  Rational value;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    value = value * t + *it;
  return value;
}

} // namespace

void SampleSet::validate() const {
  if (values.empty())
    throw std::invalid_argument("sample set: need at least one ordinate");
  if (!(h > 0))
    throw std::invalid_argument("sample set: spacing h must be positive");
  const Rational span = Rational(static_cast<int>(values.size()) - 1) + alpha + beta;
  if (span.sign() <= 0)
    throw std::invalid_argument("sample set: empty or inverted range (span = " +
                                span.str() + " steps)");
}

double integrate_function(const std::function<double(double)> &f, double a,
                          double b, const RuleSpec &spec) {
  const PhysicalRule rule = map_to_interval(spec, a, b);
  CompensatedSum sum;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = f(rule.nodes[i]);
    if (!std::isfinite(y))
      throw std::domain_error("integrand is not finite at node t = " +
                              std::to_string(rule.nodes[i]));
    sum.add(rule.weights[i] * y);
  }
  return sum.value();
}

Rational integrate_polynomial(std::span<const Rational> coefficients,
                              const Rational &a, const Rational &b,
                              const RuleSpec &spec) {
  spec.validate();
  if ((b - a).sign() <= 0)
    throw std::invalid_argument("integrate_polynomial: require a < b");

  const WeightVector wv = build_weights(spec);
  const Rational h = (b - a) / spec.span();
  Rational total;
  for (int i = wv.lo; i <= wv.hi(); ++i) {
    const Rational node = a + (spec.alpha + Rational(i)) * h;
    total += wv.at(i) * eval_polynomial(coefficients, node);
  }
  return h * total;
}

double integrate_samples(const SampleSet &samples, int m_left, int m_right) {
  samples.validate();
  const int n = static_cast<int>(samples.values.size()) - 1;
  const WeightVector wv =
      build_weights({samples.alpha, samples.beta, m_left, m_right, n});

  if (wv.lo < 0 || wv.hi() > n) {
    std::string missing;
    if (wv.lo < 0)
      missing += std::to_string(wv.lo) + ".." + std::to_string(-1);
    if (wv.hi() > n) {
      if (!missing.empty())
        missing += " and ";
      missing += std::to_string(n + 1) + ".." + std::to_string(wv.hi());
    }
    throw std::out_of_range("corrections require samples at indices " + missing +
                            " outside the provided 0.." + std::to_string(n));
  }

  CompensatedSum sum;
  for (int i = 0; i <= n; ++i)
    sum.add(wv.at(i).to_double() * samples.values[i]);
  return samples.h * sum.value();
}

ConvergenceReport estimate_order(const std::function<double(double)> &f,
                                 double exact, double a, double b,
                                 const Rational &alpha, const Rational &beta,
                                 int m, int n0, int doublings) {
  if (doublings < 1)
    throw std::invalid_argument("estimate_order: need at least one doubling");
  if (n0 < 0)
    throw std::invalid_argument("estimate_order: n0 must be nonnegative");

  ConvergenceReport report;
  int nodes = n0 + 1;
  for (int level = 0; level <= doublings; ++level, nodes *= 2) {
    const RuleSpec spec{alpha, beta, m, m, nodes - 1};
    const double value = integrate_function(f, a, b, spec);
    const double h = (b - a) / spec.span().to_double();
    report.levels.push_back({nodes - 1, h, std::abs(value - exact)});
  }

  report.exact = false;
  for (const ConvergenceLevel &level : report.levels)
    if (level.error == 0)
      report.exact = true;

  if (report.exact) {
    report.estimated_order = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  double log_sum = 0;
  for (std::size_t k = 0; k + 1 < report.levels.size(); ++k) {
    const double ratio = report.levels[k].error / report.levels[k + 1].error;
    report.ratios.push_back(ratio);
    log_sum += std::log2(ratio);
  }
  report.estimated_order = log_sum / static_cast<double>(report.ratios.size());
  return report;
}

PairedEstimate paired_estimate(const std::function<double(double)> &f,
                               double a, double b, const Rational &alpha,
                               const Rational &beta, int m, int n) {
  const RuleSpec low{alpha, beta, m, m, n};
  const RuleSpec high{alpha, beta, m + 1, m + 1, n};
  low.validate();
  high.validate();

  const WeightVector w_low = build_weights(low);
  const WeightVector w_high = build_weights(high);

  // One evaluation per node index, shared by both rules.
  const int lo = std::min(w_low.lo, w_high.lo);
  const int hi = std::max(w_low.hi(), w_high.hi());
  const double h = (b - a) / low.span().to_double();
  const double alpha_d = alpha.to_double();

  CompensatedSum sum_low;
  CompensatedSum sum_high;
  for (int i = lo; i <= hi; ++i) {
    const double node = a + (alpha_d + i) * h;
    const double y = f(node);
    if (!std::isfinite(y))
      throw std::domain_error("integrand is not finite at node t = " +
                              std::to_string(node));
    sum_low.add(w_low.at(i).to_double() * y);
    sum_high.add(w_high.at(i).to_double() * y);
  }

  PairedEstimate result;
  result.estimate_low = h * sum_low.value();
  result.estimate_high = h * sum_high.value();
  result.difference = std::abs(result.estimate_low - result.estimate_high);
  return result;
}

std::vector<Rational> vandermonde_oracle(std::span<const int> node_indices,
                                         const Rational &alpha,
                                         const Rational &beta, int n) {
  const int count = static_cast<int>(node_indices.size());
  if (count == 0)
    throw std::invalid_argument("vandermonde_oracle: no node indices");
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (node_indices[i] == node_indices[j])
        throw std::invalid_argument("vandermonde_oracle: duplicate node index " +
                                    std::to_string(node_indices[i]));

  // Moment system rows k = 0..count-1; exact Gaussian elimination.
  std::vector<std::vector<Rational>> aug(count, std::vector<Rational>(count + 1));
  const Rational upper = Rational(n) + beta;
  const Rational lower = -alpha;
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < count; ++i)
      aug[k][i] = pow(Rational(node_indices[i]), k);
    aug[k][count] = (pow(upper, k + 1) - pow(lower, k + 1)) / Rational(k + 1);
  }

  for (int col = 0; col < count; ++col) {
    int pivot = -1;
    for (int row = col; row < count; ++row)
      if (!aug[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw std::invalid_argument("vandermonde_oracle: singular system");
    std::swap(aug[col], aug[pivot]);
    const Rational inv = Rational(1) / aug[col][col];
    for (int i = col; i <= count; ++i)
      aug[col][i] *= inv;
    for (int row = 0; row < count; ++row) {
      if (row == col || aug[row][col].is_zero())
        continue;
      const Rational factor = aug[row][col];
      for (int i = col; i <= count; ++i)
        aug[row][i] -= factor * aug[col][i];
    }
  }

  std::vector<Rational> weights(count);
  for (int i = 0; i < count; ++i)
    weights[i] = aug[i][count];
  return weights;
}

} // namespace equiquad

#pragma once

#include "equiquad/rational.hpp"
#include "equiquad/rules.hpp"

#include <functional>
#include <span>
#include <vector>

namespace equiquad {

/// Ordinates of a function sampled at fixed equispaced abscissae, together
/// with the terminal offsets relative to the first and last sample.
struct SampleSet {
  std::vector<double> values;
  double h = 0;
  Rational alpha;
  Rational beta;

  void validate() const;
};

struct ConvergenceLevel {
  int n = 0;
  double h = 0;
  double error = 0;
};

/// Per-refinement errors of a convergence study. ratios[k] is
/// error_k / error_{k+1} under doubling of the node count. When any level
/// integrates exactly the study is flagged `exact` and the order is NaN.
struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> ratios;
  double estimated_order = 0;
  bool exact = false;
};

/// Two integral estimates from the same ordinates (depths m and m+1) and
/// the absolute difference between them, usable as an error indicator.
struct PairedEstimate {
  double estimate_low = 0;  // depth m
  double estimate_high = 0; // depth m+1
  double difference = 0;
};

/// Applies the rule to f over [a, b]: h * sum_i w_i f(node_i), with nodes
/// from map_to_interval (possibly outside [a, b]). Throws std::domain_error
/// if f is not finite at any node.
double integrate_function(const std::function<double(double)> &f, double a,
                          double b, const RuleSpec &spec);

/// All-rational evaluation of a polynomial integrand (coefficients in
/// ascending degree order) over rational limits. Exact: no floating point
/// anywhere in the path.
Rational integrate_polynomial(std::span<const Rational> coefficients,
                              const Rational &a, const Rational &b,
                              const RuleSpec &spec);

/// Integrates pre-sampled ordinates with correction depths m_left/m_right.
/// The terminals sit alpha steps inside the first sample and beta steps
/// inside the last. Throws std::out_of_range, naming the missing indices,
/// if the corrections demand samples outside the provided set.
double integrate_samples(const SampleSet &samples, int m_left, int m_right);

/// Runs the node-doubling experiment: levels use node counts n0+1,
/// 2(n0+1), 4(n0+1), ... against a caller-supplied exact value.
ConvergenceReport estimate_order(const std::function<double(double)> &f,
                                 double exact, double a, double b,
                                 const Rational &alpha, const Rational &beta,
                                 int m, int n0, int doublings);

/// Integrates with depths m and m+1 on the same n+1 base nodes, reusing
/// every shared ordinate, and returns both estimates plus |difference|.
PairedEstimate paired_estimate(const std::function<double(double)> &f,
                               double a, double b, const Rational &alpha,
                               const Rational &beta, int m, int n);

/// Independent interpolatory-weight oracle: solves the exact moment system
///
///   sum_i w_i * idx_i^k = ((n+beta)^(k+1) - (-alpha)^(k+1)) / (k+1),
///   k = 0 .. count-1,
///
/// by exact Gaussian elimination over the given distinct node indices.
/// Throws std::invalid_argument on duplicate indices.
std::vector<Rational> vandermonde_oracle(std::span<const int> node_indices,
                                         const Rational &alpha,
                                         const Rational &beta, int n);

} // namespace equiquad

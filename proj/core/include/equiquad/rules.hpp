#pragma once

#include "equiquad/corrections.hpp"
#include "equiquad/rational.hpp"

#include <vector>

namespace equiquad {

/// Full parameterization of one rule instance.
///
/// The rule integrates from -alpha*h to (n+beta)*h over nodes at 0..n*h
/// (plus any nodes the corrections overshoot onto). alpha and beta are
/// the terminal offsets, measured inward in step-lengths; m_left and
/// m_right are the correction depths at each end.
struct RuleSpec {
  Rational alpha;
  Rational beta;
  int m_left = 0;
  int m_right = 0;
  int n = 0;

  /// Integration span in step-lengths: n + alpha + beta.
  Rational span() const { return Rational(n) + alpha + beta; }

  /// Throws std::invalid_argument unless m_left, m_right, n >= 0 and the
  /// span is positive.
  void validate() const;
};

/// Exact weights over consecutive node indices lo..hi. Indices below 0 or
/// above n appear when corrections overshoot the unit-weight block; such
/// weights are pure corrections (added to 0 instead of 1).
struct WeightVector {
  RuleSpec spec;
  int lo = 0;
  std::vector<Rational> weights;

  int hi() const { return lo + static_cast<int>(weights.size()) - 1; }

  /// Weight at absolute node index i; zero outside [lo, hi].
  const Rational &at(int index) const;

  /// Exactly n + alpha + beta for every valid spec.
  Rational sum() const;
};

/// A weight vector mapped onto a physical interval [a, b]. weights are
/// already scaled by the step h, so the integral estimate is
/// sum_i weights[i] * f(nodes[i]). Nodes may lie outside [a, b].
struct PhysicalRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double h = 0;
  double a = 0;
  double b = 0;
};

/// Assembles the weight vector for a spec: unit weights on nodes 0..n,
/// plus corrections c_i(alpha) at index i and d_j(beta) at index n-j.
/// Overlapping corrections sum.
WeightVector build_weights(const RuleSpec &spec);

/// Maps a spec onto [a, b]: h = (b-a)/(n+alpha+beta), node_i = a+(alpha+i)h.
/// Throws std::invalid_argument if a >= b.
PhysicalRule map_to_interval(const RuleSpec &spec, double a, double b);

/// Closed Newton-Cotes rule (alpha=beta=0, m=n=points-1). points >= 2.
WeightVector newton_cotes_closed(int points);

/// Open Newton-Cotes rule (alpha=beta=1, m=n=points-1). points >= 1.
WeightVector newton_cotes_open(int points);

/// Gregory's family: alpha=beta=0 end corrections of depth m on n+1 nodes.
WeightVector gregory_rule(int m, int n);

enum class Direction { forward, backward };

/// Adams-Bashforth weights on `steps` equispaced samples. Forward rules
/// integrate one step beyond the last node (alpha=-(steps-1), beta=1);
/// backward rules are the exact mirror (alpha=1, beta=-(steps-1)).
WeightVector adams_bashforth(int steps, Direction direction);

/// Adams-Moulton weights: alpha=1-(steps-1), beta=0, m=n=steps-1. steps >= 2.
WeightVector adams_moulton(int steps);

/// alpha=beta=-1, m=2: composite trapezoid with discretized derivative
/// end corrections; terminals one step inside the outermost nodes.
WeightVector discretized_corrected_trapezoid(int n);

/// alpha=beta=-1/2, m=1: composite midpoint with discretized derivative
/// end corrections; terminals half a step inside the outermost nodes.
WeightVector discretized_corrected_midpoint(int n);

} // namespace equiquad

#pragma once

#include "equiquad/rational.hpp"

#include <span>
#include <vector>

namespace equiquad {

/// End corrections for one terminal of an equispaced rule.
///
/// Ordering convention: corrections are stored outermost-first. c[0] is
/// applied at the node nearest the terminal (node 0 for a left end, node
/// n for a right end) and c[i] at the node i steps further inward. The
/// difference coefficients b are indexed by forward-difference order.
struct CorrectionSet {
  Rational alpha;          // terminal offset, measured inward in step-lengths
  int degree = 0;          // m: highest polynomial degree integrated exactly
  std::vector<Rational> b; // b[0..m], coefficients of the forward differences
  std::vector<Rational> c; // c[0..m], additive corrections to unit weights
};

/// Solves the lower-triangular unit-diagonal system
///
///   sum_{k=0}^{i} (-1)^(i-k)/(i-k+1) * b_k
///       = (-1)^(i+1)/(i+2) - C(-alpha, i+1),   i in [0..m]
///
/// by forward substitution. Extending m appends entries without changing
/// earlier ones. Throws std::invalid_argument if m < 0.
std::vector<Rational> solve_b(const Rational &alpha, int m);

/// c_i = sum_{k=i}^{m} C(k,i) (-1)^(k-i) b_k. Length preserved.
/// Throws std::invalid_argument if b is empty.
std::vector<Rational> b_to_c(std::span<const Rational> b);

/// Exact inverse of b_to_c, by back-substitution from b_m down to b_0.
/// Throws std::invalid_argument if c is empty.
std::vector<Rational> c_to_b(std::span<const Rational> c);

/// Bundles solve_b and b_to_c for one terminal.
CorrectionSet correction_set(const Rational &alpha, int m);

} // namespace equiquad

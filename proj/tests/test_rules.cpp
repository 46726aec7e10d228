#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equiquad/rules.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using equiquad::Direction;
using equiquad::Rational;
using equiquad::RuleSpec;
using equiquad::WeightVector;
using equiquad::build_weights;
using equiquad::map_to_interval;
using equiquad::parse_rational;

namespace {

std::vector<Rational> rats(std::initializer_list<const char *> texts) {
  std::vector<Rational> out;
  for (const char *t : texts)
    out.push_back(parse_rational(t));
  return out;
}

RuleSpec spec(const char *alpha, const char *beta, int m_left, int m_right, int n) {
  return {parse_rational(alpha), parse_rational(beta), m_left, m_right, n};
}

} // namespace

TEST_CASE("build_weights: published examples") {
  SUBCASE("3-point open Newton-Cotes") {
    const WeightVector wv = build_weights(spec("1", "1", 2, 2, 2));
    CHECK(wv.lo == 0);
    CHECK(wv.weights == rats({"8/3", "-4/3", "8/3"}));
  }
  SUBCASE("2-point open extended, overshoot route") {
    const WeightVector wv = build_weights(spec("0", "0", 2, 2, 1));
    CHECK(wv.lo == -1);
    CHECK(wv.hi() == 2);
    CHECK(wv.weights == rats({"-1/24", "13/24", "13/24", "-1/24"}));
  }
  SUBCASE("corrected midpoint ends, m=2, n=9") {
    const WeightVector wv = build_weights(spec("1/2", "1/2", 2, 2, 9));
    CHECK(wv.lo == 0);
    REQUIRE(wv.weights.size() == 10);
    CHECK(wv.weights[0] == Rational(13, 12));
    CHECK(wv.weights[1] == Rational(7, 8));
    CHECK(wv.weights[2] == Rational(25, 24));
    for (int i = 3; i <= 6; ++i)
      CHECK(wv.weights[i] == Rational(1));
    CHECK(wv.weights[9] == Rational(13, 12));
  }
  SUBCASE("semi-open right end, m=3") {
    const WeightVector wv = build_weights(spec("1/2", "0", 3, 3, 40));
    const auto tail = std::vector<Rational>(wv.weights.end() - 4, wv.weights.end());
    CHECK(tail == rats({"739/720", "211/240", "299/240", "251/720"}));
  }
}

TEST_CASE("weight sum equals n + alpha + beta") {
  for (const RuleSpec &s :
       {spec("0", "0", 2, 2, 1), spec("1", "1", 4, 4, 4), spec("-1", "-1", 2, 2, 5),
        spec("1/2", "0", 3, 1, 9), spec("-3/2", "5/4", 5, 0, 12)}) {
    CHECK(build_weights(s).sum() == s.span());
  }
}

TEST_CASE("symmetric specs give palindromic weights") {
  for (const RuleSpec &s : {spec("1/2", "1/2", 2, 2, 9), spec("0", "0", 3, 3, 3),
                            spec("-1", "-1", 2, 2, 7)}) {
    std::vector<Rational> w = build_weights(s).weights;
    std::vector<Rational> r(w.rbegin(), w.rend());
    CHECK(w == r);
  }
}

TEST_CASE("swap symmetry: reversal swaps the two ends") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> depth(0, 5);
  std::uniform_int_distribution<int> span(0, 12);
  int tested = 0;
  while (tested < 50) {
    const Rational alpha(num(rng), den(rng));
    const Rational beta(num(rng), den(rng));
    const int ml = depth(rng), mr = depth(rng), n = span(rng);
    const RuleSpec fwd{alpha, beta, ml, mr, n};
    if ((Rational(n) + alpha + beta).sign() <= 0)
      continue;
    ++tested;
    const RuleSpec rev{beta, alpha, mr, ml, n};
    std::vector<Rational> w = build_weights(fwd).weights;
    std::reverse(w.begin(), w.end());
    CHECK(w == build_weights(rev).weights);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(build_weights(spec("-1", "1", 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(build_weights(spec("0", "0", -1, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_weights(spec("0", "0", 0, 0, -2)), std::invalid_argument);
  CHECK_THROWS_AS(build_weights(spec("-2", "0", 2, 2, 1)), std::invalid_argument);
}

TEST_CASE("degenerate n=0 with overlapping corrections is permitted") {
  const WeightVector wv = build_weights(spec("1", "1", 2, 2, 0));
  CHECK(wv.lo == -2);
  CHECK(wv.hi() == 2);
  CHECK(wv.sum() == Rational(2));
  // monomial exactness still holds through k = 2
  Rational first_moment, second_moment;
  for (int i = wv.lo; i <= wv.hi(); ++i) {
    first_moment += wv.at(i) * Rational(i);
    second_moment += wv.at(i) * Rational(i * i);
  }
  CHECK(first_moment == Rational(0));
  CHECK(second_moment == Rational(2, 3));
}

TEST_CASE("closed Newton-Cotes catalog") {
  CHECK(equiquad::newton_cotes_closed(2).weights == rats({"1/2", "1/2"}));
  CHECK(equiquad::newton_cotes_closed(3).weights == rats({"1/3", "4/3", "1/3"}));
  CHECK(equiquad::newton_cotes_closed(4).weights == rats({"3/8", "9/8", "9/8", "3/8"}));
  CHECK(equiquad::newton_cotes_closed(5).weights ==
        rats({"14/45", "64/45", "8/15", "64/45", "14/45"}));
  CHECK_THROWS_AS(equiquad::newton_cotes_closed(1), std::invalid_argument);
}

TEST_CASE("even-m corrections reach the same closed rule one node longer") {
  CHECK(build_weights(spec("0", "0", 0, 0, 1)).weights ==
        equiquad::newton_cotes_closed(2).weights);
  CHECK(build_weights(spec("0", "0", 2, 2, 3)).weights ==
        equiquad::newton_cotes_closed(4).weights);
}

TEST_CASE("open Newton-Cotes catalog") {
  CHECK(equiquad::newton_cotes_open(1).weights == rats({"2"}));
  CHECK(equiquad::newton_cotes_open(2).weights == rats({"3/2", "3/2"}));
  CHECK(equiquad::newton_cotes_open(3).weights == rats({"8/3", "-4/3", "8/3"}));
  CHECK(equiquad::newton_cotes_open(4).weights ==
        rats({"55/24", "5/24", "5/24", "55/24"}));
  CHECK(equiquad::newton_cotes_open(5).weights ==
        rats({"33/10", "-21/5", "39/5", "-21/5", "33/10"}));
  CHECK_THROWS_AS(equiquad::newton_cotes_open(0), std::invalid_argument);
}

TEST_CASE("Gregory rules") {
  const WeightVector g29 = equiquad::gregory_rule(2, 9);
  CHECK(g29.weights[0] == Rational(3, 8));
  CHECK(g29.weights[1] == Rational(7, 6));
  CHECK(g29.weights[2] == Rational(23, 24));
  CHECK(g29.weights[3] == Rational(1));

  const WeightVector g0 = equiquad::gregory_rule(0, 6);
  CHECK(g0.weights.front() == Rational(1, 2));
  CHECK(g0.weights.back() == Rational(1, 2));
  for (std::size_t i = 1; i + 1 < g0.weights.size(); ++i)
    CHECK(g0.weights[i] == Rational(1));

  CHECK(equiquad::gregory_rule(1, 1).weights == rats({"1/2", "1/2"}));
}

TEST_CASE("Adams-Bashforth") {
  CHECK(equiquad::adams_bashforth(3, Direction::backward).weights ==
        rats({"23/12", "-4/3", "5/12"}));
  CHECK(equiquad::adams_bashforth(1, Direction::forward).weights == rats({"1"}));
  CHECK(equiquad::adams_bashforth(3, Direction::forward).weights ==
        rats({"5/12", "-4/3", "23/12"}));
  CHECK_THROWS_AS(equiquad::adams_bashforth(0, Direction::forward),
                  std::invalid_argument);

  // backward is the exact mirror of forward at every order
  for (int steps = 1; steps <= 6; ++steps) {
    std::vector<Rational> fwd =
        equiquad::adams_bashforth(steps, Direction::forward).weights;
    std::reverse(fwd.begin(), fwd.end());
    CHECK(fwd == equiquad::adams_bashforth(steps, Direction::backward).weights);
  }
}

TEST_CASE("Adams-Moulton") {
  CHECK(equiquad::adams_moulton(2).weights == rats({"1/2", "1/2"}));
  CHECK(equiquad::adams_moulton(3).weights == rats({"-1/12", "2/3", "5/12"}));
  CHECK(equiquad::adams_moulton(4).weights ==
        rats({"1/24", "-5/24", "19/24", "3/8"}));
  CHECK_THROWS_AS(equiquad::adams_moulton(1), std::invalid_argument);
}

TEST_CASE("discretized corrected trapezoid") {
  const WeightVector n3 = equiquad::discretized_corrected_trapezoid(3);
  CHECK(n3.lo == 0);
  CHECK(n3.weights == rats({"-1/24", "13/24", "13/24", "-1/24"}));

  const WeightVector big = equiquad::discretized_corrected_trapezoid(12);
  CHECK(big.weights[0] == Rational(-1, 24));
  CHECK(big.weights[1] == Rational(1, 2));
  CHECK(big.weights[2] == Rational(25, 24));
  CHECK(big.weights[3] == Rational(1));
  CHECK(big.sum() == Rational(10)); // n - 2
}

TEST_CASE("discretized corrected midpoint") {
  const WeightVector wv = equiquad::discretized_corrected_midpoint(9);
  CHECK(wv.weights[0] == Rational(1, 24));
  CHECK(wv.weights[1] == Rational(23, 24));
  CHECK(wv.weights[2] == Rational(1));
  CHECK(wv.sum() == Rational(8)); // n - 1

  // corrections relative to the composite midpoint rule (which has zero
  // weight at the overshoot node and unit weight afterwards)
  CHECK(wv.weights[0] - Rational(0) == Rational(1, 24));
  CHECK(wv.weights[1] - Rational(1) == Rational(-1, 24));
}

TEST_CASE("map_to_interval geometry") {
  SUBCASE("one-point midpoint rule") {
    const auto rule = map_to_interval(spec("1/2", "1/2", 0, 0, 0), 0.0, 1.0);
    REQUIRE(rule.nodes.size() == 1);
    CHECK(rule.nodes[0] == doctest::Approx(0.5));
    CHECK(rule.weights[0] == doctest::Approx(1.0));
    CHECK(rule.h == doctest::Approx(1.0));
  }
  SUBCASE("ten midpoints on [0,1]") {
    const auto rule = map_to_interval(spec("1/2", "1/2", 2, 2, 9), 0.0, 1.0);
    CHECK(rule.h == doctest::Approx(0.1));
    REQUIRE(rule.nodes.size() == 10);
    for (int i = 0; i < 10; ++i)
      CHECK(rule.nodes[i] == doctest::Approx(0.05 + 0.1 * i));
  }
  SUBCASE("overshoot nodes fall outside the interval") {
    const auto rule = map_to_interval(spec("0", "0", 2, 2, 1), 0.0, 1.0);
    CHECK(rule.h == doctest::Approx(1.0));
    REQUIRE(rule.nodes.size() == 4);
    CHECK(rule.nodes.front() == doctest::Approx(-1.0));
    CHECK(rule.nodes.back() == doctest::Approx(2.0));
  }
  SUBCASE("inverted interval rejected") {
    CHECK_THROWS_AS(map_to_interval(spec("0", "0", 1, 1, 1), 1.0, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("WeightVector::at covers overshoot and out-of-range indices") {
  const WeightVector wv = build_weights(spec("0", "0", 2, 2, 1));
  CHECK(wv.at(-1) == Rational(-1, 24));
  CHECK(wv.at(0) == Rational(13, 24));
  CHECK(wv.at(-2) == Rational(0));
  CHECK(wv.at(3) == Rational(0));
}

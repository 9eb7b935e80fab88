#pragma once

// One tag per in-scope identity, in reading order. Kept apart from the
// suite's own manifest so completeness is checked against a second list.

#include <string>
#include <vector>

inline const std::vector<std::string>& expected_tags() {
  static const std::vector<std::string> tags{
      "poly-binomial-expansion", "poly-unit-difference", "poly-value-at-one", "bernoulli-recurrence",
      "poly-finite-double-sum", "poly-vanishing-differences", "bernoulli-double-sum", "stirling2-explicit-sum",
      "bernoulli-stirling2-sum", "stirling1-weighted-bernoulli-sum", "euler-even-zeta", "beta-closed-form",
      "beta-integer-interpolation", "beta-odd-integers", "zeta-functional-equation", "zeta-cos-limit",
      "beta-negative-even", "beta-negative-odd", "b-s-of-one-series", "hurwitz-hasse-series", "digamma-hasse-limit",
      "riemann-hasse-series", "functional-series-form", "beta-series-form", "beta-integer-sign-rule",
      "hurwitz-negative-integers", "riemann-negative-integers", "trivial-zeros", "odd-zeta-indeterminate",
      "zeta-from-beta", "odd-zeta-lhopital", "odd-zeta-hasse", "zeta-derivative-series", "odd-zeta-functional",
      "beta-log-derivative", "beta-prime-odd", "stieltjes-series", "beta-reflection",
  };
  return tags;
}

#include "contbern/exact.hpp"

#include <doctest.h>

#include <thread>
#include <vector>

using namespace contbern::exact;

namespace {

// Pascal's triangle, independent of mpz_bin_uiui.
BigInt pascal(unsigned n, unsigned k) {
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k > n ? BigInt(0) : row[k];
}

// Coefficients of x(x-1)...(x-n+1), ascending.
std::vector<BigInt> falling_factorial(unsigned n) {
  std::vector<BigInt> c{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * i;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  for (unsigned n = 0; n < 10; ++n) CHECK(binomial(n, 0) == 1);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK(binomial(40, 20) == pascal(40, 20));
  CHECK(binomial(3, 7) == 0);
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1);
  for (unsigned n = 1; n < 8; ++n) CHECK(stirling2(n, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2_explicit(4, 2) == 7);
  for (unsigned n = 0; n < 12; ++n) CHECK(stirling2(n, n) == 1);
  CHECK(stirling2(3, 5) == 0);
}

TEST_CASE("explicit Stirling sum equals the triangle up to n = 25") {
  for (unsigned n = 0; n <= 25; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(stirling2_explicit(n, k) == stirling2(n, k));
    }
  }
}

TEST_CASE("signed Stirling numbers of the first kind") {
  for (unsigned n = 0; n < 10; ++n) CHECK(stirling1_signed(n, n) == 1);
  CHECK(stirling1_signed(3, 1) == 2);
  CHECK(stirling1_signed(4, 2) == 11);
  for (unsigned n = 0; n <= 12; ++n) {
    std::vector<BigInt> c = falling_factorial(n);
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling1_signed(n, k) == c[k]);
  }
}

TEST_CASE("Stirling orthogonality") {
  for (unsigned n = 0; n <= 15; ++n) {
    for (unsigned k = 0; k <= 15; ++k) {
      BigInt sum = 0;
      for (unsigned j = 0; j <= 15; ++j) sum += stirling1_signed(n, j) * stirling2(j, k);
      CHECK(sum == (n == k ? 1 : 0));
    }
  }
}

TEST_CASE("Bernoulli number examples") {
  CHECK(bernoulli_recurrence(0) == 1);
  CHECK(bernoulli_recurrence(1) == BigRat(-1, 2));
  CHECK(bernoulli_recurrence(12) == BigRat(-691, 2730));
  CHECK(bernoulli_doublesum(12) == BigRat(-691, 2730));
  CHECK(bernoulli_stirling(0) == 1);
  CHECK(bernoulli_stirling(1) == BigRat(-1, 2));
  CHECK(bernoulli_stirling(4) == BigRat(-1, 30));
  CHECK(bernoulli_doublesum(0) == 1);
  CHECK(bernoulli_doublesum(2) == BigRat(1, 6));
  CHECK(bernoulli_doublesum(6) == BigRat(1, 42));
  CHECK(bernoulli_at_one(1) == BigRat(1, 2));
  CHECK(bernoulli_at_one(2) == BigRat(1, 6));
}

TEST_CASE("three Bernoulli routes agree exactly for n <= 40") {
  for (unsigned n = 0; n <= 40; ++n) {
    CAPTURE(n);
    BigRat r = bernoulli_recurrence(n);
    CHECK(bernoulli_stirling(n) == r);
    CHECK(bernoulli_doublesum(n) == r);
    CHECK(r.get_den() > 0);
    CHECK(BigRat(r.get_num(), r.get_den()) == r);  // canonical
  }
}

TEST_CASE("odd Bernoulli numbers vanish") {
  for (unsigned n = 1; n <= 20; ++n) CHECK(bernoulli_recurrence(2 * n + 1) == 0);
}

TEST_CASE("Bernoulli polynomial coefficients") {
  BernoulliPoly p0 = bernoulli_poly(0);
  REQUIRE(p0.coeffs.size() == 1);
  CHECK(p0.coeffs[0] == 1);
  BernoulliPoly p1 = bernoulli_poly(1);
  REQUIRE(p1.coeffs.size() == 2);
  CHECK(p1.coeffs[0] == BigRat(-1, 2));
  CHECK(p1.coeffs[1] == 1);
  BernoulliPoly p2 = bernoulli_poly(2);
  REQUIRE(p2.coeffs.size() == 3);
  CHECK(p2.coeffs[0] == BigRat(1, 6));
  CHECK(p2.coeffs[1] == -1);
  CHECK(p2.coeffs[2] == 1);
  for (unsigned n = 0; n <= 20; ++n) {
    BernoulliPoly p = bernoulli_poly(n);
    CHECK(p.degree == n);
    CHECK(p.coeffs[n] == 1);
    CHECK(p.coeffs[0] == bernoulli_recurrence(n));
  }
}

TEST_CASE("Bernoulli polynomial values") {
  for (unsigned n = 0; n <= 12; ++n) CHECK(bernoulli_poly_eval(bernoulli_poly(n), 0) == bernoulli_recurrence(n));
  for (unsigned n = 2; n <= 12; ++n) CHECK(bernoulli_poly_eval(bernoulli_poly(n), 1) == bernoulli_recurrence(n));
  CHECK(bernoulli_poly_eval(bernoulli_poly(1), 1) == BigRat(1, 2));
  CHECK(bernoulli_poly_doublesum(1, 0) == BigRat(-1, 2));
  CHECK(bernoulli_poly_doublesum(3, BigRat(1, 2)) == 0);
  CHECK(bernoulli_poly_doublesum(2, 1) == BigRat(1, 6));
  for (unsigned n = 0; n <= 12; ++n) {
    for (const BigRat& x : {BigRat(-3), BigRat(1, 2), BigRat(5, 7), BigRat(4)}) {
      CHECK(bernoulli_poly_doublesum(n, x) == bernoulli_poly_eval(bernoulli_poly(n), x));
    }
  }
}

TEST_CASE("unit difference identity") {
  CHECK(check_difference_identity(3, 2));
  CHECK(bernoulli_poly_eval(bernoulli_poly(3), 3) - bernoulli_poly_eval(bernoulli_poly(3), 2) == 12);
  CHECK(check_difference_identity(1, 0));
  CHECK(check_difference_identity(5, -3));
  for (unsigned n = 1; n <= 20; ++n) {
    for (const BigRat& x : {BigRat(-2), BigRat(-1, 2), BigRat(0), BigRat(1, 3), BigRat(1), BigRat(7)}) {
      CHECK(check_difference_identity(n, x));
    }
  }
}

TEST_CASE("alternating binomial sums vanish beyond the degree") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = n + 1; k <= 12; ++k) {
      for (const BigRat& x : {BigRat(0), BigRat(1, 2), BigRat(3)}) CHECK(alternating_binomial_sum(k, n, x) == 0);
    }
  }
  // and do not vanish at k = n: (-1)^n n!
  CHECK(alternating_binomial_sum(3, 3, 0) == -6);
}

TEST_CASE("weighted first-kind Stirling sum") {
  CHECK(check_stirling1_bernoulli_sum(1));
  CHECK(check_stirling1_bernoulli_sum(2));
  CHECK(stirling1_signed(2, 1) * bernoulli_recurrence(1) + stirling1_signed(2, 2) * bernoulli_recurrence(2) ==
        BigRat(2, 3));
  CHECK(check_stirling1_bernoulli_sum(6));
  for (unsigned k = 1; k <= 20; ++k) CHECK(check_stirling1_bernoulli_sum(k));
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(BigRat(-691, 2730)) == "-691/2730");
  CHECK(to_string(BigRat(1)) == "1/1");
  CHECK(parse_rational("-691/2730") == BigRat(-691, 2730));
  CHECK(parse_rational("0.25") == BigRat(1, 4));
  CHECK(parse_rational("-1e-3") == BigRat(-1, 1000));
  CHECK(parse_rational("4/6") == BigRat(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(power(0, 0) == 1);
}

TEST_CASE("caches are safe under concurrent first use") {
  std::vector<std::thread> pool;
  std::vector<BigRat> got(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &got] { got[t] = bernoulli_recurrence(60 + t) + BigRat(stirling2(50, 20 + t)); });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) CHECK(got[t] == bernoulli_recurrence(60 + t) + BigRat(stirling2(50, 20 + t)));
}

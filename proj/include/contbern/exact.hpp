#pragma once

// Exact rational Bernoulli numbers, Bernoulli polynomials and Stirling
// numbers, each reachable by more than one independent route.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace contbern::exact {

using BigInt = mpz_class;
/// Always canonical (lowest terms, positive denominator).
using BigRat = mpq_class;

/// B_n(x) as ascending coefficients; coeffs[n] == 1 and coeffs[0] == B_n.
struct BernoulliPoly {
  std::size_t degree = 0;
  std::vector<BigRat> coeffs;
};

BigInt binomial(unsigned long n, unsigned long k);

/// S(n, k) from the triangle k S(n-1,k) + S(n-1,k-1).
BigInt stirling2(unsigned n, unsigned k);
/// S(n, k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n.
BigInt stirling2_explicit(unsigned n, unsigned k);
/// s(n, k): coefficients of the falling factorial x(x-1)...(x-n+1).
BigInt stirling1_signed(unsigned n, unsigned k);

/// B_n (B_1 = -1/2) by solving sum_{k<n} C(n,k) B_k = 0 for the newest term.
/// Memoized; safe to call concurrently.
BigRat bernoulli_recurrence(unsigned n);
/// B_n = sum_k (-1)^k k! S(n,k) / (k+1).
BigRat bernoulli_stirling(unsigned n);
/// B_n = sum_{k<=n} 1/(k+1) sum_j (-1)^j C(k,j) j^n, with 0^0 = 1.
BigRat bernoulli_doublesum(unsigned n);
/// B_n(1): equals B_n except B_1(1) = +1/2.
BigRat bernoulli_at_one(unsigned n);

BernoulliPoly bernoulli_poly(unsigned n);
/// Horner evaluation.
BigRat bernoulli_poly_eval(const BernoulliPoly& p, const BigRat& x);
/// B_n(x) = sum_{k<=n} 1/(k+1) sum_j (-1)^j C(k,j) (x+j)^n.
BigRat bernoulli_poly_doublesum(unsigned n, const BigRat& x);

/// sum_{j=0}^{k} (-1)^j C(k,j) (x+j)^n; zero whenever k > n.
BigRat alternating_binomial_sum(unsigned k, unsigned n, const BigRat& x);

/// B_n(x+1) - B_n(x) == n x^(n-1), exactly. Requires n >= 1.
bool check_difference_identity(unsigned n, const BigRat& x);
/// sum_{r=1}^k s(k,r) B_r == (-1)^k k!/(k+1), exactly. Requires k >= 1.
bool check_stirling1_bernoulli_sum(unsigned k);

/// x^n with 0^0 = 1.
BigRat power(const BigRat& x, unsigned n);

/// "numerator/denominator", e.g. "-691/2730" and "1/1".
std::string to_string(const BigRat& q);
/// Accepts "p/q", integers and finite decimals ("0.25", "-1e-3").
BigRat parse_rational(std::string_view text);

}  // namespace contbern::exact

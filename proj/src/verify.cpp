#include "contbern/verify.hpp"

#include "contbern/betafn.hpp"
#include "contbern/exact.hpp"
#include "contbern/format.hpp"
#include "contbern/hasse.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace contbern::verify {

namespace {

using exact::BigRat;

constexpr Bits kReportBits = 64;

struct Env {
  PrecisionCtx ctx;
  /// Tighter tolerance for values fed into finite differences.
  PrecisionCtx fd;
  Real floor;
  Bits w;
};

Real mag(const Complex& z) { return abs(z).with_bits(kReportBits); }

Real rounding(const Real& m, const Env& env) { return ldexp(m.with_bits(kReportBits), 2 - static_cast<long>(env.ctx.prec_bits)); }

Check make(std::string id, std::string_view tag, const Real& residual, const Real& tolerance, bool ok = true) {
  Check c;
  c.id = std::move(id);
  c.tag = std::string(tag);
  c.residual = residual.with_bits(kReportBits);
  c.tolerance = tolerance.with_bits(kReportBits);
  c.pass = ok && residual.is_finite() && residual <= tolerance;
  return c;
}

Real tolerance_for(const Real& err, const Env& env) { return max(err.with_bits(kReportBits), env.floor); }

/// got versus a value known to rounding.
Check close(std::string id, std::string_view tag, const SeriesEval& got, const Complex& expected, const Env& env) {
  Real residual = mag(got.value.with_bits(env.w) - expected.with_bits(env.w));
  Real err = got.abs_err + rounding(mag(expected), env);
  return make(std::move(id), tag, residual, tolerance_for(err, env), got.converged);
}

/// Two independently computed values.
Check agree(std::string id, std::string_view tag, const SeriesEval& a, const SeriesEval& b, const Env& env) {
  Real residual = mag(a.value.with_bits(env.w) - b.value.with_bits(env.w));
  return make(std::move(id), tag, residual, tolerance_for(a.abs_err + b.abs_err, env), a.converged && b.converged);
}

Check exact_equal(std::string id, std::string_view tag, const BigRat& lhs, const BigRat& rhs) {
  BigRat d = abs(lhs - rhs);
  return make(std::move(id), tag, Real(d, kReportBits), Real(kReportBits));
}

Check exact_flag(std::string id, std::string_view tag, bool ok) {
  return make(std::move(id), tag, Real(ok ? 0L : 1L, kReportBits), Real(kReportBits));
}

Real real(long v, const Env& env) { return Real(v, env.w); }
Real rat(const BigRat& q, const Env& env) { return Real(q, env.w); }
Real dec(const char* text, const Env& env) { return Real::parse(text, env.w); }
Complex cplx(const char* re, const char* im, const Env& env) { return {dec(re, env), dec(im, env)}; }
Real pi(const Env& env) { return const_pi(env.w); }

Real factorial(unsigned long n, const Env& env) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Real(f, env.w);
}

std::string num(long v) { return std::to_string(v); }

std::string label(const Complex& z) {
  std::string re = format::decimal(z.re, 8);
  if (z.im.is_zero()) return re;
  std::string im = format::decimal(z.im, 8);
  return re + (im.front() == '-' ? "" : "+") + im + "i";
}

/// Central difference of g at real s with step 2^(-prec/3); abs_err covers
/// the propagated value errors only.
SeriesEval central_difference(const std::function<SeriesEval(const Complex&)>& g, const Complex& s, const Env& env) {
  Real h = ldexp(Real(1L, env.w), -static_cast<long>(env.ctx.prec_bits / 3));
  SeriesEval up = g(s.with_bits(env.w) + Complex(h));
  SeriesEval down = g(s.with_bits(env.w) - Complex(h));
  SeriesEval out;
  out.value = (up.value.with_bits(env.w) - down.value.with_bits(env.w)) / (h * 2L);
  out.abs_err = ((up.abs_err + down.abs_err) / (h * 2L).with_bits(kReportBits)).with_bits(kReportBits);
  out.converged = up.converged && down.converged;
  return out;
}

/// Derivative value against a central difference, relative 2^(-prec/4).
Check derivative_check(std::string id, std::string_view tag, const SeriesEval& analytic, const SeriesEval& numeric,
                       const Env& env) {
  Real residual = mag(analytic.value.with_bits(env.w) - numeric.value.with_bits(env.w));
  Real rel = ldexp(Real(1L, kReportBits), -static_cast<long>(env.ctx.prec_bits / 4));
  Real tol = max(rel * mag(analytic.value), analytic.abs_err + numeric.abs_err);
  return make(std::move(id), tag, residual, tolerance_for(tol, env), analytic.converged && numeric.converged);
}

// ---------------------------------------------------------------- exact ---

std::vector<Check> exact_polynomials(const Env&) {
  std::vector<Check> out;
  const std::vector<BigRat> xs{BigRat(1, 3), BigRat(-5, 2), BigRat(7)};
  for (unsigned n = 0; n <= 16; ++n) {
    exact::BernoulliPoly p = exact::bernoulli_poly(n);
    bool shape = p.degree == n && p.coeffs.size() == n + 1 && p.coeffs[n] == 1 &&
                 p.coeffs[0] == exact::bernoulli_recurrence(n);
    BigRat worst = 0;
    for (const BigRat& x : xs) {
      BigRat direct = 0;
      for (unsigned k = 0; k <= n; ++k) {
        direct += BigRat(exact::binomial(n, k)) * exact::bernoulli_recurrence(k) * exact::power(x, n - k);
      }
      worst = std::max<BigRat>(worst, abs(exact::bernoulli_poly_eval(p, x) - direct));
      worst = std::max<BigRat>(worst, abs(exact::bernoulli_poly_doublesum(n, x) - direct));
    }
    Check c = exact_equal("poly-expansion/n=" + num(n), "poly-binomial-expansion", worst, 0);
    c.pass = c.pass && shape;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> exact_difference(const Env&) {
  std::vector<Check> out;
  const std::vector<BigRat> xs{BigRat(-2), BigRat(-1, 2), BigRat(0), BigRat(1, 3), BigRat(1), BigRat(7)};
  for (unsigned n = 1; n <= 20; ++n) {
    exact::BernoulliPoly p = exact::bernoulli_poly(n);
    BigRat worst = 0;
    bool flags = true;
    for (const BigRat& x : xs) {
      BigRat lhs = exact::bernoulli_poly_eval(p, x + 1) - exact::bernoulli_poly_eval(p, x);
      worst = std::max<BigRat>(worst, abs(lhs - BigRat(n) * exact::power(x, n - 1)));
      flags = flags && exact::check_difference_identity(n, x);
    }
    Check c = exact_equal("unit-difference/n=" + num(n), "poly-unit-difference", worst, 0);
    c.pass = c.pass && flags;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> exact_value_at_one(const Env&) {
  std::vector<Check> out;
  for (unsigned n = 2; n <= 30; ++n) {
    out.push_back(exact_equal("value-at-one/n=" + num(n), "poly-value-at-one",
                              exact::bernoulli_poly_eval(exact::bernoulli_poly(n), 1), exact::bernoulli_recurrence(n)));
  }
  out.push_back(exact_equal("value-at-one/n=1", "poly-value-at-one",
                            exact::bernoulli_poly_eval(exact::bernoulli_poly(1), 1), BigRat(1, 2)));
  return out;
}

std::vector<Check> exact_recurrence(const Env&) {
  std::vector<Check> out;
  out.push_back(exact_equal("recurrence/B1", "bernoulli-recurrence", exact::bernoulli_recurrence(1), BigRat(-1, 2)));
  for (unsigned n = 2; n <= 40; ++n) {
    BigRat sum = 0;
    for (unsigned k = 0; k < n; ++k) sum += BigRat(exact::binomial(n, k)) * exact::bernoulli_recurrence(k);
    out.push_back(exact_equal("recurrence/n=" + num(n), "bernoulli-recurrence", sum, 0));
  }
  for (unsigned n = 1; n <= 20; ++n) {
    out.push_back(exact_equal("recurrence/odd-vanishing/n=" + num(2 * n + 1), "bernoulli-recurrence",
                              exact::bernoulli_recurrence(2 * n + 1), 0));
  }
  return out;
}

std::vector<Check> exact_finite_double_sum(const Env&) {
  std::vector<Check> out;
  const std::vector<BigRat> xs{BigRat(-2), BigRat(1, 2), BigRat(7, 3)};
  for (unsigned n = 0; n <= 12; ++n) {
    BigRat worst = 0;
    for (const BigRat& x : xs) {
      worst = std::max<BigRat>(
          worst, abs(exact::bernoulli_poly_doublesum(n, x) - exact::bernoulli_poly_eval(exact::bernoulli_poly(n), x)));
    }
    out.push_back(exact_equal("finite-double-sum/n=" + num(n), "poly-finite-double-sum", worst, 0));
  }
  return out;
}

std::vector<Check> exact_vanishing(const Env& env) {
  std::vector<Check> out;
  const std::vector<BigRat> xs{BigRat(0), BigRat(1, 2), BigRat(3)};
  BigRat worst = 0;
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = n + 1; k <= 12; ++k) {
      for (const BigRat& x : xs) worst = std::max<BigRat>(worst, abs(exact::alternating_binomial_sum(k, n, x)));
    }
  }
  out.push_back(exact_equal("vanishing-differences/n<=8,k<=12", "poly-vanishing-differences", worst, 0));
  // The infinite form, summed numerically by the series engine.
  for (unsigned n : {2U, 5U}) {
    for (const BigRat& x : {BigRat(1, 2), BigRat(3)}) {
      IndexedKernel f([n, x](unsigned long j, Bits bits) {
        return Complex(pow(Real(x, bits) + static_cast<long>(j), static_cast<long>(n)));
      });
      SeriesEval s = hasse_sum(f, env.ctx);
      BigRat expected = exact::bernoulli_poly_eval(exact::bernoulli_poly(n), x);
      out.push_back(close("vanishing-differences/series/n=" + num(n) + ",x=" + exact::to_string(x),
                          "poly-vanishing-differences", s, Complex(rat(expected, env)), env));
    }
  }
  return out;
}

std::vector<Check> exact_routes(const Env&) {
  std::vector<Check> out;
  for (unsigned n = 0; n <= 40; ++n) {
    out.push_back(exact_equal("double-sum/n=" + num(n), "bernoulli-double-sum", exact::bernoulli_doublesum(n),
                              exact::bernoulli_recurrence(n)));
    out.push_back(exact_equal("stirling2-sum/n=" + num(n), "bernoulli-stirling2-sum", exact::bernoulli_stirling(n),
                              exact::bernoulli_recurrence(n)));
  }
  return out;
}

std::vector<Check> exact_stirling(const Env&) {
  std::vector<Check> out;
  for (unsigned n = 0; n <= 25; ++n) {
    BigRat worst = 0;
    for (unsigned k = 0; k <= n; ++k) {
      worst = std::max<BigRat>(worst, BigRat(abs(exact::stirling2_explicit(n, k) - exact::stirling2(n, k))));
    }
    out.push_back(exact_equal("stirling2-explicit/n=" + num(n), "stirling2-explicit-sum", worst, 0));
  }
  for (unsigned k = 1; k <= 20; ++k) {
    BigRat sum = 0;
    for (unsigned r = 1; r <= k; ++r) sum += BigRat(exact::stirling1_signed(k, r)) * exact::bernoulli_recurrence(r);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    BigRat rhs = BigRat(fact, k + 1);
    if (k % 2 == 1) rhs = -rhs;
    Check c = exact_equal("stirling1-weighted/k=" + num(k), "stirling1-weighted-bernoulli-sum", sum, rhs);
    c.pass = c.pass && exact::check_stirling1_bernoulli_sum(k);
    out.push_back(std::move(c));
  }
  return out;
}


// ---------------------------------------------------------------- hasse ---

std::vector<Check> hasse_hurwitz(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  Real half = dec("0.5", env);
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  for (const Complex& s : {Complex(real(3, env)), cplx("2", "1", env), Complex(dec("-1.5", env))}) {
    SeriesEval lhs = hurwitz_zeta(s, half, c);
    Complex factor = kernel::pow(real(2, env), s, env.w) - 1L;
    SeriesEval rhs = series_scale(riemann_zeta(s, c), factor, c);
    out.push_back(agree("hurwitz/half-shift/s=" + label(s), "hurwitz-hasse-series", lhs, rhs, env));
  }
  // zeta(s, 2) = zeta(s) - 1
  for (const Complex& s : {Complex(real(2, env)), cplx("0.5", "4", env)}) {
    SeriesEval lhs = hurwitz_zeta(s, real(2, env), c);
    SeriesEval rhs = series_sub(riemann_zeta(s, c), series_constant(Complex(real(1, env)), c), c);
    out.push_back(agree("hurwitz/unit-shift/s=" + label(s), "hurwitz-hasse-series", lhs, rhs, env));
  }
  return out;
}

std::vector<Check> hasse_riemann(const Env& env) {
  std::vector<Check> out;
  Real p = pi(env);
  out.push_back(close("riemann/s=2", "riemann-hasse-series", riemann_zeta(Complex(real(2, env)), env.ctx),
                      Complex(p * p / 6L), env));
  out.push_back(close("riemann/s=4", "riemann-hasse-series", riemann_zeta(Complex(real(4, env)), env.ctx),
                      Complex(pow(p, 4L) / 90L), env));
  out.push_back(close("riemann/s=6", "riemann-hasse-series", riemann_zeta(Complex(real(6, env)), env.ctx),
                      Complex(pow(p, 6L) / 945L), env));
  return out;
}

std::vector<Check> hasse_negative_integers(const Env& env) {
  std::vector<Check> out;
  const std::vector<BigRat> shifts{BigRat(1, 2), BigRat(1), BigRat(2), BigRat(7, 3)};
  for (const BigRat& a : shifts) {
    for (unsigned n = 0; n <= 8; ++n) {
      SeriesEval z = hurwitz_zeta(Complex(real(-static_cast<long>(n), env)), rat(a, env), env.ctx);
      BigRat expected = -exact::bernoulli_poly_eval(exact::bernoulli_poly(n + 1), a) / BigRat(n + 1);
      out.push_back(close("hurwitz-negative/n=" + num(n) + ",a=" + exact::to_string(a), "hurwitz-negative-integers", z,
                          Complex(rat(expected, env)), env));
    }
  }
  // With a = 1 the Bernoulli value is taken at x = 1 (B_1(1) = +1/2 at n = 0).
  for (unsigned n = 0; n <= 10; ++n) {
    SeriesEval z = riemann_zeta(Complex(real(-static_cast<long>(n), env)), env.ctx);
    BigRat expected = -exact::bernoulli_at_one(n + 1) / BigRat(n + 1);
    out.push_back(close("riemann-negative/n=" + num(n), "riemann-negative-integers", z, Complex(rat(expected, env)), env));
  }
  for (unsigned n = 1; n <= 5; ++n) {
    SeriesEval z = riemann_zeta(Complex(real(-2L * n, env)), env.ctx);
    out.push_back(close("trivial-zero/n=" + num(n), "trivial-zeros", z, Complex(Real(env.w)), env));
  }
  return out;
}

std::vector<Check> hasse_digamma(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  Real gamma = const_euler(env.w);
  // zeta(s, a) - 1/(s - 1) at s = 1 + 1e-6 approaches -psi(a) to O(1e-6).
  Real h = dec("1e-6", env);
  for (long a : {1L, 2L}) {
    SeriesEval z = hurwitz_zeta(Complex(1L + h), real(a, env), c);
    SeriesEval finite = series_sub(z, series_constant(Complex(1L / h), c), c);
    SeriesEval psi = digamma(real(a, env), c);
    Real residual = mag(finite.value + psi.value);
    out.push_back(make("digamma/pole-limit/a=" + num(a), "digamma-hasse-limit", residual,
                       max(dec("1e-4", env).with_bits(kReportBits), env.floor), finite.converged && psi.converged));
  }
  out.push_back(close("digamma/a=1", "digamma-hasse-limit", digamma(real(1, env), c), Complex(-gamma), env));
  out.push_back(close("digamma/a=1/2", "digamma-hasse-limit", digamma(dec("0.5", env), c),
                      Complex(-gamma - log(real(2, env)) * 2L), env));
  for (const BigRat& a : {BigRat(1, 3), BigRat(1), BigRat(5, 2)}) {
    Real ar = rat(a, env);
    SeriesEval diff = series_sub(digamma(ar + 1L, c), digamma(ar, c), c);
    out.push_back(close("digamma/recurrence/a=" + exact::to_string(a), "digamma-hasse-limit", diff,
                        Complex(1L / ar), env));
  }
  return out;
}

std::vector<Check> hasse_zeta_derivative(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  out.push_back(close("zeta-derivative/s=0", "zeta-derivative-series", zeta_derivative(Complex(Real(env.w)), c),
                      Complex(-log(pi(env) * 2L) / 2L), env));
  for (unsigned n = 1; n <= 3; ++n) {
    out.push_back(agree("zeta-derivative/neg-even/n=" + num(n), "zeta-derivative-series",
                        zeta_derivative(Complex(real(-2L * n, env)), c), zeta_prime_neg_even(n, c), env));
  }
  auto zeta_fd = [&env](const Complex& s) { return riemann_zeta(s, env.fd); };
  for (const Complex& s : {Complex(real(-4, env)), Complex(dec("2.5", env)), cplx("3", "2", env)}) {
    out.push_back(derivative_check("zeta-derivative/central-difference/s=" + label(s), "zeta-derivative-series",
                                   zeta_derivative(s, c), central_difference(zeta_fd, s, env), env));
  }
  return out;
}

std::vector<Check> hasse_stieltjes(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  out.push_back(close("stieltjes/p=0,u=1", "stieltjes-series", stieltjes(0, real(1, env), c),
                      Complex(const_euler(env.w)), env));
  for (const char* u : {"0.5", "1", "3"}) {
    Real ur = dec(u, env);
    SeriesEval sum = series_add(stieltjes(0, ur, c), digamma(ur, c), c);
    out.push_back(close(std::string("stieltjes/digamma-link/u=") + u, "stieltjes-series", sum, Complex(Real(env.w)), env));
  }
  // gamma_1(u) - gamma_1(u + 1) = log(u) / u
  for (const char* u : {"1", "2.5"}) {
    Real ur = dec(u, env);
    SeriesEval diff = series_sub(stieltjes(1, ur, c), stieltjes(1, ur + 1L, c), c);
    out.push_back(close(std::string("stieltjes/unit-shift/p=1,u=") + u, "stieltjes-series", diff,
                        Complex(log(ur) / ur), env));
  }
  return out;
}

// ----------------------------------------------------------------- beta ---

std::vector<Check> beta_euler(const Env& env) {
  std::vector<Check> out;
  Real two_pi = pi(env) * 2L;
  for (unsigned n = 1; n <= 8; ++n) {
    SeriesEval z = riemann_zeta(Complex(real(2L * n, env)), env.ctx);
    Real factor = factorial(2UL * n, env) * pow(two_pi, -2L * n) * 2L;
    if (n % 2 == 0) factor = -factor;
    out.push_back(close("euler-even-zeta/n=" + num(n), "euler-even-zeta", series_scale(z, Complex(factor), env.ctx),
                        Complex(rat(exact::bernoulli_recurrence(2 * n), env)), env));
  }
  return out;
}

std::vector<Check> beta_closed_values(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  out.push_back(close("beta-closed/s=2", "beta-closed-form", beta_closed(Complex(real(2, env)), c),
                      Complex(rat(BigRat(1, 6), env)), env));
  out.push_back(close("beta-closed/s=1", "beta-closed-form", beta_closed(Complex(real(1, env)), c),
                      Complex(dec("-0.5", env)), env));
  out.push_back(close("beta-closed/s=1/2", "beta-closed-form", beta_closed(Complex(dec("0.5", env)), c),
                      Complex(Real(env.w)), env));
  out.push_back(close("beta-closed/s=0", "beta-closed-form", beta_closed(Complex(Real(env.w)), c),
                      Complex(real(1, env)), env));
  // cos(pi (1 - s)) = -cos(pi s), computed as written.
  for (const Complex& s : {Complex(dec("0.3", env)), Complex(dec("2.75", env)), cplx("1.5", "0.5", env)}) {
    Complex sum = kernel::cos_pi(1L - s, env.w) + kernel::cos_pi(s, env.w);
    Real tol = ldexp(Real(1L, kReportBits), 8 - static_cast<long>(env.w)) * (1L + mag(kernel::cos_pi(s, env.w)));
    out.push_back(make("beta-closed/cosine-shift/s=" + label(s), "beta-closed-form", mag(sum), tolerance_for(tol, env)));
  }
  return out;
}

std::vector<Check> beta_integers(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  for (unsigned n = 0; n <= 16; ++n) {
    Complex s(real(n, env));
    Complex bn(rat(exact::bernoulli_recurrence(n), env));
    out.push_back(close("integer-interpolation/closed/n=" + num(n), "beta-integer-interpolation", beta_closed(s, c), bn, env));
    SeriesEval series = beta_series(s, c);
    out.push_back(close("integer-interpolation/series/n=" + num(n), "beta-integer-interpolation", series, bn, env));
    Complex rule = -kernel::cos_pi(1L - s, env.w) * Complex(rat(exact::bernoulli_at_one(n), env));
    out.push_back(close("integer-sign-rule/n=" + num(n), "beta-integer-sign-rule", series, rule, env));
  }
  for (unsigned n = 1; n <= 8; ++n) {
    SeriesEval b = beta_closed(Complex(real(2L * n, env)), c);
    const int want = n % 2 == 1 ? 1 : -1;
    out.push_back(exact_flag("integer-sign-rule/sign/n=" + num(n), "beta-integer-sign-rule", b.value.re.sign() == want));
  }
  // The odd-integer form: the cosine factor vanishes exactly, and so does beta.
  Real two_pi = pi(env) * 2L;
  for (unsigned n = 1; n <= 5; ++n) {
    const long m = 2L * n + 1;
    SeriesEval z = riemann_zeta(Complex(real(m, env)), c);
    Real factor = factorial(static_cast<unsigned long>(m), env) * pow(two_pi, -m) * 2L *
                  kernel::cos_pi(Real(m, env.w) / 2L, env.w);
    SeriesEval rhs = series_scale(z, Complex(factor), c);
    out.push_back(agree("odd-integers/n=" + num(n), "beta-odd-integers", beta_closed(Complex(real(m, env)), c), rhs, env));
  }
  return out;
}

std::vector<Check> beta_functional(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  for (const Complex& s : {Complex(real(2, env)), cplx("3", "1", env), Complex(dec("0.5", env)), Complex(dec("-2.5", env)),
                           cplx("2.5", "1.5", env)}) {
    out.push_back(close("functional-equation/s=" + label(s), "zeta-functional-equation", functional_equation_check(s, c),
                        Complex(Real(env.w)), env));
  }
  SeriesEval lim = limit_zeta_cos_at_one(c);
  Real residual = mag(lim.value + Complex(pi(env) / 2L));
  out.push_back(make("zeta-cos-limit", "zeta-cos-limit", residual,
                     max(lim.abs_err, max(dec("1e-5", env).with_bits(kReportBits), env.floor)), lim.converged));
  // 2 (2pi)^-s Gamma(s+1) zeta(s) cos(pi s/2) = -B_s(1)
  for (const Complex& s : {Complex(dec("2.5", env)), Complex(dec("0.3", env)), Complex(dec("-1.5", env)),
                           cplx("3", "0.5", env)}) {
    Complex factor = kernel::gamma(s + 1L, c.prec_bits, env.w) * kernel::pow(pi(env) * 2L, -s, env.w) *
                     kernel::cos_pi(s / 2L, env.w) * 2L;
    Real gamma_rel = ldexp(Real(1L, kReportBits), 4 - static_cast<long>(c.prec_bits));
    SeriesEval lhs = series_scale(riemann_zeta(s, c), factor, c, &gamma_rel);
    SeriesEval rhs = series_scale(b_s_of_one(s, c), Complex(real(-1, env)), c);
    out.push_back(agree("functional-series-form/s=" + label(s), "functional-series-form", lhs, rhs, env));
  }
  return out;
}

std::vector<Check> beta_routes(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  for (const Complex& s : {Complex(dec("0.3", env)), Complex(dec("2.5", env)), Complex(dec("4.7", env)),
                           Complex(dec("-0.6", env)), cplx("1.5", "0.5", env)}) {
    out.push_back(agree("series-form/s=" + label(s), "beta-series-form", beta_closed(s, c), beta_series(s, c), env));
  }
  for (unsigned n = 0; n <= 12; ++n) {
    out.push_back(close("b-s-of-one/n=" + num(n), "b-s-of-one-series", b_s_of_one(Complex(real(n, env)), c),
                        Complex(rat(exact::bernoulli_at_one(n), env)), env));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    out.push_back(agree("negative-even/n=" + num(n), "beta-negative-even", beta_negative_even(n, c),
                        beta_series(Complex(real(-2L * n, env)), c), env));
    out.push_back(agree("negative-odd/n=" + num(n), "beta-negative-odd", beta_negative_odd(n, c),
                        beta_series(Complex(real(1L - 2L * n, env)), c), env));
  }
  Real p = pi(env);
  out.push_back(close("negative-odd/n=1/value", "beta-negative-odd", beta_negative_odd(1, c), Complex(-(p * p) / 6L), env));
  out.push_back(close("negative-odd/n=2/value", "beta-negative-odd", beta_negative_odd(2, c), Complex(-pow(p, 4L) / 30L), env));
  // reflection form against the closed form at 1 - s
  for (const Complex& s : {Complex(real(-1, env)), Complex(dec("0.5", env)), Complex(real(2, env)), Complex(real(3, env)),
                           Complex(dec("2.7", env)), cplx("3", "0.5", env)}) {
    out.push_back(agree("reflection/s=" + label(s), "beta-reflection", beta_reflection(s, c), beta_closed(1L - s, c), env));
  }
  out.push_back(close("reflection/s=-1/value", "beta-reflection", beta_reflection(Complex(real(-1, env)), c),
                      Complex(rat(BigRat(1, 6), env)), env));
  return out;
}

std::vector<Check> beta_odd_zeta(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  Real two_pi = pi(env) * 2L;
  for (unsigned n = 1; n <= 3; ++n) {
    SeriesEval z = riemann_zeta(Complex(real(2L * n + 1, env)), c);
    SeriesEval h = zeta_odd_hasse(n, c);
    SeriesEval f = zeta_odd_functional(n, c);
    out.push_back(agree("odd-zeta-hasse/n=" + num(n), "odd-zeta-hasse", h, z, env));
    out.push_back(agree("odd-zeta-functional/n=" + num(n), "odd-zeta-functional", f, z, env));
    out.push_back(agree("odd-zeta-functional/vs-hasse/n=" + num(n), "odd-zeta-functional", f, h, env));
  }
  // zeta(s) recovered from beta(s) off the integers.
  for (const Complex& s : {Complex(dec("2.3", env)), Complex(dec("0.3", env)), cplx("4", "1", env)}) {
    Complex denom = kernel::gamma(s + 1L, c.prec_bits, env.w) * kernel::cos_pi(s / 2L, env.w) *
                    kernel::cos_pi(1L - s, env.w) * 2L;
    Complex factor = kernel::pow(two_pi, s, env.w) / denom;
    Real gamma_rel = ldexp(Real(1L, kReportBits), 5 - static_cast<long>(c.prec_bits));
    SeriesEval lhs = series_scale(beta_closed(s, c), factor, c, &gamma_rel);
    out.push_back(agree("zeta-from-beta/s=" + label(s), "zeta-from-beta", lhs, riemann_zeta(s, c), env));
  }
  // The indeterminate odd form 0/0, resolved as a ratio of central
  // differences at s = 2n+1.
  auto beta_fd = [&env](const Complex& s) { return beta_closed(s, env.fd); };
  for (unsigned n = 1; n <= 2; ++n) {
    const long m = 2L * n + 1;
    Complex s(real(m, env));
    SeriesEval db = central_difference(beta_fd, s, env);
    Real h = ldexp(Real(1L, env.w), -static_cast<long>(c.prec_bits / 3));
    Real dcos = (kernel::cos_pi((Real(m, env.w) + h) / 2L, env.w) - kernel::cos_pi((Real(m, env.w) - h) / 2L, env.w)) /
                (h * 2L);
    Real scale = pow(two_pi, m) / (factorial(static_cast<unsigned long>(m), env) * 2L * dcos);
    SeriesEval ratio = series_scale(db, Complex(scale), c);
    SeriesEval z = riemann_zeta(s, c);
    Real residual = mag(ratio.value - z.value);
    Real rel = ldexp(Real(1L, kReportBits), -static_cast<long>(c.prec_bits / 4)) * mag(z.value);
    out.push_back(make("odd-zeta-indeterminate/n=" + num(n), "odd-zeta-indeterminate", residual,
                       tolerance_for(max(rel, ratio.abs_err + z.abs_err), env), ratio.converged && z.converged));
  }
  // zeta(2n+1) = 2 (-1)^(n+1) (2pi)^(2n) / (2n+1)! beta'(2n+1)
  for (unsigned n = 1; n <= 2; ++n) {
    const long m = 2L * n + 1;
    Real factor = pow(two_pi, 2L * n) * 2L / factorial(static_cast<unsigned long>(m), env);
    if (n % 2 == 0) factor = -factor;
    SeriesEval lhs = series_scale(beta_prime(Complex(real(m, env)), c), Complex(factor), c);
    out.push_back(agree("odd-zeta-lhopital/n=" + num(n), "odd-zeta-lhopital", lhs,
                        riemann_zeta(Complex(real(m, env)), c), env));
  }
  return out;
}

std::vector<Check> beta_derivatives(const Env& env) {
  std::vector<Check> out;
  const PrecisionCtx& c = env.ctx;
  auto beta_fd = [&env](const Complex& s) { return beta_closed(s, env.fd); };
  for (const Complex& s : {Complex(dec("0.5", env)), Complex(real(2, env)), Complex(dec("4.3", env))}) {
    out.push_back(derivative_check("log-derivative/central-difference/s=" + label(s), "beta-log-derivative",
                                   beta_prime(s, c), central_difference(beta_fd, s, env), env));
  }
  for (unsigned n = 1; n <= 2; ++n) {
    Complex s(real(2L * n + 1, env));
    SeriesEval odd = beta_prime_odd(n, c);
    out.push_back(agree("beta-prime-odd/vs-log-derivative/n=" + num(n), "beta-prime-odd", odd, beta_prime(s, c), env));
    out.push_back(derivative_check("beta-prime-odd/central-difference/n=" + num(n), "beta-prime-odd", odd,
                                   central_difference(beta_fd, s, env), env));
  }
  return out;
}

using GroupFn = std::vector<Check> (*)(const Env&);

struct Group {
  std::string_view suite;
  GroupFn fn;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> g{
      {"exact", exact_polynomials},   {"exact", exact_difference},        {"exact", exact_value_at_one},
      {"exact", exact_recurrence},    {"exact", exact_finite_double_sum}, {"exact", exact_vanishing},
      {"exact", exact_routes},        {"exact", exact_stirling},          {"hasse", hasse_hurwitz},
      {"hasse", hasse_riemann},       {"hasse", hasse_negative_integers}, {"hasse", hasse_digamma},
      {"hasse", hasse_zeta_derivative}, {"hasse", hasse_stieltjes},       {"beta", beta_euler},
      {"beta", beta_closed_values},   {"beta", beta_integers},            {"beta", beta_functional},
      {"beta", beta_routes},          {"beta", beta_odd_zeta},            {"beta", beta_derivatives},
  };
  return g;
}

Real fd_tolerance(const PrecisionCtx& ctx) {
  return ldexp(Real(1L, 64), -static_cast<long>(ctx.prec_bits * 7 / 8));
}

}  // namespace

const std::vector<TagEntry>& tag_manifest() {
  static const std::vector<TagEntry> m{
      {"poly-binomial-expansion", "exact"},
      {"poly-unit-difference", "exact"},
      {"poly-value-at-one", "exact"},
      {"bernoulli-recurrence", "exact"},
      {"poly-finite-double-sum", "exact"},
      {"poly-vanishing-differences", "exact"},
      {"bernoulli-double-sum", "exact"},
      {"stirling2-explicit-sum", "exact"},
      {"bernoulli-stirling2-sum", "exact"},
      {"stirling1-weighted-bernoulli-sum", "exact"},
      {"hurwitz-hasse-series", "hasse"},
      {"riemann-hasse-series", "hasse"},
      {"hurwitz-negative-integers", "hasse"},
      {"riemann-negative-integers", "hasse"},
      {"trivial-zeros", "hasse"},
      {"digamma-hasse-limit", "hasse"},
      {"zeta-derivative-series", "hasse"},
      {"stieltjes-series", "hasse"},
      {"euler-even-zeta", "beta"},
      {"beta-closed-form", "beta"},
      {"beta-integer-interpolation", "beta"},
      {"beta-odd-integers", "beta"},
      {"zeta-functional-equation", "beta"},
      {"zeta-cos-limit", "beta"},
      {"beta-negative-even", "beta"},
      {"beta-negative-odd", "beta"},
      {"b-s-of-one-series", "beta"},
      {"functional-series-form", "beta"},
      {"beta-series-form", "beta"},
      {"beta-integer-sign-rule", "beta"},
      {"odd-zeta-indeterminate", "beta"},
      {"zeta-from-beta", "beta"},
      {"odd-zeta-lhopital", "beta"},
      {"odd-zeta-hasse", "beta"},
      {"odd-zeta-functional", "beta"},
      {"beta-log-derivative", "beta"},
      {"beta-prime-odd", "beta"},
      {"beta-reflection", "beta"},
  };
  return m;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"exact", "hasse", "beta", "all"};
  return names;
}

VerifyReport run(std::string_view suite, const PrecisionCtx& ctx, const Real& tol_floor) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("verify: unknown suite '" + std::string(suite) + "'");
  }
  ctx.validate();
  const bool all = suite == "all";

  Env env{ctx, ctx, tol_floor.with_bits(kReportBits), ctx.working_bits()};
  Real fd_tol = max(fd_tolerance(ctx), ldexp(Real(1L, 64), 8 - static_cast<long>(ctx.prec_bits)));
  env.fd.rel_tol = ctx.rel_tol < fd_tol ? ctx.rel_tol : fd_tol;

  std::vector<const Group*> selected;
  for (const Group& g : groups()) {
    if (all || g.suite == suite) selected.push_back(&g);
  }
  auto results = detail::parallel_map<std::vector<Check>>(selected.size(), [&](std::size_t i) { return selected[i]->fn(env); });

  VerifyReport report;
  report.suite = std::string(suite);
  std::set<std::string> seen;
  for (auto& block : results) {
    for (Check& c : block) {
      seen.insert(c.tag);
      report.checks.push_back(std::move(c));
    }
  }
  for (const TagEntry& t : tag_manifest()) {
    if ((all || t.suite == suite) && !seen.count(std::string(t.tag))) report.missing_tags.emplace_back(t.tag);
  }
  report.pass = report.missing_tags.empty() &&
                std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  return report;
}

}  // namespace contbern::verify

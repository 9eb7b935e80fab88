#include "contbern/betafn.hpp"

#include <array>
#include <optional>
#include <utility>

namespace contbern {

namespace {

Real gamma_rel_err(const PrecisionCtx& ctx) {
  return ldexp(Real(1L, 64), 4 - static_cast<long>(ctx.prec_bits));
}

Real singular_radius(const PrecisionCtx& ctx) {
  return ldexp(Real(1L, 64), -static_cast<long>(ctx.prec_bits / 4));
}

/// Nearest integer m when |s - m| < 2^(-prec/4).
std::optional<long> integer_neighbourhood(const Complex& s, const PrecisionCtx& ctx) {
  const Real radius = singular_radius(ctx);
  if (abs(s.im) >= radius) return std::nullopt;
  Real m = round_nearest(s.re);
  if (abs(s.re - m) >= radius) return std::nullopt;
  return mpfr_get_si(m.get(), MPFR_RNDN);
}

Complex two_pi_pow(const Complex& e, Bits w) { return kernel::pow(const_pi(w) * 2L, e, w); }

// 2 Gamma(s+1) (2 pi)^-s at working precision.
Complex gamma_prefactor(const Complex& s, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  Complex sw = s.with_bits(w);
  Complex g = kernel::gamma(sw + 1L, ctx.prec_bits, w);
  return g * two_pi_pow(-sw, w) * 2L;
}

SeriesEval beta_near_one(const Complex& s, const PrecisionCtx& ctx) {
  // zeta(s) cos(pi s/2) = [(s-1) zeta(s)] [cos(pi s/2) / (s-1)]; the second
  // factor tends to -pi/2.
  const Bits w = ctx.working_bits();
  Complex sw = s.with_bits(w);
  SeriesEval h = hurwitz_zeta_times_pole(s, Real(1L, w), ctx);
  Complex d = sw - 1L;
  Complex ratio = d.re.is_zero() && d.im.is_zero() ? Complex(-(const_pi(w) / 2L))
                                                   : kernel::cos_pi(sw / 2L, w) / d;
  Complex factor = gamma_prefactor(s, ctx) * kernel::cos_pi(1L - sw, w) * ratio;
  const Real rel = gamma_rel_err(ctx);
  return series_scale(h, factor, ctx, &rel);
}

// psi(x) for any real x off the nonpositive integers.
SeriesEval digamma_real(const Real& x, const PrecisionCtx& ctx) {
  if (x.sign() > 0) return digamma(x, ctx);
  // psi(x) = psi(1 - x) - pi cot(pi x)
  const Bits w = ctx.working_bits();
  Real xw = x.with_bits(w);
  SeriesEval p = digamma(1L - xw, ctx);
  Real cot = kernel::cos_pi(xw, w) / kernel::sin_pi(xw, w);
  return series_sub(p, series_constant(Complex(const_pi(w) * cot), ctx), ctx);
}

}  // namespace

SeriesEval b_s_of_one(const Complex& s, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  PowerLogKernel kernel(Real(1L, w), s.with_bits(w), 0);
  return hasse_sum(kernel, ctx);
}

SeriesEval beta_series(const Complex& s, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  SeriesEval b = b_s_of_one(s, ctx);
  return series_scale(b, -kernel::cos_pi(1L - s.with_bits(w), w), ctx);
}

SeriesEval beta_reflection(const Complex& s, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  Complex sw = s.with_bits(w);
  SeriesEval z = riemann_zeta(s, ctx);  // PoleError at s = 1
  Complex factor = (1L - sw) * kernel::cos_pi(sw, w);
  return series_scale(z, factor, ctx);
}

SeriesEval beta_closed(const Complex& s, const PrecisionCtx& ctx) {
  if (auto m = integer_neighbourhood(s, ctx)) {
    if (*m == 1) return beta_near_one(s, ctx);
    // Large |zeta Gamma| times a vanishing cosine; the series form keeps
    // full relative accuracy there.
    if (*m >= 3 && *m % 2 == 1) return beta_series(s, ctx);
    // Gamma(s+1) poles meet zeros of cos(pi s/2) or of zeta(s).
    if (*m <= -1) return beta_reflection(1L - s.with_bits(ctx.working_bits()), ctx);
  }
  const Bits w = ctx.working_bits();
  Complex sw = s.with_bits(w);
  SeriesEval z = riemann_zeta(s, ctx);
  Complex factor = gamma_prefactor(s, ctx) * kernel::cos_pi(sw / 2L, w) * kernel::cos_pi(1L - sw, w);
  const Real rel = gamma_rel_err(ctx);
  return series_scale(z, factor, ctx, &rel);
}

SeriesEval beta_negative_even(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("beta_negative_even: n must be >= 1");
  return beta_reflection(Complex(Real(2L * n + 1, ctx.working_bits())), ctx);
}

SeriesEval beta_negative_odd(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("beta_negative_odd: n must be >= 1");
  return beta_reflection(Complex(Real(2L * n, ctx.working_bits())), ctx);
}

SeriesEval beta_prime(const Complex& s, const PrecisionCtx& ctx) {
  if (!s.im.is_zero()) throw DomainError("beta_prime: real argument required");
  if (auto m = integer_neighbourhood(s, ctx); m && (*m == 1 || *m <= -1)) {
    throw SingularityError("beta_prime: too close to s = 1 or a negative integer");
  }
  const Bits w = ctx.working_bits();
  Real sw = s.re.with_bits(w);
  const Real pi = const_pi(w);
  const Real rel = gamma_rel_err(ctx);

  // beta = A zeta C1 C2 with A = 2 Gamma(s+1) (2pi)^-s, C1 = cos(pi s/2),
  // C2 = cos(pi(1-s)). Product rule:
  //   beta' = (psi(s+1) - log 2pi) beta + A zeta' C1 C2
  //           + A zeta (-(pi/2) S1 C2 + pi C1 S2)
  Complex a = gamma_prefactor(s, ctx);
  Real half = sw / 2L;
  Real one_minus = 1L - sw;
  Real c1 = kernel::cos_pi(half, w), s1 = kernel::sin_pi(half, w);
  Real c2 = kernel::cos_pi(one_minus, w), s2 = kernel::sin_pi(one_minus, w);

  SeriesEval z = riemann_zeta(s, ctx);
  SeriesEval zp = zeta_derivative(s, ctx);
  SeriesEval psi = digamma_real(sw + 1L, ctx);
  SeriesEval log_part = series_sub(psi, series_constant(Complex(log(pi * 2L)), ctx), ctx);

  SeriesEval beta = series_scale(z, a * Complex(c1 * c2), ctx, &rel);
  SeriesEval t1 = series_mul(log_part, beta, ctx);
  SeriesEval t2 = series_scale(zp, a * Complex(c1 * c2), ctx, &rel);
  Real trig = pi * c1 * s2 - (pi / 2L) * s1 * c2;
  SeriesEval t3 = series_scale(z, a * Complex(trig), ctx, &rel);
  return series_add(series_add(t1, t2, ctx), t3, ctx);
}

SeriesEval beta_prime_odd(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("beta_prime_odd: n must be >= 1");
  const Bits w = ctx.working_bits();
  const long order = 2L * n + 1;
  SeriesEval z = riemann_zeta(Complex(Real(order, w)), ctx);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(order));
  Real pi = const_pi(w);
  Real factor = pi * Real(fact, w) * pow(pi * 2L, -order);
  if (n % 2 == 0) factor = -factor;
  return series_scale(z, Complex(factor), ctx);
}

namespace {

// (-1)^n 2 (2 pi)^(2n) / (m)!
Real odd_zeta_factor(unsigned n, unsigned long m, Bits w) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), m);
  Real f = pow(const_pi(w) * 2L, 2L * n) * 2L / Real(fact, w);
  return n % 2 == 1 ? -f : f;
}

}  // namespace

SeriesEval zeta_odd_hasse(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("zeta_odd_hasse: n must be >= 1");
  const Bits w = ctx.working_bits();
  PowerLogKernel kernel(Real(1L, w), Complex(Real(2L * n + 1, w)), 1);
  SeriesEval g = hasse_sum(kernel, ctx);
  return series_scale(g, Complex(odd_zeta_factor(n, 2UL * n + 1, w)), ctx);
}

SeriesEval zeta_odd_functional(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("zeta_odd_functional: n must be >= 1");
  SeriesEval zp = zeta_prime_neg_even(n, ctx);
  return series_scale(zp, Complex(odd_zeta_factor(n, 2UL * n, ctx.working_bits())), ctx);
}

SeriesEval limit_zeta_cos_at_one(const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  const std::array<const char*, 3> steps{"1e-4", "1e-5", "1e-6"};
  std::array<Real, 3> h;
  std::array<SeriesEval, 3> samples;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h[i] = Real::parse(steps[i], w);
    Real s = 1L + h[i];
    samples[i] = series_scale(riemann_zeta(Complex(s), ctx), Complex(kernel::cos_pi(s / 2L, w)), ctx);
  }
  // Lagrange extrapolation to h = 0 through the three samples, and through
  // the two finest ones for the error estimate.
  Complex quad(w);
  Real weight_err(64);
  bool converged = true;
  for (std::size_t i = 0; i < 3; ++i) {
    Real weight(1L, w);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) weight *= (-h[j]) / (h[i] - h[j]);
    }
    quad += samples[i].value.with_bits(w) * weight;
    weight_err += abs(weight).with_bits(64) * samples[i].abs_err;
    converged = converged && samples[i].converged;
  }
  Real w1 = (-h[2]) / (h[1] - h[2]);
  Real w2 = (-h[1]) / (h[2] - h[1]);
  Complex linear = samples[1].value.with_bits(w) * w1 + samples[2].value.with_bits(w) * w2;

  SeriesEval out;
  out.value = quad.with_bits(ctx.prec_bits);
  out.abs_err = abs(quad - linear).with_bits(64) + weight_err;
  out.outer_terms_used = samples[2].outer_terms_used;
  out.converged = converged;
  return out;
}

SeriesEval functional_equation_check(const Complex& s, const PrecisionCtx& ctx) {
  if (auto m = integer_neighbourhood(s, ctx); m && (*m == 0 || *m == 1)) {
    throw DomainError("functional_equation_check: s too close to 0 or 1");
  }
  const Bits w = ctx.working_bits();
  Complex sw = s.with_bits(w);
  SeriesEval lhs = riemann_zeta(1L - sw, ctx);
  SeriesEval z = riemann_zeta(s, ctx);
  Complex factor = two_pi_pow(-sw, w) * kernel::gamma(sw, ctx.prec_bits, w) * kernel::cos_pi(sw / 2L, w) * 2L;
  const Real rel = gamma_rel_err(ctx);
  SeriesEval rhs = series_scale(z, factor, ctx, &rel);
  return series_sub(lhs, rhs, ctx);
}

}  // namespace contbern

#include "contbern/numkernel.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace contbern;

namespace {

const PrecisionCtx kCtx;

Real tol_bits(long e) { return ldexp(Real(1L, 64), e); }

Real rel(const Complex& a, const Complex& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("gamma at small integers and one half") {
  CHECK(gamma_ap(Complex(Real(1L, 256)), kCtx) == Complex(Real(1L, 256)));
  CHECK(gamma_ap(Complex(Real(5L, 256)), kCtx) == Complex(Real(24L, 256)));
  Complex half = gamma_ap(Complex(Real::parse("0.5", 256)), kCtx);
  Real pi = const_pi(256);
  CHECK(abs(half.re * half.re - pi) / pi < tol_bits(-250));
  CHECK(half.im.is_zero());
  CHECK(gamma_ap(Complex(Real(1L, 256)), kCtx).bits() == kCtx.prec_bits);
}

TEST_CASE("gamma poles are rejected") {
  for (long k : {0L, -1L, -2L, -7L}) CHECK_THROWS_AS(gamma_ap(Complex(Real(k, 256)), kCtx), PoleError);
  CHECK_NOTHROW(gamma_ap(Complex(Real::parse("-2.001", 256)), kCtx));
}

TEST_CASE("gamma recurrence and reflection on a random grid") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> radius(0.0, 20.0), angle(-3.14159, 3.14159);
  const Real bound = tol_bits(8 - static_cast<long>(kCtx.prec_bits));
  const Real pi = const_pi(kCtx.working_bits());
  int tested = 0;
  while (tested < 100) {
    const bool real_axis = tested % 2 == 0;
    const double r = radius(rng), t = angle(rng);
    Complex s = real_axis ? Complex(Real(r * std::cos(t), 256)) : Complex(Real(r * std::cos(t), 256), Real(r * std::sin(t), 256));
    // keep away from poles of Gamma(s) and Gamma(1 - s)
    Real frac = abs(s.re - round_nearest(s.re));
    if (abs(s.im) < Real::parse("1e-3", 64) && frac < Real::parse("1e-3", 64)) continue;
    ++tested;
    CAPTURE(s);
    Complex g = gamma_ap(s, kCtx);
    Complex g1 = gamma_ap(s + 1L, kCtx);
    CHECK(rel(s * g, g1) < bound);
    Complex gm = gamma_ap(1L - s, kCtx);
    Complex prod = g * gm * sin_pi(s, kCtx) / pi;
    CHECK(abs(prod - 1L) < bound);
  }
}

TEST_CASE("pi-multiple trig examples") {
  CHECK(cos_pi(Real::parse("0.5", 256), kCtx).is_zero());
  CHECK(cos_pi(Real(3L, 256), kCtx) == Real(-1L, 256));
  Real sixth = sin_pi(Real(1L, 256) / 6L, kCtx);
  CHECK(abs(sixth - Real::parse("0.5", 256)) < tol_bits(-254));
  CHECK(sin_pi(Real::parse("0.5", 256), kCtx) == Real(1L, 256));
}

TEST_CASE("trig zeros are exact for every integer up to a million") {
  bool all_zero = true;
  for (long k = -1000000; k <= 1000000; ++k) {
    Real x(k, 64);
    Real h = x + Real::parse("0.5", 64);
    if (!kernel::sin_pi(x, 64).is_zero() || !kernel::cos_pi(h, 64).is_zero()) {
      all_zero = false;
      FAIL_CHECK("nonzero at k = " << k);
      break;
    }
  }
  CHECK(all_zero);
  // same at the default width, on a spread of k
  for (long k : {-1000000L, -999999L, -12345L, -1L, 0L, 1L, 2L, 77777L, 999999L, 1000000L}) {
    CHECK(sin_pi(Real(k, 256), kCtx).is_zero());
    CHECK(cos_pi(Real(k, 256) + Real::parse("0.5", 256), kCtx).is_zero());
  }
}

TEST_CASE("complex trig agrees with the real kernel on the axis") {
  Real x = Real::parse("0.3", 256);
  CHECK(cos_pi(Complex(x), kCtx).re == cos_pi(x, kCtx));
  CHECK(sin_pi(Complex(x), kCtx).im.is_zero());
}

TEST_CASE("real-base complex powers") {
  Complex s(Real::parse("0.75", 256), Real::parse("-3.5", 256));
  CHECK(pow_complex(Real(1L, 256), s, kCtx) == Complex(Real(1L, 256)));
  CHECK(pow_complex(Real(2L, 256), Complex(Real(3L, 256)), kCtx) == Complex(Real(8L, 256)));
  const Bits w = kCtx.working_bits();
  Complex euler(Real(w), const_pi(w) / const_log2(w));
  Complex minus_one = pow_complex(Real(2L, 256), euler, kCtx);
  CHECK(abs(minus_one + Complex(Real(1L, 256))) < tol_bits(-250));
  CHECK_THROWS_AS(pow_complex(Real(0L, 256), s, kCtx), DomainError);
  CHECK_THROWS_AS(pow_complex(Real(-2L, 256), s, kCtx), DomainError);
}

TEST_CASE("power additivity within four ulp at working precision") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0), b(0.1, 5.0);
  const Bits w = kCtx.working_bits();
  const Real bound = tol_bits(2 - static_cast<long>(w));  // 4 ulp relative
  for (int i = 0; i < 50; ++i) {
    Real base(b(rng), w);
    Complex s1(Real(u(rng), w), Real(u(rng), w));
    Complex s2(Real(u(rng), w), Real(u(rng), w));
    Complex lhs = kernel::pow(base, s1 + s2, w);
    Complex rhs = kernel::pow(base, s1, w) * kernel::pow(base, s2, w);
    CHECK(rel(lhs, rhs) < bound);
  }
}

TEST_CASE("logarithm") {
  CHECK(log_ap(Real(1L, 256), kCtx).is_zero());
  Real e = exp(Real(1L, kCtx.working_bits()));
  CHECK(abs(log_ap(e, kCtx) - 1L) < tol_bits(-254));
  Real ln2 = log_ap(Real(2L, 256), kCtx);
  CHECK(ln2 == const_log2(256));
  CHECK(format::decimal(ln2, 16) == "0.6931471805599453");
  CHECK_THROWS_AS(log_ap(Real(0L, 256), kCtx), DomainError);
  CHECK_THROWS_AS(log_ap(Real(-1L, 256), kCtx), DomainError);
}

TEST_CASE("precision contract") {
  PrecisionCtx c;
  CHECK_NOTHROW(c.validate());
  c.guard_bits = 100;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  PrecisionCtx m = PrecisionCtx::make(128, "1e-20", 1000);
  CHECK(m.guard_bits >= 1032);
  CHECK_THROWS_AS(PrecisionCtx::make(64, "1e-30", 400).validate(), std::invalid_argument);
  Real x = Real::parse("1.25", 96);
  CHECK((x + Real(1L, 256)).bits() == 256);
  CHECK_THROWS_AS(Real::parse("1.5x", 64), std::invalid_argument);
}

#include "contbern/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace contbern {

namespace {

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(std::max(a.bits(), b.bits()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real Real::parse(std::string_view text, Bits bits) {
  std::string s(text);
  Real r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}
std::partial_ordering operator<=>(const Real& a, long b) {
  if (a.is_nan()) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}
std::partial_ordering operator<=>(const Real& a, double b) {
  if (a.is_nan() || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r(x.bits());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }
Real pow(const Real& base, long exponent) {
  Real r(base.bits());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real round_nearest(const Real& x) {
  Real r(x.bits());
  mpfr_round(r.get(), x.get());
  return r;
}
Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
Real const_euler(Bits bits) {
  Real r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}
Real const_log2(Bits bits) {
  Real r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {
  const Bits b = std::max(re.bits(), im.bits());
  if (re.bits() != b) re = re.with_bits(b);
  if (im.bits() != b) im = im.with_bits(b);
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  if (im.is_zero() && o.im.is_zero()) {
    re *= o.re;
    im = Real(std::max(re.bits(), o.bits()));
    return *this;
  }
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  // Smith's algorithm.
  if (abs(o.re) >= abs(o.im)) {
    Real ratio = o.im / o.re;
    Real denom = o.re + o.im * ratio;
    Real r = (re + im * ratio) / denom;
    Real i = (im - re * ratio) / denom;
    re = std::move(r);
    im = std::move(i);
  } else {
    Real ratio = o.re / o.im;
    Real denom = o.re * ratio + o.im;
    Real r = (re * ratio + im) / denom;
    Real i = (im * ratio - re) / denom;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

Real abs(const Complex& z) {
  if (z.im.is_zero()) return abs(z.re);
  return hypot(z.re, z.im);
}

Complex exp(const Complex& z) {
  Real mag = exp(z.re);
  if (z.im.is_zero()) return Complex(mag);
  Real c(z.bits()), s(z.bits());
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return {mag * c, mag * s};
}

Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
  Real arg(z.bits());
  mpfr_atan2(arg.get(), z.im.get(), z.re.get(), MPFR_RNDN);
  return {log(abs(z)), arg};
}

// ---------------------------------------------------------------------------
// PrecisionCtx

void PrecisionCtx::validate() const {
  if (prec_bits < 2) throw std::invalid_argument("prec_bits must be at least 2");
  if (max_outer_terms == 0) throw std::invalid_argument("max_outer_terms must be positive");
  if (stagnation_window == 0) throw std::invalid_argument("stagnation_window must be positive");
  if (guard_bits < static_cast<Bits>(max_outer_terms) + 32) {
    throw std::invalid_argument("guard_bits must be at least max_outer_terms + 32");
  }
  if (!(rel_tol >= ldexp(Real(1L, 64), 1 - static_cast<long>(prec_bits)))) {
    throw std::invalid_argument("rel_tol must be at least 2^(1 - prec_bits)");
  }
  if (kernel_shift < kAutoShift) throw std::invalid_argument("kernel_shift must be >= 0 or auto");
}

PrecisionCtx PrecisionCtx::make(Bits prec_bits, std::string_view rel_tol, std::size_t max_outer_terms) {
  PrecisionCtx ctx;
  ctx.prec_bits = prec_bits;
  ctx.rel_tol = Real::parse(rel_tol, 64);
  ctx.max_outer_terms = max_outer_terms;
  ctx.guard_bits = std::max<Bits>(ctx.guard_bits, static_cast<Bits>(max_outer_terms) + 32);
  ctx.validate();
  return ctx;
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernel {

namespace {

// r = x - 2 round(x / 2) in [-1, 1]; exact because the remainder of two
// binary floats is representable at the dividend's precision.
Real reduce_mod2(const Real& x) {
  Real r(std::max<Bits>(x.bits(), 2));
  Real two(2L, 2);
  mpfr_remainder(r.get(), x.get(), two.get(), MPFR_RNDN);
  return r;
}

Real cos_pi_small(const Real& t, Bits bits) {
  // t in [0, 1/2]
  Real r(bits);
  if (mpfr_cmp_d(t.get(), 0.25) <= 0) {
    Real arg = const_pi(bits) * t.with_bits(bits);
    mpfr_cos(r.get(), arg.get(), MPFR_RNDN);
  } else {
    Real rest = Real(0.5, t.bits()) - t;  // exact
    Real arg = const_pi(bits) * rest.with_bits(bits);
    mpfr_sin(r.get(), arg.get(), MPFR_RNDN);
  }
  return r;
}

Real sin_pi_small(const Real& t, Bits bits) {
  // t in [0, 1/2]
  if (mpfr_cmp_d(t.get(), 0.25) <= 0) {
    Real arg = const_pi(bits) * t.with_bits(bits);
    Real s(bits);
    mpfr_sin(s.get(), arg.get(), MPFR_RNDN);
    return s;
  }
  Real rest = Real(0.5, t.bits()) - t;
  Real arg = const_pi(bits) * rest.with_bits(bits);
  Real c(bits);
  mpfr_cos(c.get(), arg.get(), MPFR_RNDN);
  return c;
}

}  // namespace

Real cos_pi(const Real& x, Bits bits) {
  if (!x.is_finite()) return Real::nan(bits);
  Real t = abs(reduce_mod2(x));
  bool negate = false;
  if (mpfr_cmp_d(t.get(), 0.5) > 0) {
    t = Real(1L, t.bits()) - t;  // Sterbenz: exact
    negate = true;
  }
  Real r(bits);
  if (t.is_zero()) {
    r = Real(1L, bits);
  } else if (mpfr_cmp_d(t.get(), 0.5) == 0) {
    return Real(bits);
  } else {
    r = cos_pi_small(t, bits);
  }
  return negate ? -r : r;
}

Real sin_pi(const Real& x, Bits bits) {
  if (!x.is_finite()) return Real::nan(bits);
  Real r0 = reduce_mod2(x);
  const bool negate = r0.sign() < 0;
  Real t = abs(r0);
  if (mpfr_cmp_d(t.get(), 0.5) > 0) t = Real(1L, t.bits()) - t;
  Real r(bits);
  if (t.is_zero()) return Real(bits);
  if (mpfr_cmp_d(t.get(), 0.5) == 0) {
    r = Real(1L, bits);
  } else {
    r = sin_pi_small(t, bits);
  }
  return negate ? -r : r;
}

Complex cos_pi(const Complex& z, Bits bits) {
  if (z.im.is_zero()) return Complex(cos_pi(z.re, bits));
  // cos(pi(x+iy)) = cos(pi x) cosh(pi y) - i sin(pi x) sinh(pi y)
  Real py = const_pi(bits) * z.im.with_bits(bits);
  Real ch(bits), sh(bits);
  mpfr_sinh_cosh(sh.get(), ch.get(), py.get(), MPFR_RNDN);
  return {cos_pi(z.re, bits) * ch, -(sin_pi(z.re, bits) * sh)};
}

Complex sin_pi(const Complex& z, Bits bits) {
  if (z.im.is_zero()) return Complex(sin_pi(z.re, bits));
  // sin(pi(x+iy)) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)
  Real py = const_pi(bits) * z.im.with_bits(bits);
  Real ch(bits), sh(bits);
  mpfr_sinh_cosh(sh.get(), ch.get(), py.get(), MPFR_RNDN);
  return {sin_pi(z.re, bits) * ch, cos_pi(z.re, bits) * sh};
}

Complex pow(const Real& base, const Complex& s, Bits bits) {
  Real b = base.with_bits(std::max(bits, base.bits()));
  if (s.im.is_zero()) {
    Real r(bits);
    mpfr_pow(r.get(), b.get(), s.re.get(), MPFR_RNDN);
    return Complex(r);
  }
  // Extra bits absorb the amplification of log(b) rounding by |s|.
  const long amp = std::max(abs(s.re).exponent(), abs(s.im).exponent());
  const Bits inner = bits + 32 + std::max(0L, amp);
  Real lb = log(b.with_bits(inner));
  Real mag = exp(s.re.with_bits(inner) * lb);
  Real ang = s.im.with_bits(inner) * lb;
  Real c(inner), sn(inner);
  mpfr_sin_cos(sn.get(), c.get(), ang.get(), MPFR_RNDN);
  return {(mag * c).with_bits(bits), (mag * sn).with_bits(bits)};
}

int spouge_parameter(Bits target_bits) {
  // Spouge's relative error is below a^(-1/2) (2 pi)^-(a + 1/2).
  const double a = std::ceil(static_cast<double>(target_bits + 6) * std::log(2.0) / std::log(2.0 * M_PI)) + 2.0;
  return static_cast<int>(a);
}

bool near_nonpositive_integer(const Complex& z, Bits bits) {
  Real scale = max(Real(1L, 64), abs(z.re).with_bits(64));
  Real ulp = ldexp(scale, -static_cast<long>(bits));
  if (abs(z.im) > ulp) return false;
  Real nearest = round_nearest(z.re);
  if (nearest.sign() > 0) return false;
  return abs(z.re - nearest) <= ulp;
}

namespace {

// Gamma(s) for Re(s) >= 1/2 via Spouge:
// Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [c_0 + sum_{k=1}^{a-1} c_k / (z+k)].
Complex spouge(const Complex& s, Bits target_bits, Bits bits) {
  const int a = spouge_parameter(target_bits);
  // Coefficients alternate with magnitude up to ~(2 pi)^a.
  const Bits w = bits + 3 * static_cast<Bits>(a) + 16;
  Complex z = s.with_bits(w) - 1L;
  Real two_pi = const_pi(w) * 2L;
  Complex series(sqrt(two_pi));
  mpz_class factorial = 1;  // (k-1)!
  for (int k = 1; k < a; ++k) {
    if (k > 1) factorial *= (k - 1);
    Real base(static_cast<long>(a - k), w);
    Real ck = pow(base, Real(static_cast<double>(k) - 0.5, w)) * exp(Real(static_cast<long>(a - k), w));
    ck /= Real(factorial, w);
    if (k % 2 == 0) ck = -ck;
    series += Complex(ck) / (z + static_cast<long>(k));
  }
  Complex t = z + static_cast<long>(a);
  Complex half_z = z + Complex(Real(0.5, w));
  Complex result = exp(half_z * log(t) - t) * series;
  return result.with_bits(bits);
}

}  // namespace

Complex gamma(const Complex& s, Bits target_bits, Bits bits) {
  if (near_nonpositive_integer(s, bits)) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  if (s.re < 0.5) {
    // Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
    const Bits w = bits + 16;
    Complex one_minus = 1L - s.with_bits(w);
    Complex g = spouge(one_minus, target_bits + 16, w);
    Complex sn = sin_pi(s.with_bits(w), w);
    return (Complex(const_pi(w)) / (sn * g)).with_bits(bits);
  }
  return spouge(s, target_bits, bits);
}

}  // namespace kernel

Complex gamma_ap(const Complex& s, const PrecisionCtx& ctx) {
  return kernel::gamma(s, ctx.prec_bits, ctx.working_bits()).with_bits(ctx.prec_bits);
}

Real cos_pi(const Real& x, const PrecisionCtx& ctx) {
  return kernel::cos_pi(x, ctx.working_bits()).with_bits(ctx.prec_bits);
}
Real sin_pi(const Real& x, const PrecisionCtx& ctx) {
  return kernel::sin_pi(x, ctx.working_bits()).with_bits(ctx.prec_bits);
}
Complex cos_pi(const Complex& z, const PrecisionCtx& ctx) {
  return kernel::cos_pi(z, ctx.working_bits()).with_bits(ctx.prec_bits);
}
Complex sin_pi(const Complex& z, const PrecisionCtx& ctx) {
  return kernel::sin_pi(z, ctx.working_bits()).with_bits(ctx.prec_bits);
}

Complex pow_complex(const Real& base, const Complex& s, const PrecisionCtx& ctx) {
  if (!(base.sign() > 0)) throw DomainError("pow_complex: base must be positive");
  return kernel::pow(base, s, ctx.working_bits()).with_bits(ctx.prec_bits);
}

Real log_ap(const Real& x, const PrecisionCtx& ctx) {
  if (!(x.sign() > 0)) throw DomainError("log_ap: argument must be positive");
  return log(x.with_bits(ctx.working_bits())).with_bits(ctx.prec_bits);
}

}  // namespace contbern

#pragma once

// Arbitrary-precision real/complex carriers and the transcendental kernels
// shared by the series engine: gamma, log, pi-multiple trig, real-base powers.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace contbern {

class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on (or within one working ulp of) a genuine pole.
class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Argument too close to a removable or excluded singularity of a formula.
class SingularityError : public NumericError {
 public:
  using NumericError::NumericError;
};

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 256;

/// Binary floating-point number of configurable mantissa width. Every
/// arithmetic operation is correctly rounded (round-to-nearest) to the wider
/// of the two operand precisions.
class Real {
 public:
  Real() : Real(kDefaultBits) {}
  explicit Real(Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}
  Real(unsigned long value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_ui(v_, value, MPFR_RNDN);
  }
  Real(double value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Real(const mpz_class& value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& value, Bits bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  /// Parses a decimal literal ("0.5", "-3", "1e-30", "nan"); throws
  /// std::invalid_argument on trailing garbage.
  static Real parse(std::string_view text, Bits bits);

  static Real nan(Bits bits) {
    Real r(bits);
    mpfr_set_nan(r.v_);
    return r;
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  [[nodiscard]] Bits bits() const { return mpfr_get_prec(v_); }
  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  [[nodiscard]] mpfr_ptr get() { return v_; }

  /// Copy rounded (or exactly widened) to `bits`.
  [[nodiscard]] Real with_bits(Bits bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; meaningless for zero.
  [[nodiscard]] long exponent() const { return mpfr_get_exp(v_); }

  Real operator-() const {
    Real r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
/// Natural log without domain checks (NaN for x < 0); see log_ap.
Real log(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real ldexp(const Real& x, long e);
Real round_nearest(const Real& x);
Real hypot(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real const_pi(Bits bits);
Real const_euler(Bits bits);
Real const_log2(Bits bits);

/// Pair of Reals; both parts always carry the same precision.
struct Complex {
  Real re;
  Real im;

  Complex() : Complex(kDefaultBits) {}
  explicit Complex(Bits bits) : re(bits), im(bits) {}
  Complex(Real real_part)  // NOLINT(google-explicit-constructor)
      : re(std::move(real_part)), im(re.bits()) {}
  Complex(Real real_part, Real imag_part);

  [[nodiscard]] Bits bits() const { return re.bits(); }
  [[nodiscard]] bool is_real() const { return im.is_zero(); }
  [[nodiscard]] Complex with_bits(Bits bits) const { return {re.with_bits(bits), im.with_bits(bits)}; }
  [[nodiscard]] bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
  friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
  friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
  friend Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Real abs(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);

/// Per-call numeric policy. Immutable value; pass by const reference.
struct PrecisionCtx {
  static constexpr int kAutoShift = -1;

  Bits prec_bits = kDefaultBits;         ///< output mantissa width
  Real rel_tol = Real::parse("1e-30", 64);
  std::size_t max_outer_terms = 400;
  Bits guard_bits = 432;                 ///< >= max_outer_terms + 32
  std::size_t stagnation_window = 5;
  /// Hasse kernel shift N (sum f(.+N), then subtract sum_{j<N} f'(j)).
  /// kAutoShift picks N from rel_tol; 0 sums the literal series.
  int kernel_shift = kAutoShift;

  [[nodiscard]] Bits working_bits() const { return prec_bits + guard_bits; }

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  /// Context with the given output width, tolerance and term cap; guard bits
  /// are raised to max_outer_terms + 32 as needed.
  static PrecisionCtx make(Bits prec_bits, std::string_view rel_tol, std::size_t max_outer_terms = 400);
};

/// Low-level kernels at an explicit precision; results are not rounded to any
/// context. The context-taking functions below are the public contract.
namespace kernel {

Real cos_pi(const Real& x, Bits bits);
Real sin_pi(const Real& x, Bits bits);
Complex cos_pi(const Complex& z, Bits bits);
Complex sin_pi(const Complex& z, Bits bits);
/// base^s for base > 0 (exact for small integer powers of exact bases).
Complex pow(const Real& base, const Complex& s, Bits bits);
/// Gamma with relative error below 2^-(target_bits - 4), evaluated at `bits`.
Complex gamma(const Complex& s, Bits target_bits, Bits bits);
/// Spouge parameter used for a given output width.
int spouge_parameter(Bits target_bits);
/// True when z is within one ulp (at `bits`) of an integer <= 0.
bool near_nonpositive_integer(const Complex& z, Bits bits);

}  // namespace kernel

/// Gamma(s). Reflection formula for Re(s) < 1/2, Spouge otherwise.
/// Throws PoleError at nonpositive integers.
Complex gamma_ap(const Complex& s, const PrecisionCtx& ctx);

/// cos(pi x) / sin(pi x) with exact reduction of x against its integer part;
/// cos_pi(k + 1/2) and sin_pi(k) are exactly zero.
Real cos_pi(const Real& x, const PrecisionCtx& ctx);
Real sin_pi(const Real& x, const PrecisionCtx& ctx);
Complex cos_pi(const Complex& z, const PrecisionCtx& ctx);
Complex sin_pi(const Complex& z, const PrecisionCtx& ctx);

/// exp(s log base). Throws DomainError for base <= 0.
Complex pow_complex(const Real& base, const Complex& s, const PrecisionCtx& ctx);

/// Natural log. Throws DomainError for x <= 0.
Real log_ap(const Real& x, const PrecisionCtx& ctx);

}  // namespace contbern

#pragma once

// Hasse-type double series
//
//   L[f] = sum_{m>=0} 1/(m+1) sum_{k=0}^{m} C(m,k) (-1)^k f(k)
//
// and the zeta/digamma/Stieltjes functions built from it. Inner sums come from
// a forward-difference table (the inner sum at m is (-1)^m Delta^m f(0)).
//
// Raw truncation converges only algebraically in m. When the kernel provides
// f', the engine uses the exact shift rule L[f] = L[f(.+N)] - sum_{j<N} f'(j),
// after which the series converges like m^-N.

#include "contbern/numkernel.hpp"

#include <cstddef>
#include <functional>

namespace contbern {

struct SeriesEval {
  Complex value;
  Real abs_err;
  std::size_t outer_terms_used = 0;
  bool converged = false;
};

/// f: nonnegative reals -> complex, sampled at x = k + shift.
class TermKernel {
 public:
  virtual ~TermKernel() = default;
  [[nodiscard]] virtual Complex value(const Real& x, Bits bits) const = 0;
  [[nodiscard]] virtual bool has_derivative() const { return false; }
  /// f'(x); only called when has_derivative().
  [[nodiscard]] virtual Complex derivative(const Real& x, Bits bits) const;
};

/// f(x) = (x + offset)^exponent * log^log_power(x + offset), offset > 0.
class PowerLogKernel final : public TermKernel {
 public:
  PowerLogKernel(Real offset, Complex exponent, unsigned log_power);

  [[nodiscard]] Complex value(const Real& x, Bits bits) const override;
  [[nodiscard]] bool has_derivative() const override { return true; }
  [[nodiscard]] Complex derivative(const Real& x, Bits bits) const override;

 private:
  Real offset_;
  Complex exponent_;
  unsigned log_power_;
};

/// Integer-indexed kernel without a derivative (always summed unshifted).
class IndexedKernel final : public TermKernel {
 public:
  using Fn = std::function<Complex(unsigned long k, Bits bits)>;
  explicit IndexedKernel(Fn fn) : fn_(std::move(fn)) {}
  [[nodiscard]] Complex value(const Real& x, Bits bits) const override;

 private:
  Fn fn_;
};

/// Shift N used for `kernel` under `ctx` (0 when the kernel has no f').
int effective_shift(const TermKernel& kernel, const PrecisionCtx& ctx);

/// L[f], truncated once stagnation_window consecutive terms fall below the
/// tolerance. Working precision is ctx.working_bits(); the value is rounded
/// to ctx.prec_bits. Never throws for non-convergence; see `converged`.
SeriesEval hasse_sum(const TermKernel& f, const PrecisionCtx& ctx);

/// Error bound satisfied by a converged result: rel_tol |v|, or rel_tol
/// absolutely when |v| < rel_tol.
Real convergence_bound(const Real& magnitude, const PrecisionCtx& ctx);

// Composition helpers. Errors add linearly; each step adds a rounding term
// of 2^(4 - prec_bits) |result|.

/// Exact (to rounding) constant as a SeriesEval.
SeriesEval series_constant(const Complex& v, const PrecisionCtx& ctx);
/// a * factor, where factor carries relative error `factor_rel_err`.
SeriesEval series_scale(const SeriesEval& a, const Complex& factor, const PrecisionCtx& ctx,
                        const Real* factor_rel_err = nullptr);
SeriesEval series_add(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx);
SeriesEval series_sub(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx);
SeriesEval series_mul(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx);

/// zeta(s, a) = L[(k+a)^(1-s)] / (s-1). PoleError within 2^(-prec/2) of s = 1,
/// DomainError for a <= 0.
SeriesEval hurwitz_zeta(const Complex& s, const Real& a, const PrecisionCtx& ctx);
/// (s-1) zeta(s, a) = L[(k+a)^(1-s)], entire in s.
SeriesEval hurwitz_zeta_times_pole(const Complex& s, const Real& a, const PrecisionCtx& ctx);
SeriesEval riemann_zeta(const Complex& s, const PrecisionCtx& ctx);
/// zeta'(s) from (s-1) zeta'(s) + zeta(s) = -L[log(1+k) (1+k)^(1-s)].
SeriesEval zeta_derivative(const Complex& s, const PrecisionCtx& ctx);
/// zeta'(-2n) = L[(1+k)^(2n+1) log(1+k)] / (2n+1), n >= 1.
SeriesEval zeta_prime_neg_even(unsigned n, const PrecisionCtx& ctx);
/// psi(a) = L[log(k+a)], a > 0.
SeriesEval digamma(const Real& a, const PrecisionCtx& ctx);
/// gamma_p(u) = -L[log^(p+1)(u+k)] / (p+1); u > 0. Orders above
/// kStieltjesDefaultMaxOrder need guard_bits >= stieltjes_guard_bits(p).
inline constexpr unsigned kStieltjesDefaultMaxOrder = 20;
Bits stieltjes_guard_bits(unsigned p, const PrecisionCtx& ctx);
SeriesEval stieltjes(unsigned p, const Real& u, const PrecisionCtx& ctx);

}  // namespace contbern

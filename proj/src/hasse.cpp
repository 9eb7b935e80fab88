#include "contbern/hasse.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

namespace contbern {

namespace {

constexpr Bits kMagnitudeBits = 64;

Real magnitude(const Complex& z) { return abs(z.with_bits(std::max<Bits>(z.bits(), kMagnitudeBits))).with_bits(kMagnitudeBits); }

Real rounding_term(const Real& mag, const PrecisionCtx& ctx) {
  return ldexp(mag, 4 - static_cast<long>(ctx.prec_bits));
}

void require_positive(const Real& a, const char* what) {
  if (!(a.sign() > 0)) throw DomainError(std::string(what) + ": shift parameter must be positive");
}

void require_off_pole(const Complex& s, const PrecisionCtx& ctx, const char* what) {
  Complex d = s.with_bits(ctx.working_bits()) - 1L;
  Real radius = ldexp(Real(1L, kMagnitudeBits), -static_cast<long>(ctx.prec_bits / 2));
  if (magnitude(d) < radius) throw PoleError(std::string(what) + ": pole at s = 1");
}

}  // namespace

Complex TermKernel::derivative(const Real&, Bits) const {
  throw std::logic_error("TermKernel: derivative not available");
}

PowerLogKernel::PowerLogKernel(Real offset, Complex exponent, unsigned log_power)
    : offset_(std::move(offset)), exponent_(std::move(exponent)), log_power_(log_power) {
  require_positive(offset_, "PowerLogKernel");
}

Complex PowerLogKernel::value(const Real& x, Bits bits) const {
  Real y = x.with_bits(bits) + offset_.with_bits(bits);
  Complex r = exponent_.re.is_zero() && exponent_.im.is_zero() ? Complex(Real(1L, bits))
                                                               : kernel::pow(y, exponent_.with_bits(bits), bits);
  if (log_power_ > 0) r = r * pow(log(y), static_cast<long>(log_power_));
  return r;
}

Complex PowerLogKernel::derivative(const Real& x, Bits bits) const {
  // d/dx y^e L^q = y^(e-1) (e L^q + q L^(q-1)), y = x + offset, L = log y
  Real y = x.with_bits(bits) + offset_.with_bits(bits);
  Complex e = exponent_.with_bits(bits);
  Complex head = kernel::pow(y, e - 1L, bits);
  if (log_power_ == 0) return head * e;
  Real l = log(y);
  Real lq1 = pow(l, static_cast<long>(log_power_) - 1);
  Complex bracket = e * (lq1 * l) + Complex(lq1 * static_cast<long>(log_power_));
  return head * bracket;
}

Complex IndexedKernel::value(const Real& x, Bits bits) const {
  if (!x.is_integer() || x.sign() < 0) throw std::logic_error("IndexedKernel: non-integer sample point");
  return fn_(mpfr_get_ui(x.get(), MPFR_RNDN), bits);
}

int effective_shift(const TermKernel& kernel, const PrecisionCtx& ctx) {
  if (!kernel.has_derivative()) return 0;
  if (ctx.kernel_shift != PrecisionCtx::kAutoShift) return ctx.kernel_shift;
  // Shifted terms shrink like C(N+m, m)^-1; balancing N against m reaches
  // 2^-b after about b/2 terms each.
  const double tol_bits = -std::log2(std::max(ctx.rel_tol.to_double(), 1e-300));
  return static_cast<int>(std::ceil(std::max(tol_bits, 8.0) / 2.0)) + 8;
}

Real convergence_bound(const Real& mag, const PrecisionCtx& ctx) {
  Real tol = ctx.rel_tol.with_bits(kMagnitudeBits);
  return mag < tol ? tol : tol * mag.with_bits(kMagnitudeBits);
}

SeriesEval hasse_sum(const TermKernel& f, const PrecisionCtx& ctx) {
  ctx.validate();
  const Bits w = ctx.working_bits();
  const int shift = effective_shift(f, ctx);

  Complex correction(w);
  Real correction_mag(kMagnitudeBits);
  for (int j = 0; j < shift; ++j) {
    Complex d = f.derivative(Real(static_cast<long>(j), w), w);
    correction_mag += magnitude(d);
    correction += d;
  }

  std::vector<Complex> diag;  // diag[j] = Delta^j f(shift + m - j)
  diag.reserve(ctx.max_outer_terms);
  Complex partial(w);
  Real max_f(kMagnitudeBits);
  std::deque<Real> recent;
  std::size_t below = 0;
  std::size_t used = 0;
  bool stagnated = false;

  for (std::size_t m = 0; m < ctx.max_outer_terms; ++m) {
    Complex fm = f.value(Real(static_cast<unsigned long>(m) + static_cast<unsigned long>(shift), w), w);
    max_f = max(max_f, magnitude(fm));
    // new[j+1] = new[j] - old[j]
    Complex cur = std::move(fm);
    for (std::size_t j = 0; j < m; ++j) {
      Complex next = cur - diag[j];
      diag[j] = std::move(cur);
      cur = std::move(next);
    }
    Complex term = cur / static_cast<long>(m + 1);
    if (m % 2 == 1) term = -term;
    diag.push_back(std::move(cur));
    partial += term;
    used = m + 1;

    Real term_mag = magnitude(term);
    recent.push_back(term_mag);
    if (recent.size() > ctx.stagnation_window) recent.pop_front();
    Real estimate_mag = magnitude(partial - correction);
    if (term_mag <= ldexp(convergence_bound(estimate_mag, ctx), -3)) {
      if (++below >= ctx.stagnation_window) {
        stagnated = true;
        break;
      }
    } else {
      below = 0;
    }
  }

  SeriesEval out;
  Complex value = partial - correction;
  out.value = value.with_bits(ctx.prec_bits);
  Real window_max(kMagnitudeBits);
  for (const Real& t : recent) window_max = max(window_max, t);
  // Truncation (window estimate x 4) plus rounding in the difference table,
  // which loses up to `used` bits to cancellation.
  Real err = window_max * 4L;
  err += ldexp(max_f * static_cast<long>(used + 1), static_cast<long>(used) - static_cast<long>(w));
  err += ldexp(correction_mag * 2L, -static_cast<long>(w));
  err += ldexp(magnitude(value), 1 - static_cast<long>(ctx.prec_bits));
  out.abs_err = err;
  out.outer_terms_used = used;
  out.converged = stagnated && err <= convergence_bound(magnitude(value), ctx);
  return out;
}

SeriesEval series_constant(const Complex& v, const PrecisionCtx& ctx) {
  SeriesEval out;
  out.value = v.with_bits(ctx.prec_bits);
  out.abs_err = rounding_term(magnitude(v), ctx);
  out.converged = true;
  return out;
}

SeriesEval series_scale(const SeriesEval& a, const Complex& factor, const PrecisionCtx& ctx, const Real* factor_rel_err) {
  const Bits w = ctx.working_bits();
  SeriesEval out;
  Complex v = a.value.with_bits(w) * factor.with_bits(w);
  Real fm = magnitude(factor);
  Real err = a.abs_err * fm;
  if (factor_rel_err != nullptr) err += *factor_rel_err * magnitude(v) + a.abs_err * fm * *factor_rel_err;
  err += rounding_term(magnitude(v), ctx);
  out.value = v.with_bits(ctx.prec_bits);
  out.abs_err = err;
  out.outer_terms_used = a.outer_terms_used;
  out.converged = a.converged;
  return out;
}

SeriesEval series_add(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  Complex v = a.value.with_bits(w) + b.value.with_bits(w);
  SeriesEval out;
  out.value = v.with_bits(ctx.prec_bits);
  out.abs_err = a.abs_err + b.abs_err + rounding_term(magnitude(v), ctx);
  out.outer_terms_used = std::max(a.outer_terms_used, b.outer_terms_used);
  out.converged = a.converged && b.converged;
  return out;
}

SeriesEval series_sub(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx) {
  SeriesEval nb = b;
  nb.value = -b.value;
  return series_add(a, nb, ctx);
}

SeriesEval series_mul(const SeriesEval& a, const SeriesEval& b, const PrecisionCtx& ctx) {
  const Bits w = ctx.working_bits();
  Complex v = a.value.with_bits(w) * b.value.with_bits(w);
  SeriesEval out;
  out.value = v.with_bits(ctx.prec_bits);
  out.abs_err = magnitude(a.value) * b.abs_err + magnitude(b.value) * a.abs_err + a.abs_err * b.abs_err +
                rounding_term(magnitude(v), ctx);
  out.outer_terms_used = std::max(a.outer_terms_used, b.outer_terms_used);
  out.converged = a.converged && b.converged;
  return out;
}

SeriesEval hurwitz_zeta_times_pole(const Complex& s, const Real& a, const PrecisionCtx& ctx) {
  require_positive(a, "hurwitz_zeta");
  const Bits w = ctx.working_bits();
  PowerLogKernel kernel(a.with_bits(w), 1L - s.with_bits(w), 0);
  return hasse_sum(kernel, ctx);
}

SeriesEval hurwitz_zeta(const Complex& s, const Real& a, const PrecisionCtx& ctx) {
  require_positive(a, "hurwitz_zeta");
  require_off_pole(s, ctx, "hurwitz_zeta");
  const Bits w = ctx.working_bits();
  SeriesEval h = hurwitz_zeta_times_pole(s, a, ctx);
  Complex inv = Complex(Real(1L, w)) / (s.with_bits(w) - 1L);
  return series_scale(h, inv, ctx);
}

SeriesEval riemann_zeta(const Complex& s, const PrecisionCtx& ctx) {
  return hurwitz_zeta(s, Real(1L, ctx.working_bits()), ctx);
}

SeriesEval zeta_derivative(const Complex& s, const PrecisionCtx& ctx) {
  require_off_pole(s, ctx, "zeta_derivative");
  const Bits w = ctx.working_bits();
  SeriesEval z = riemann_zeta(s, ctx);
  PowerLogKernel kernel(Real(1L, w), 1L - s.with_bits(w), 1);
  SeriesEval g = hasse_sum(kernel, ctx);
  // zeta'(s) = -(g + zeta(s)) / (s - 1)
  SeriesEval num = series_add(g, z, ctx);
  Complex factor = Complex(Real(-1L, w)) / (s.with_bits(w) - 1L);
  return series_scale(num, factor, ctx);
}

SeriesEval zeta_prime_neg_even(unsigned n, const PrecisionCtx& ctx) {
  if (n == 0) throw DomainError("zeta_prime_neg_even: n must be >= 1");
  const Bits w = ctx.working_bits();
  const long order = 2L * n + 1;
  PowerLogKernel kernel(Real(1L, w), Complex(Real(order, w)), 1);
  SeriesEval g = hasse_sum(kernel, ctx);
  return series_scale(g, Complex(Real(1L, w) / order), ctx);
}

SeriesEval digamma(const Real& a, const PrecisionCtx& ctx) {
  if (!(a.sign() > 0)) throw DomainError("digamma: argument must be positive");
  const Bits w = ctx.working_bits();
  PowerLogKernel kernel(a.with_bits(w), Complex(Real(w)), 1);
  return hasse_sum(kernel, ctx);
}

Bits stieltjes_guard_bits(unsigned p, const PrecisionCtx& ctx) {
  // Each extra log power costs roughly log2(log(N + M)) ~ 3 bits in the
  // inner sums; budget 16 per order beyond the default cap.
  const Bits base = static_cast<Bits>(ctx.max_outer_terms) + 32;
  return p <= kStieltjesDefaultMaxOrder ? base : base + 16 * static_cast<Bits>(p);
}

SeriesEval stieltjes(unsigned p, const Real& u, const PrecisionCtx& ctx) {
  if (!(u.sign() > 0)) throw DomainError("stieltjes: argument must be positive");
  if (ctx.guard_bits < stieltjes_guard_bits(p, ctx)) {
    throw DomainError("stieltjes: order above the default cap needs a context with more guard bits");
  }
  const Bits w = ctx.working_bits();
  PowerLogKernel kernel(u.with_bits(w), Complex(Real(w)), p + 1);
  SeriesEval g = hasse_sum(kernel, ctx);
  return series_scale(g, Complex(Real(-1L, w) / static_cast<long>(p + 1)), ctx);
}

}  // namespace contbern

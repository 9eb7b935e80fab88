#pragma once

// The continuous Bernoulli function
//
//   beta(s) = 2 Gamma(s+1) zeta(s) (2 pi)^-s cos(pi s / 2) cos(pi (1 - s)),
//
// its series form -cos(pi (1 - s)) B_s(1), the reflection form
// beta(1 - s) = (1 - s) zeta(s) cos(pi s), derivatives, and the odd-zeta
// formulas that fall out of them.

#include "contbern/hasse.hpp"
#include "contbern/numkernel.hpp"

namespace contbern {

/// Closed form. Near s = 1 the zeta pole and the cos(pi s / 2) zero are
/// paired analytically; near odd m >= 3 it defers to beta_series and near
/// negative integers to the reflection form. beta is entire, so this never
/// throws for finite s.
SeriesEval beta_closed(const Complex& s, const PrecisionCtx& ctx);

/// B_s(1) = L[(1+k)^s].
SeriesEval b_s_of_one(const Complex& s, const PrecisionCtx& ctx);

/// -cos(pi (1 - s)) B_s(1).
SeriesEval beta_series(const Complex& s, const PrecisionCtx& ctx);

/// beta(1 - s) = (1 - s) zeta(s) cos(pi s). PoleError at s = 1.
SeriesEval beta_reflection(const Complex& s, const PrecisionCtx& ctx);

/// beta(-2n) = 2n zeta(2n+1), n >= 1.
SeriesEval beta_negative_even(unsigned n, const PrecisionCtx& ctx);
/// beta(1-2n) = (1-2n) zeta(2n), n >= 1.
SeriesEval beta_negative_odd(unsigned n, const PrecisionCtx& ctx);

/// beta'(s) for real s from the logarithmic derivative
///   beta'/beta = psi(s+1) + zeta'/zeta - log 2pi - (pi/2) tan(pi s/2) + pi tan(pi(1-s)),
/// multiplied through by beta so zeros of beta and poles of tan cancel.
/// SingularityError within 2^(-prec/4) of s = 1 or of an integer <= -1;
/// DomainError for non-real s.
SeriesEval beta_prime(const Complex& s, const PrecisionCtx& ctx);

/// beta'(2n+1) = (-1)^(n+1) pi Gamma(2n+2) zeta(2n+1) (2 pi)^(-2n-1), n >= 1.
SeriesEval beta_prime_odd(unsigned n, const PrecisionCtx& ctx);

/// zeta(2n+1) = (-1)^n 2 (2pi)^(2n) / (2n+1)! * L[(1+k)^(2n+1) log(1+k)].
SeriesEval zeta_odd_hasse(unsigned n, const PrecisionCtx& ctx);
/// zeta(2n+1) = (-1)^n 2 (2pi)^(2n) / (2n)! * zeta'(-2n).
SeriesEval zeta_odd_functional(unsigned n, const PrecisionCtx& ctx);

/// Samples zeta(1+h) cos(pi (1+h)/2) at h = 1e-4, 1e-5, 1e-6 and
/// extrapolates to h = 0 (expected -pi/2). abs_err is the change between
/// the last two extrapolation levels plus propagated series error.
SeriesEval limit_zeta_cos_at_one(const PrecisionCtx& ctx);

/// zeta(1-s) - 2 (2 pi)^-s Gamma(s) cos(pi s/2) zeta(s). DomainError near
/// s = 0 and s = 1.
SeriesEval functional_equation_check(const Complex& s, const PrecisionCtx& ctx);

}  // namespace contbern

#pragma once

// Uniform grids of beta, beta' or zeta values for plotting.

#include "contbern/hasse.hpp"
#include "contbern/numkernel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contbern::sample {

enum class Function { beta, beta_prime, zeta };

/// "beta", "beta-prime", "zeta".
std::optional<Function> parse_function(std::string_view name);

/// One function value; beta' uses the closed odd-integer formula at odd
/// integers >= 3 and the logarithmic derivative elsewhere.
SeriesEval evaluate(Function fn, const Complex& s, const PrecisionCtx& ctx);

struct Row {
  Real s;
  /// Empty when s lies in an excluded neighbourhood of a singularity.
  std::optional<SeriesEval> result;
};

inline constexpr long kMaxSteps = 1000000;

/// s_i = from + i step for s_i <= to. Throws std::invalid_argument unless
/// from <= to, step > 0 and (to - from) / step <= kMaxSteps.
std::vector<Row> grid(Function fn, const Real& from, const Real& to, const Real& step, const PrecisionCtx& ctx);

/// Header "s,re,im,abs_err,converged"; excluded rows carry nan and false.
std::string to_csv(const std::vector<Row>& rows);

}  // namespace contbern::sample

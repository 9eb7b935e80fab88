#include "contbern/sample.hpp"

#include "contbern/betafn.hpp"
#include "contbern/format.hpp"
#include "parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace contbern::sample {

std::optional<Function> parse_function(std::string_view name) {
  if (name == "beta") return Function::beta;
  if (name == "beta-prime") return Function::beta_prime;
  if (name == "zeta") return Function::zeta;
  return std::nullopt;
}

SeriesEval evaluate(Function fn, const Complex& s, const PrecisionCtx& ctx) {
  switch (fn) {
    case Function::beta:
      return beta_closed(s, ctx);
    case Function::zeta:
      return riemann_zeta(s, ctx);
    case Function::beta_prime:
      if (s.is_real() && s.re.is_integer() && s.re >= 3L) {
        Real half = (s.re - 1L) / 2L;
        if (half.is_integer()) return beta_prime_odd(static_cast<unsigned>(mpfr_get_ui(half.get(), MPFR_RNDN)), ctx);
      }
      return beta_prime(s, ctx);
  }
  throw std::logic_error("sample::evaluate: unknown function");
}

std::vector<Row> grid(Function fn, const Real& from, const Real& to, const Real& step, const PrecisionCtx& ctx) {
  if (!(step > 0L)) throw std::invalid_argument("sample: step must be positive");
  if (to < from) throw std::invalid_argument("sample: need from <= to");
  const Bits w = ctx.working_bits();
  Real span = (to.with_bits(w) - from.with_bits(w)) / step.with_bits(w);
  if (span > kMaxSteps) throw std::invalid_argument("sample: more than 1e6 steps");
  // Absorb decimal-step rounding so that "0 1 0.1" reaches 1.
  Real count = span + ldexp(Real(1L, w), -static_cast<long>(ctx.prec_bits / 2));
  mpfr_floor(count.get(), count.get());
  const std::size_t n = mpfr_get_ui(count.get(), MPFR_RNDN) + 1;

  return detail::parallel_map<Row>(n, [&](std::size_t i) {
    Real s = from.with_bits(w) + step.with_bits(w) * static_cast<long>(i);
    Row row{s.with_bits(ctx.prec_bits), std::nullopt};
    try {
      row.result = evaluate(fn, Complex(row.s), ctx);
    } catch (const NumericError&) {
      row.result.reset();
    }
    return row;
  });
}

std::string to_csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << "s,re,im,abs_err,converged\r\n";
  for (const Row& row : rows) {
    out << format::csv_field(format::decimal(row.s)) << ',';
    if (row.result) {
      out << format::csv_field(format::decimal(row.result->value.re)) << ','
          << format::csv_field(format::decimal(row.result->value.im)) << ','
          << format::csv_field(format::error_bound(row.result->abs_err)) << ','
          << (row.result->converged ? "true" : "false");
    } else {
      out << "nan,nan,nan,false";
    }
    out << "\r\n";
  }
  return out.str();
}

}  // namespace contbern::sample

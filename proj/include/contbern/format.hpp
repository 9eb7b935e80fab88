#pragma once

// Decimal rendering of arbitrary-precision values and the SeriesEval
// document schema shared by every output format.

#include "contbern/hasse.hpp"
#include "contbern/numkernel.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace contbern::format {

/// ceil(bits log10 2) - 5, at least 1.
std::size_t significant_digits(Bits bits);

/// Shortest rendering of x rounded to `digits` significant digits: fixed
/// notation for decimal exponents in [-6, 21), scientific otherwise; "nan",
/// "inf", "-inf" and "0" for the special values.
std::string decimal(const Real& x, std::size_t digits);
/// decimal(x, significant_digits(x.bits())).
std::string decimal(const Real& x);
/// Error magnitudes: 6 significant digits, rounded away from zero.
std::string error_bound(const Real& e);

/// "re", or "re+imi" / "re-imi".
std::string complex_text(const Complex& z);

/// {"value": {"re", "im"}, "abs_err", "terms", "converged"}.
nlohmann::json series_json(const SeriesEval& r);

/// RFC 4180 field quoting (only when needed).
std::string csv_field(std::string_view field);

}  // namespace contbern::format

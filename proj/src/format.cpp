#include "contbern/format.hpp"

#include <cmath>
#include <memory>

namespace contbern::format {

std::size_t significant_digits(Bits bits) {
  const double d = std::ceil(static_cast<double>(bits) * std::log10(2.0)) - 5.0;
  return d < 1.0 ? 1 : static_cast<std::size_t>(d);
}

namespace {

std::string render(const Real& x, std::size_t digits, mpfr_rnd_t rnd) {
  if (x.is_nan()) return "nan";
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";

  mpfr_exp_t e10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &e10, 10, digits, x.get(), rnd),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  // value = 0.mant * 10^e10; leading digit has exponent e10 - 1.
  const long lead = static_cast<long>(e10) - 1;
  const long len = static_cast<long>(mant.size());
  std::string out = sign;
  if (lead >= -6 && lead < 21) {
    if (e10 <= 0) {
      out += "0." + std::string(static_cast<std::size_t>(-e10), '0') + mant;
    } else if (e10 >= len) {
      out += mant + std::string(static_cast<std::size_t>(e10 - len), '0');
    } else {
      out += mant.substr(0, static_cast<std::size_t>(e10)) + "." + mant.substr(static_cast<std::size_t>(e10));
    }
  } else {
    out += mant.substr(0, 1);
    if (len > 1) out += "." + mant.substr(1);
    out += lead < 0 ? "e-" : "e+";
    out += std::to_string(lead < 0 ? -lead : lead);
  }
  return out;
}

}  // namespace

std::string decimal(const Real& x, std::size_t digits) { return render(x, digits, MPFR_RNDN); }

std::string decimal(const Real& x) { return decimal(x, significant_digits(x.bits())); }

std::string error_bound(const Real& e) { return render(abs(e), 6, MPFR_RNDU); }

std::string complex_text(const Complex& z) {
  std::string re = decimal(z.re);
  if (z.im.is_zero()) return re;
  std::string im = decimal(z.im);
  if (im.front() != '-') im = "+" + im;
  return re + im + "i";
}

nlohmann::json series_json(const SeriesEval& r) {
  return {
      {"value", {{"re", decimal(r.value.re)}, {"im", decimal(r.value.im)}}},
      {"abs_err", error_bound(r.abs_err)},
      {"terms", r.outer_terms_used},
      {"converged", r.converged},
  };
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace contbern::format

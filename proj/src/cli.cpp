#include "contbern/cli.hpp"

#include "contbern/betafn.hpp"
#include "contbern/exact.hpp"
#include "contbern/format.hpp"
#include "contbern/hasse.hpp"
#include "contbern/sample.hpp"
#include "contbern/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace contbern::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

/// A precondition the library would reject; reported as a usage error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  Bits prec = kDefaultBits;
  std::string tol = "1e-30";
  std::size_t max_terms = 400;
  std::string format = "text";
  std::string shift = "auto";
};

PrecisionCtx make_ctx(const Options& o) {
  PrecisionCtx ctx;
  try {
    ctx = PrecisionCtx::make(o.prec, o.tol, o.max_terms);
    if (o.shift != "auto") {
      int n = 0;
      auto [end, ec] = std::from_chars(o.shift.data(), o.shift.data() + o.shift.size(), n);
      if (ec != std::errc() || end != o.shift.data() + o.shift.size() || n < 0) {
        throw std::invalid_argument("--shift must be 'auto' or a nonnegative integer");
      }
      ctx.kernel_shift = n;
    }
    ctx.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return ctx;
}

/// Drops the leading space run() puts in front of negative numbers.
std::string unmark(const std::string& text) { return text.starts_with(" -") ? text.substr(1) : text; }

unsigned parse_index(const std::string& raw, const char* what) {
  const std::string text = unmark(raw);
  unsigned v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return v;
}

Real parse_real(const std::string& raw, Bits bits, const char* what) {
  const std::string text = unmark(raw);
  try {
    Real r = Real::parse(text, bits);
    if (!r.is_finite()) throw std::invalid_argument("not finite");
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a finite decimal, got '" + text + "'");
  }
}

/// "re" or "re,im".
Complex parse_complex(const std::string& text, Bits bits, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return Complex(parse_real(text, bits, what));
  return {parse_real(text.substr(0, comma), bits, what), parse_real(text.substr(comma + 1), bits, what)};
}

Real require_real(const Complex& z, const char* what) {
  if (!z.is_real()) throw UsageError(std::string(what) + " must be real");
  return z.re;
}

// ---------------------------------------------------------------- output ---

struct Emitter {
  Format format;
  std::string query;
  std::ostream& out;

  void rational(const std::string& value) const {
    switch (format) {
      case Format::text: out << value << '\n'; break;
      case Format::json: out << json{{"query", query}, {"result", value}}.dump() << '\n'; break;
      case Format::csv: out << "value\r\n" << format::csv_field(value) << "\r\n"; break;
    }
  }

  void list(const std::vector<std::string>& values) const {
    switch (format) {
      case Format::text: {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
        out << '\n';
        break;
      }
      case Format::json: out << json{{"query", query}, {"result", values}}.dump() << '\n'; break;
      case Format::csv:
        out << "power,coefficient\r\n";
        for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << format::csv_field(values[i]) << "\r\n";
        break;
    }
  }

  void series(const SeriesEval& r) const {
    switch (format) {
      case Format::text:
        out << format::complex_text(r.value) << '\n'
            << "abs_err " << format::error_bound(r.abs_err) << "  terms " << r.outer_terms_used << "  converged "
            << (r.converged ? "true" : "false") << '\n';
        break;
      case Format::json: out << json{{"query", query}, {"result", format::series_json(r)}}.dump() << '\n'; break;
      case Format::csv:
        out << "re,im,abs_err,terms,converged\r\n"
            << format::csv_field(format::decimal(r.value.re)) << ',' << format::csv_field(format::decimal(r.value.im))
            << ',' << format::csv_field(format::error_bound(r.abs_err)) << ',' << r.outer_terms_used << ','
            << (r.converged ? "true" : "false") << "\r\n";
        break;
    }
  }

  void rows(const std::vector<sample::Row>& rows) const {
    if (format != Format::json) {
      out << sample::to_csv(rows);
      return;
    }
    json arr = json::array();
    for (const auto& row : rows) {
      json r = row.result ? format::series_json(*row.result)
                          : json{{"value", {{"re", "nan"}, {"im", "nan"}}}, {"abs_err", "nan"}, {"terms", 0},
                                 {"converged", false}};
      r["s"] = format::decimal(row.s);
      arr.push_back(std::move(r));
    }
    out << json{{"query", query}, {"result", arr}}.dump() << '\n';
  }

  void report(const verify::VerifyReport& rep) const {
    auto passed = static_cast<std::size_t>(
        std::count_if(rep.checks.begin(), rep.checks.end(), [](const verify::Check& c) { return c.pass; }));
    switch (format) {
      case Format::text: {
        for (const auto& c : rep.checks) {
          out << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.tag << "]  residual "
              << format::error_bound(c.residual) << "  tol " << format::error_bound(c.tolerance) << '\n';
        }
        for (const auto& t : rep.missing_tags) out << "MISSING " << t << '\n';
        out << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size() << " checks passed, "
            << rep.missing_tags.size() << " manifest tags uncovered: " << (rep.pass ? "PASS" : "FAIL") << '\n';
        break;
      }
      case Format::json: {
        json checks = json::array();
        for (const auto& c : rep.checks) {
          checks.push_back({{"id", c.id}, {"tag", c.tag}, {"status", c.pass ? "pass" : "fail"},
                            {"residual", format::error_bound(c.residual)},
                            {"tolerance", format::error_bound(c.tolerance)}});
        }
        json manifest = json::array();
        for (const auto& t : verify::tag_manifest()) {
          if (rep.suite == "all" || t.suite == rep.suite) manifest.push_back(std::string(t.tag));
        }
        out << json{{"query", query},
                    {"result",
                     {{"suite", rep.suite},
                      {"checks", checks},
                      {"manifest", manifest},
                      {"missing_tags", rep.missing_tags},
                      {"pass", rep.pass}}}}
                   .dump()
            << '\n';
        break;
      }
      case Format::csv:
        out << "id,tag,status,residual,tolerance\r\n";
        for (const auto& c : rep.checks) {
          out << format::csv_field(c.id) << ',' << format::csv_field(c.tag) << ',' << (c.pass ? "pass" : "fail") << ','
              << format::error_bound(c.residual) << ',' << format::error_bound(c.tolerance) << "\r\n";
        }
        break;
    }
  }
};

int series_exit(const SeriesEval& r) { return r.converged ? kExitOk : kExitNotConverged; }

std::string join(const std::vector<std::string>& args) {
  std::string q;
  for (const auto& a : args) q += (q.empty() ? "" : " ") + a;
  return q;
}

/// CLI11 reads "-2" as an option name; mark numeric tokens so they stay
/// positional.
bool looks_negative_number(const std::string& s) {
  if (s.size() < 2 || s[0] != '-') return false;
  const char c = s[1];
  return (c >= '0' && c <= '9') || c == '.';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernoulli numbers, the continuous Bernoulli function and Hasse-series zeta values", "contbern"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--prec", opt.prec, "output mantissa bits")->check(CLI::Range(16, 1 << 20))->capture_default_str();
  app.add_option("--tol", opt.tol, "relative truncation tolerance (decimal)")->capture_default_str();
  app.add_option("--max-terms", opt.max_terms, "outer-term cap")->check(CLI::Range(1, 100000))->capture_default_str();
  app.add_option("--format", opt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--shift", opt.shift, "Hasse kernel shift: auto or N (0 sums the plain series)")->capture_default_str();

  std::function<int(const PrecisionCtx&, const Emitter&)> action;
  auto sub = [&app](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // bn
  std::string n_text, k_text, s_text, a_text, route = "default", at_text, fn_text, from_text, to_text, step_text;
  std::string kind = "2", suite = "all";
  bool at_one = false, derivative = false;

  CLI::App* bn = sub("bn", "Bernoulli number B_n (B_1 = -1/2)");
  bn->add_option("n", n_text)->required();
  bn->add_option("--route", route, "recurrence, stirling or doublesum")
      ->check(CLI::IsMember({"default", "recurrence", "stirling", "doublesum"}));
  bn->add_flag("--one", at_one, "B_n(1) instead of B_n(0)");
  bn->callback([&] {
    action = [&](const PrecisionCtx&, const Emitter& e) {
      unsigned n = parse_index(n_text, "n");
      exact::BigRat b;
      if (at_one) {
        b = exact::bernoulli_at_one(n);
      } else if (route == "stirling") {
        b = exact::bernoulli_stirling(n);
      } else if (route == "doublesum") {
        b = exact::bernoulli_doublesum(n);
      } else {
        b = exact::bernoulli_recurrence(n);
      }
      e.rational(exact::to_string(b));
      return kExitOk;
    };
  });

  CLI::App* bpoly = sub("bpoly", "Bernoulli polynomial B_n(x): coefficients, or a value with --at");
  bpoly->add_option("n", n_text)->required();
  bpoly->add_option("--at", at_text, "rational or decimal x");
  bpoly->add_option("--route", route, "horner or doublesum")->check(CLI::IsMember({"default", "horner", "doublesum"}));
  bpoly->callback([&] {
    action = [&](const PrecisionCtx&, const Emitter& e) {
      unsigned n = parse_index(n_text, "n");
      if (at_text.empty()) {
        exact::BernoulliPoly p = exact::bernoulli_poly(n);
        std::vector<std::string> coeffs;
        for (const auto& c : p.coeffs) coeffs.push_back(exact::to_string(c));
        e.list(coeffs);
        return kExitOk;
      }
      exact::BigRat x;
      try {
        x = exact::parse_rational(unmark(at_text));
      } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("--at: ") + ex.what());
      }
      e.rational(exact::to_string(route == "doublesum" ? exact::bernoulli_poly_doublesum(n, x)
                                                       : exact::bernoulli_poly_eval(exact::bernoulli_poly(n), x)));
      return kExitOk;
    };
  });

  CLI::App* stirling = sub("stirling", "Stirling numbers S(n,k) (kind 2) or s(n,k) (kind 1, signed)");
  stirling->add_option("n", n_text)->required();
  stirling->add_option("k", k_text)->required();
  stirling->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({"1", "2"}));
  stirling->add_option("--route", route, "triangle or explicit (kind 2)")
      ->check(CLI::IsMember({"default", "triangle", "explicit"}));
  stirling->callback([&] {
    action = [&](const PrecisionCtx&, const Emitter& e) {
      unsigned n = parse_index(n_text, "n"), k = parse_index(k_text, "k");
      exact::BigInt v = kind == "1"            ? exact::stirling1_signed(n, k)
                        : route == "explicit" ? exact::stirling2_explicit(n, k)
                                              : exact::stirling2(n, k);
      e.rational(v.get_str());
      return kExitOk;
    };
  });

  CLI::App* zeta = sub("zeta", "Riemann zeta(s), or zeta'(s) with --derivative");
  zeta->add_option("s", s_text, "re or re,im")->required();
  zeta->add_flag("--derivative", derivative);
  zeta->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      Complex s = parse_complex(s_text, ctx.working_bits(), "s");
      SeriesEval r = derivative ? zeta_derivative(s, ctx) : riemann_zeta(s, ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* hzeta = sub("hzeta", "Hurwitz zeta(s, a), a > 0");
  hzeta->add_option("s", s_text, "re or re,im")->required();
  hzeta->add_option("a", a_text)->required();
  hzeta->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      Complex s = parse_complex(s_text, ctx.working_bits(), "s");
      SeriesEval r = hurwitz_zeta(s, parse_real(a_text, ctx.working_bits(), "a"), ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* dig = sub("digamma", "psi(a), a > 0");
  dig->add_option("a", a_text)->required();
  dig->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      SeriesEval r = digamma(parse_real(a_text, ctx.working_bits(), "a"), ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* stj = sub("stieltjes", "generalized Stieltjes constant gamma_p(u)");
  stj->add_option("p", n_text)->required();
  stj->add_option("u", a_text)->required();
  stj->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      SeriesEval r = stieltjes(parse_index(n_text, "p"), parse_real(a_text, ctx.working_bits(), "u"), ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* beta = sub("beta", "continuous Bernoulli function beta(s)");
  beta->add_option("s", s_text, "re or re,im")->required();
  beta->add_option("--route", route, "closed, series, reflection, or bs1 for the raw B_s(1)")
      ->check(CLI::IsMember({"default", "closed", "series", "reflection", "bs1"}));
  beta->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      Complex s = parse_complex(s_text, ctx.working_bits(), "s");
      SeriesEval r = route == "series"       ? beta_series(s, ctx)
                     : route == "reflection" ? beta_reflection(1L - s, ctx)
                     : route == "bs1"        ? b_s_of_one(s, ctx)
                                             : beta_closed(s, ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* bprime = sub("beta-prime", "beta'(s) for real s");
  bprime->add_option("s", s_text)->required();
  bprime->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      Real s = require_real(parse_complex(s_text, ctx.working_bits(), "s"), "s");
      SeriesEval r = sample::evaluate(sample::Function::beta_prime, Complex(s), ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* zodd = sub("zeta-odd", "zeta(2n+1) from the log-weighted series or from zeta'(-2n)");
  zodd->add_option("n", n_text)->required();
  zodd->add_option("--route", route, "hasse or functional")->check(CLI::IsMember({"default", "hasse", "functional"}));
  zodd->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      unsigned n = parse_index(n_text, "n");
      if (n == 0) throw UsageError("n must be >= 1");
      SeriesEval r = route == "functional" ? zeta_odd_functional(n, ctx) : zeta_odd_hasse(n, ctx);
      e.series(r);
      return series_exit(r);
    };
  });

  CLI::App* smp = sub("sample", "tabulate beta, beta-prime or zeta on from, from+step, ..., <= to");
  smp->add_option("fn", fn_text)->required()->check(CLI::IsMember({"beta", "beta-prime", "zeta"}));
  smp->add_option("from", from_text)->required();
  smp->add_option("to", to_text)->required();
  smp->add_option("step", step_text)->required();
  smp->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      const Bits w = ctx.working_bits();
      std::vector<sample::Row> rows;
      try {
        rows = sample::grid(*sample::parse_function(fn_text), parse_real(from_text, w, "from"),
                            parse_real(to_text, w, "to"), parse_real(step_text, w, "step"), ctx);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      e.rows(rows);
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [](const sample::Row& r) { return !r.result || r.result->converged; });
      return ok ? kExitOk : kExitNotConverged;
    };
  });

  CLI::App* ver = sub("verify", "run the identity suite");
  ver->add_option("--suite", suite, "exact, hasse, beta or all")->check(CLI::IsMember({"exact", "hasse", "beta", "all"}));
  ver->callback([&] {
    action = [&](const PrecisionCtx& ctx, const Emitter& e) {
      verify::VerifyReport rep = verify::run(suite, ctx, ctx.rel_tol);
      e.report(rep);
      return rep.pass ? kExitOk : kExitVerifyFailed;
    };
  });

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(looks_negative_number(a) ? " " + a : a);
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    PrecisionCtx ctx = make_ctx(opt);
    Format fmt = opt.format == "json" ? Format::json : opt.format == "csv" ? Format::csv : Format::text;
    Emitter emitter{fmt, join(args), out};
    return action(ctx, emitter);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  }
}

}  // namespace contbern::cli

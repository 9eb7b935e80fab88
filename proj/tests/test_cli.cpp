#include "contbern/betafn.hpp"
#include "contbern/cli.hpp"
#include "contbern/exact.hpp"
#include "contbern/format.hpp"
#include "contbern/sample.hpp"
#include "contbern/verify.hpp"

#include "expected_tags.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace contbern;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    v.push_back(line);
  }
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

Real parse(const std::string& t) { return Real::parse(t, 512); }

// half a unit in the last of `digits` significant digits of x
Real half_unit(const std::string& text, const Real& x) {
  std::size_t digits = 0;
  bool leading = true;
  for (char c : text) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (c != '0') leading = false;
    if (!leading) ++digits;
  }
  if (x.is_zero() || digits == 0) return Real(512);
  Real mag = abs(x);
  long e10 = static_cast<long>(std::floor(std::log10(std::abs(mag.to_double()))));
  return pow(Real(10L, 512), e10 + 1 - static_cast<long>(digits)) / 2L;
}

}  // namespace

TEST_CASE("value queries") {
  Outcome bn = run({"bn", "12"});
  CHECK(bn.code == cli::kExitOk);
  CHECK(bn.out == "-691/2730\n");
  CHECK(run({"bn", "1"}).out == "-1/2\n");
  CHECK(run({"bn", "1", "--one"}).out == "1/2\n");
  CHECK(run({"bn", "12", "--route", "stirling"}).out == "-691/2730\n");
  CHECK(run({"bn", "0"}).out == "1/1\n");
  CHECK(run({"stirling", "4", "2"}).out == "7\n");
  CHECK(run({"stirling", "4", "2", "--kind", "1"}).out == "11\n");
  CHECK(run({"bpoly", "3", "--at", "1/2"}).out == "0/1\n");
}

TEST_CASE("beta at one half as JSON") {
  Outcome r = run({"beta", "0.5", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  json doc = json::parse(r.out);
  CHECK(doc["query"] == "beta 0.5 --format json");
  const json& res = doc["result"];
  CHECK(res["converged"] == true);
  CHECK(abs(parse(res["value"]["re"])) <= parse(res["abs_err"]));
  CHECK(res.contains("terms"));
}

TEST_CASE("negative numbers are positionals, not flags") {
  Outcome z = run({"zeta", "-1"});
  REQUIRE(z.code == cli::kExitOk);
  CHECK(abs(parse(lines(z.out)[0]) + Real(1L, 512) / 12L) < parse("1e-70"));
  Outcome h = run({"hzeta", "-1,0", "0.5", "--format", "json"});
  REQUIRE(h.code == cli::kExitOk);
  CHECK(abs(parse(json::parse(h.out)["result"]["value"]["re"]) - Real(1L, 512) / 24L) < parse("1e-70"));
  CHECK(run({"bpoly", "2", "--at", "-3"}).out == "73/6\n");
}

TEST_CASE("verify succeeds at the default precision") {
  Outcome r = run({"verify", "--suite", "all"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify"}).code == cli::kExitOk);
}

TEST_CASE("failing verification exits 1") {
  // twenty outer terms cannot reach 1e-30
  CHECK(run({"verify", "--suite", "hasse", "--max-terms", "20"}).code == cli::kExitVerifyFailed);
}

TEST_CASE("usage errors exit 2 with help on the error stream") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"zeta"},
           {"zeta", "1.5x"},
           {"zeta", "2", "--format", "xml"},
           {"zeta", "2", "--prec", "8"},
           {"bn", "-3"},
           {"sample", "beta", "2", "1", "1"},
           {"sample", "beta", "0", "1", "0"},
           {"sample", "beta", "0", "1e7", "1"},
           {"sample", "gamma", "0", "1", "1"},
           {"verify", "--suite", "nope"},
           {"zeta", "1"},
       }) {
    CAPTURE(args.size() ? args[0] : std::string("<none>"));
    Outcome r = run(args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(r.out.empty());
  }
}

TEST_CASE("non-convergence exits 3 and still reports the partial sum") {
  Outcome r = run({"zeta", "2", "--max-terms", "3"});
  CHECK(r.code == cli::kExitNotConverged);
  CHECK(r.out.find("converged false") != std::string::npos);
  Outcome j = run({"zeta", "2", "--max-terms", "3", "--format", "json"});
  CHECK(j.code == cli::kExitNotConverged);
  CHECK(json::parse(j.out)["result"]["converged"] == false);
}

TEST_CASE("sampling beta on integers reproduces the interpolation table") {
  Outcome r = run({"sample", "beta", "0", "6", "1"});
  REQUIRE(r.code == cli::kExitOk);
  std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "s,re,im,abs_err,converged");
  const std::vector<exact::BigRat> expected{1, exact::BigRat(-1, 2), exact::BigRat(1, 6), 0, exact::BigRat(-1, 30), 0,
                                            exact::BigRat(1, 42)};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    std::vector<std::string> f = fields(rows[i + 1]);
    REQUIRE(f.size() == 5);
    CHECK(f[0] == std::to_string(i));
    CHECK(abs(parse(f[1]) - Real(expected[i], 512)) <= parse(f[3]) + parse("1e-70"));
    CHECK(f[4] == "true");
  }
  CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("single-point and zeta grids") {
  Outcome one = run({"sample", "beta", "0.5", "0.5", "1"});
  REQUIRE(one.code == cli::kExitOk);
  std::vector<std::string> rows = lines(one.out);
  REQUIRE(rows.size() == 2);
  std::vector<std::string> f = fields(rows[1]);
  CHECK(abs(parse(f[1])) <= parse(f[3]));
  Outcome z = run({"sample", "zeta", "2", "4", "1"});
  rows = lines(z.out);
  REQUIRE(rows.size() == 4);
  for (long s = 2; s <= 4; ++s) {
    f = fields(rows[s - 1]);
    CHECK(abs(parse(f[1]) - oracle::zeta_direct(s, 512)) <= parse(f[3]) + parse("1e-70"));
  }
}

TEST_CASE("excluded grid points emit nan rather than aborting") {
  Outcome r = run({"sample", "beta-prime", "0", "2", "0.5"});
  CHECK(r.code == cli::kExitOk);
  std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[3] == "1,nan,nan,nan,false");
}

TEST_CASE("JSON numerics round trip to the emitted digits") {
  PrecisionCtx ctx;
  struct Case {
    std::vector<std::string> args;
    SeriesEval direct;
  };
  const Bits w = 512;
  std::vector<Case> cases{
      {{"zeta", "3", "--format", "json"}, riemann_zeta(Complex(Real(3L, w)), ctx)},
      {{"beta", "2.7", "--format", "json"}, beta_closed(Complex(Real::parse("2.7", w)), ctx)},
      {{"zeta", "0.5,14", "--format", "json"}, riemann_zeta(Complex(Real::parse("0.5", w), Real(14L, w)), ctx)},
      {{"digamma", "0.001", "--format", "json"}, digamma(Real::parse("0.001", w), ctx)},
  };
  for (const Case& c : cases) {
    CAPTURE(c.args[0]);
    Outcome r = run(c.args);
    REQUIRE(r.code == cli::kExitOk);
    const json v = json::parse(r.out)["result"]["value"];
    for (const auto& [text, exact] : {std::pair{v["re"].get<std::string>(), c.direct.value.re},
                                      std::pair{v["im"].get<std::string>(), c.direct.value.im}}) {
      CAPTURE(text);
      Real back = parse(text);
      CHECK(abs(back - exact.with_bits(512)) <= half_unit(text, exact.with_bits(512)));
      CHECK(format::decimal(back.with_bits(256)) == text);
    }
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"sample", "zeta", "-3", "3", "0.25", "--format", "csv"},
           {"verify", "--suite", "hasse", "--format", "json"},
           {"beta", "3,0.5", "--format", "json"},
       }) {
    Outcome a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("manifest names every in-scope identity") {
  const std::vector<std::string>& expected = expected_tags();
  std::set<std::string> manifest;
  for (const verify::TagEntry& t : verify::tag_manifest()) CHECK(manifest.insert(std::string(t.tag)).second);
  CHECK(manifest == std::set<std::string>(expected.begin(), expected.end()));

  Outcome r = run({"verify", "--suite", "all", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  json doc = json::parse(r.out)["result"];
  CHECK(doc["pass"] == true);
  CHECK(doc["missing_tags"].empty());
  std::set<std::string> listed, exercised;
  for (const auto& t : doc["manifest"]) listed.insert(t.get<std::string>());
  CHECK(listed == manifest);
  for (const auto& c : doc["checks"]) {
    exercised.insert(c["tag"].get<std::string>());
    CHECK(manifest.count(c["tag"].get<std::string>()) == 1);
    CHECK(c["status"] == "pass");
  }
  CHECK(exercised == manifest);
}

TEST_CASE("suite partition") {
  std::size_t total = 0;
  for (std::string_view suite : {"exact", "hasse", "beta"}) {
    verify::VerifyReport rep = verify::run(suite, PrecisionCtx{}, Real::parse("1e-30", 64));
    CHECK(rep.pass);
    std::set<std::string> tags;
    for (const verify::Check& c : rep.checks) tags.insert(c.tag);
    total += tags.size();
  }
  CHECK(total == verify::tag_manifest().size());
  CHECK_THROWS_AS(verify::run("nope", PrecisionCtx{}, Real::parse("1e-30", 64)), std::invalid_argument);
}

TEST_CASE("CSV field quoting") {
  CHECK(format::csv_field("plain") == "plain");
  CHECK(format::csv_field("a,b") == "\"a,b\"");
  CHECK(format::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(format::csv_field("two\nlines") == "\"two\nlines\"");
  Outcome r = run({"verify", "--suite", "exact", "--format", "csv"});
  std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == "id,tag,status,residual,tolerance");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].find('"') == std::string::npos) CHECK(fields(rows[i]).size() == 5);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(format::significant_digits(256) == 73);
  CHECK(format::significant_digits(64) == 15);
  CHECK(format::decimal(Real::parse("0.25", 64)) == "0.25");
  CHECK(format::decimal(Real(64)) == "0");
  CHECK(format::decimal(Real::parse("1.5e30", 128)) == "1.5e+30");
  CHECK(format::decimal(Real::parse("-3e-9", 128)) == "-3e-9");
  CHECK(format::error_bound(Real::parse("1.0000001e-30", 128)) == "1.00001e-30");
  CHECK(format::complex_text(Complex(Real(1L, 64), Real(-2L, 64))) == "1-2i");
}

TEST_CASE("grid helper") {
  PrecisionCtx ctx;
  auto rows = sample::grid(sample::Function::zeta, Real(0L, 256), Real(1L, 256), Real::parse("0.1", 256), ctx);
  CHECK(rows.size() == 11);
  CHECK_FALSE(rows.back().result.has_value());
  CHECK(sample::parse_function("beta-prime") == sample::Function::beta_prime);
  CHECK_FALSE(sample::parse_function("gamma").has_value());
}

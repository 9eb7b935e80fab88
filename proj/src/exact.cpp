#include "contbern/exact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace contbern::exact {

namespace {

// Append-only memo tables. Readers copy values out under the lock, so a
// reader never observes a partially built row.
struct BernoulliTable {
  std::mutex mu;
  std::vector<BigRat> values{BigRat(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

struct Triangle {
  std::mutex mu;
  std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
};

Triangle& stirling2_table() {
  static Triangle t;
  return t;
}

Triangle& stirling1_table() {
  static Triangle t;
  return t;
}

template <typename Next>
BigInt triangle_entry(Triangle& t, unsigned n, unsigned k, Next next_row) {
  if (k > n) return 0;
  std::lock_guard lock(t.mu);
  while (t.rows.size() <= n) {
    t.rows.push_back(next_row(t.rows.back(), t.rows.size() - 1));
  }
  return t.rows[n][k];
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt stirling2(unsigned n, unsigned k) {
  return triangle_entry(stirling2_table(), n, k, [](const std::vector<BigInt>& prev, std::size_t m) {
    // row m+1 from row m
    std::vector<BigInt> row(m + 2, 0);
    for (std::size_t j = 1; j <= m + 1; ++j) {
      BigInt carry = j <= m ? prev[j] * static_cast<unsigned long>(j) : BigInt(0);
      row[j] = carry + prev[j - 1];
    }
    return row;
  });
}

BigInt stirling2_explicit(unsigned n, unsigned k) {
  BigInt sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j);
    BigInt jn;
    mpz_ui_pow_ui(jn.get_mpz_t(), j, n);  // 0^0 = 1
    term *= jn;
    if ((k - j) % 2 == 1) sum -= term; else sum += term;
  }
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  return sum / fact;
}

BigInt stirling1_signed(unsigned n, unsigned k) {
  return triangle_entry(stirling1_table(), n, k, [](const std::vector<BigInt>& prev, std::size_t m) {
    // s(m+1, j) = s(m, j-1) - m s(m, j)
    std::vector<BigInt> row(m + 2, 0);
    for (std::size_t j = 0; j <= m + 1; ++j) {
      BigInt left = j >= 1 ? prev[j - 1] : BigInt(0);
      BigInt here = j <= m ? prev[j] * static_cast<unsigned long>(m) : BigInt(0);
      row[j] = left - here;
    }
    return row;
  });
}

BigRat bernoulli_recurrence(unsigned n) {
  auto& table = bernoulli_table();
  std::lock_guard lock(table.mu);
  auto& b = table.values;
  while (b.size() <= n) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0, solved for B_m.
    const unsigned m = static_cast<unsigned>(b.size());
    BigRat acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += BigRat(binomial(m + 1, k)) * b[k];
    BigRat next = -acc / BigRat(m + 1);
    next.canonicalize();
    b.push_back(next);
  }
  return b[n];
}

BigRat bernoulli_stirling(unsigned n) {
  BigRat sum = 0;
  BigInt fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    BigRat term(fact * stirling2(n, k), BigInt(k + 1));
    term.canonicalize();
    if (k % 2 == 1) sum -= term; else sum += term;
  }
  return sum;
}

BigRat bernoulli_doublesum(unsigned n) {
  BigRat sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt inner = 0;
    for (unsigned j = 0; j <= k; ++j) {
      BigInt jn;
      mpz_ui_pow_ui(jn.get_mpz_t(), j, n);
      BigInt term = binomial(k, j) * jn;
      if (j % 2 == 1) inner -= term; else inner += term;
    }
    BigRat t(inner, BigInt(k + 1));
    t.canonicalize();
    sum += t;
  }
  return sum;
}

BigRat bernoulli_at_one(unsigned n) {
  return n == 1 ? BigRat(1, 2) : bernoulli_recurrence(n);
}

BernoulliPoly bernoulli_poly(unsigned n) {
  BernoulliPoly p;
  p.degree = n;
  p.coeffs.assign(n + 1, BigRat(0));
  for (unsigned k = 0; k <= n; ++k) {
    p.coeffs[n - k] = BigRat(binomial(n, k)) * bernoulli_recurrence(k);
  }
  return p;
}

BigRat bernoulli_poly_eval(const BernoulliPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat power(const BigRat& x, unsigned n) {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), x.get_num_mpz_t(), n);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), x.get_den_mpz_t(), n);
  r.canonicalize();
  return r;
}

BigRat alternating_binomial_sum(unsigned k, unsigned n, const BigRat& x) {
  BigRat sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    BigRat term = BigRat(binomial(k, j)) * power(x + BigRat(j), n);
    if (j % 2 == 1) sum -= term; else sum += term;
  }
  return sum;
}

BigRat bernoulli_poly_doublesum(unsigned n, const BigRat& x) {
  BigRat sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += alternating_binomial_sum(k, n, x) / BigRat(k + 1);
  return sum;
}

bool check_difference_identity(unsigned n, const BigRat& x) {
  if (n == 0) throw std::invalid_argument("check_difference_identity: n must be >= 1");
  const BernoulliPoly p = bernoulli_poly(n);
  const BigRat lhs = bernoulli_poly_eval(p, x + BigRat(1)) - bernoulli_poly_eval(p, x);
  return lhs == BigRat(n) * power(x, n - 1);
}

bool check_stirling1_bernoulli_sum(unsigned k) {
  if (k == 0) throw std::invalid_argument("check_stirling1_bernoulli_sum: k must be >= 1");
  BigRat sum = 0;
  for (unsigned r = 1; r <= k; ++r) sum += BigRat(stirling1_signed(k, r)) * bernoulli_recurrence(r);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  BigRat rhs(fact, BigInt(k + 1));
  rhs.canonicalize();
  if (k % 2 == 1) rhs = -rhs;
  return sum == rhs;
}

std::string to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigRat q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  // Finite decimal with optional exponent.
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw bad();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any_digit = true;
      if (seen_dot) --scale;
    } else {
      throw bad();
    }
  }
  if (!any_digit) throw bad();
  if (i < s.size()) {
    const std::string exp_text = s.substr(i + 1);
    if (exp_text.empty()) throw bad();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exp_text.size() || e > 100000 || e < -100000) throw bad();
    scale += e;
  }
  BigInt num(digits, 10);
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  BigRat q = scale < 0 ? BigRat(num, ten_pow) : BigRat(num * ten_pow);
  q.canonicalize();
  return negative ? BigRat(-q) : q;
}

}  // namespace contbern::exact

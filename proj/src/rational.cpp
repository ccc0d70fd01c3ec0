#include "gibbsnum/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbsnum {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) return std::nullopt;
  text = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  Rational value;
  if (size_t slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rational(n, d);
    value.canonicalize();
  } else if (size_t dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = text.substr(0, dot), frac = text.substr(dot + 1);
    if (intpart.empty() && frac.empty()) return std::nullopt;
    if (!intpart.empty() && !all_digits(intpart)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class n(intpart.empty() ? std::string("0") : std::string(intpart));
    mpz_class scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(n, scale);
    value.canonicalize();
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(mpz_class(std::string(text)));
  }
  if (negative) value = -value;
  return value;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

mpz_class floor_rational(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational pow_rational(const Rational& x, long n) {
  if (n < 0) {
    if (x == 0) throw std::domain_error("0 raised to negative power");
    return pow_rational(1 / x, -n);
  }
  Rational result(1);
  Rational base = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

namespace {
double log_mpz(const mpz_class& z) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * M_LN2;
}
}  // namespace

double log_rational(const Rational& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of nonpositive rational");
  return log_mpz(x.get_num()) - log_mpz(x.get_den());
}

double rational_to_double(const Rational& x) { return x.get_d(); }

FloatApprox to_float(const Rational& x, int precision_bits) {
  if (precision_bits < 1) throw std::domain_error("precision_bits must be >= 1");
  mpf_class f(0, static_cast<unsigned>(precision_bits));
  f = x;
  FloatApprox out;
  out.value = f.get_d();
  int effective = precision_bits < 53 ? precision_bits : 53;
  out.error_bound = std::ldexp(std::fabs(out.value), 1 - effective);
  return out;
}

}  // namespace gibbsnum

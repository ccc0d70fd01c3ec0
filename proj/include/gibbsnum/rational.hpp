#ifndef GIBBSNUM_RATIONAL_HPP
#define GIBBSNUM_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gibbsnum {

// Exact rational arithmetic. mpq_class keeps results of +,-,*,/ in lowest
// terms with positive denominator as long as the operands are canonical;
// every constructor below canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "3", "-7/2" and decimal literals like "0.6" (exact, not rounded).
std::optional<Rational> parse_rational(std::string_view text);

std::string rational_to_string(const Rational& x);

mpz_class floor_rational(const Rational& x);

// x^n for integer n; n < 0 requires x != 0.
Rational pow_rational(const Rational& x, long n);

// log x as log(num) - log(den); safe where num/den would under/overflow a
// double. Requires x > 0.
double log_rational(const Rational& x);

double rational_to_double(const Rational& x);

struct FloatApprox {
  double value = 0.0;
  double error_bound = 0.0;  // |true value - value| <= error_bound
};

// Round-to-nearest at the given working precision (the returned double is
// additionally limited to 53 bits).
FloatApprox to_float(const Rational& x, int precision_bits);

}  // namespace gibbsnum

#endif

#include "gibbsnum/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbsnum {

int QuadraticNumber::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt5, i.e. a^2 vs 5 b^2. Equality would
  // force sqrt5 rational, so it cannot occur for nonzero a, b.
  Rational lhs = a_ * a_, rhs = 5 * b_ * b_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

mpz_class QuadraticNumber::floor() const {
  if (b_ == 0) return floor_rational(a_);
  // Write the value as (A + B*sqrt5)/C with integers A, B and C > 0.
  mpz_class ad = a_.get_den(), bd = b_.get_den();
  mpz_class C = ad * bd;
  mpz_class A = a_.get_num() * bd;
  mpz_class B = b_.get_num() * ad;
  mpz_class t;
  mpz_class fiveB2 = 5 * B * B;
  mpz_sqrt(t.get_mpz_t(), fiveB2.get_mpz_t());  // t = floor(|B| sqrt5)
  mpz_class num_lo = sgn(B) > 0 ? mpz_class(A + t) : mpz_class(A - t - 1);
  mpz_class candidate;
  mpz_fdiv_q(candidate.get_mpz_t(), num_lo.get_mpz_t(), C.get_mpz_t());
  // The bracket has width < 1/C, so at most one correction step is needed;
  // the loops also guard against any slack in the bracketing.
  while ((*this - QuadraticNumber(Rational(candidate + 1))).sign() >= 0) ++candidate;
  while ((*this - QuadraticNumber(Rational(candidate))).sign() < 0) --candidate;
  return candidate;
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt5)");
  // 1/(a + b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2); the norm is nonzero for
  // any nonzero element.
  Rational norm = a_ * a_ - 5 * b_ * b_;
  return QuadraticNumber(a_ / norm, -b_ / norm);
}

QuadraticNumber QuadraticNumber::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QuadraticNumber result(1);
  QuadraticNumber base = *this;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

double QuadraticNumber::to_double() const { return to_float(64).value; }

FloatApprox QuadraticNumber::to_float(int precision_bits) const {
  if (precision_bits < 1) throw std::domain_error("precision_bits must be >= 1");
  unsigned prec = static_cast<unsigned>(precision_bits) + 16;
  mpf_class fa(0, prec), fb(0, prec), root(0, prec);
  fa = a_;
  fb = b_;
  mpf_sqrt_ui(root.get_mpf_t(), 5);
  mpf_class value = fa + fb * root;
  FloatApprox out;
  out.value = value.get_d();
  int effective = precision_bits < 53 ? precision_bits : 53;
  out.error_bound = std::ldexp(std::fabs(out.value), 1 - effective);
  return out;
}

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  std::string root_term =
      (b_ == 1 ? std::string("sqrt5") : rational_to_string(b_) + "*sqrt5");
  if (a_ == 0) return root_term;
  if (sgn(b_) < 0) {
    Rational nb = -b_;
    std::string term = (nb == 1 ? std::string("sqrt5") : rational_to_string(nb) + "*sqrt5");
    return rational_to_string(a_) + " - " + term;
  }
  return rational_to_string(a_) + " + " + root_term;
}

namespace {

struct Term {
  Rational coeff;
  bool is_root;  // coefficient of sqrt5 rather than of 1
};

// One term: [sign] ( RATIONAL [* sqrt5] | sqrt5 ).
std::optional<Term> parse_term(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) return std::nullopt;
  size_t e = text.find_last_not_of(" \t");
  text = text.substr(b, e - b + 1);

  Term term{Rational(1), false};
  if (text == "sqrt5") {
    term.is_root = true;
    return term;
  }
  if (size_t star = text.find('*'); star != std::string_view::npos) {
    std::string_view tail = text.substr(star + 1);
    size_t tb = tail.find_first_not_of(" \t");
    if (tb == std::string_view::npos) return std::nullopt;
    size_t te = tail.find_last_not_of(" \t");
    if (tail.substr(tb, te - tb + 1) != "sqrt5") return std::nullopt;
    auto coeff = parse_rational(text.substr(0, star));
    if (!coeff) return std::nullopt;
    term.coeff = *coeff;
    term.is_root = true;
    return term;
  }
  auto coeff = parse_rational(text);
  if (!coeff) return std::nullopt;
  term.coeff = *coeff;
  return term;
}

}  // namespace

std::optional<QuadraticNumber> QuadraticNumber::parse(std::string_view text) {
  Rational a(0), b(0);
  size_t pos = 0;
  int pending_sign = +1;
  bool saw_term = false;
  while (pos < text.size()) {
    // Find the next +/- that separates terms (not a leading sign).
    size_t start = text.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    size_t scan = start;
    if (text[scan] == '+' || text[scan] == '-') ++scan;  // sign of the term
    size_t split = std::string_view::npos;
    for (size_t i = scan; i < text.size(); ++i) {
      if (text[i] == '+' || text[i] == '-') {
        split = i;
        break;
      }
    }
    std::string_view chunk = text.substr(pos, (split == std::string_view::npos
                                                   ? text.size()
                                                   : split) - pos);
    size_t cb = chunk.find_first_not_of(" \t");
    if (cb == std::string_view::npos) return std::nullopt;
    int sign = pending_sign;
    if (chunk[cb] == '+' || chunk[cb] == '-') {
      if (chunk[cb] == '-') sign = -sign;
      chunk = chunk.substr(cb + 1);
    }
    auto term = parse_term(chunk);
    if (!term) return std::nullopt;
    if (term->is_root)
      b += sign * term->coeff;
    else
      a += sign * term->coeff;
    saw_term = true;
    if (split == std::string_view::npos) break;
    pos = split;
    pending_sign = +1;
  }
  if (!saw_term) return std::nullopt;
  return QuadraticNumber(a, b);
}

}  // namespace gibbsnum

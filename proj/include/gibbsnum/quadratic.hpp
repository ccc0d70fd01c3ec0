#ifndef GIBBSNUM_QUADRATIC_HPP
#define GIBBSNUM_QUADRATIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Element a + b*sqrt(5) of Q(sqrt 5). The pair (a, b) is unique per value
// because sqrt 5 is irrational, so equality is componentwise. Arithmetic,
// sign, comparisons and floor are exact; floating point only enters through
// to_double()/to_float(). Values are immutable in spirit: every operation
// returns a fresh value.
class QuadraticNumber {
 public:
  QuadraticNumber() : a_(0), b_(0) {}
  QuadraticNumber(long n) : a_(n), b_(0) {}
  QuadraticNumber(Rational a) : a_(std::move(a)), b_(0) {}
  QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadraticNumber sqrt5() { return QuadraticNumber(Rational(0), Rational(1)); }
  // beta = (1+sqrt5)/2; beta^2 = beta + 1 holds exactly.
  static QuadraticNumber golden_beta() {
    return QuadraticNumber(Rational(1, 2), Rational(1, 2));
  }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_); }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return QuadraticNumber(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  // Throws std::domain_error when y == 0.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x * y.inverse();
  }

  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
  QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() >= 0;
  }

  // Exact sign of a + b*sqrt(5), decided by comparing a^2 against 5 b^2.
  // Never touches floating point.
  int sign() const;

  // Greatest integer <= value.  Integer bracketing via mpz_sqrt plus exact
  // sign tests; boundary values are never misclassified.
  mpz_class floor() const;

  QuadraticNumber inverse() const;
  QuadraticNumber pow(long n) const;
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  FloatApprox to_float(int precision_bits) const;

  // "a/b + c/d*sqrt5" (terms with zero coefficient are dropped).
  std::string to_string() const;
  static std::optional<QuadraticNumber> parse(std::string_view text);

 private:
  Rational a_, b_;
};

}  // namespace gibbsnum

#endif

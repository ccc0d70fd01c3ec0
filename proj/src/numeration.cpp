#include "gibbsnum/numeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gibbsnum {

namespace {

const QuadraticNumber kBeta = QuadraticNumber::golden_beta();

void require_unit_interval(const QuadraticNumber& x) {
  if (x.sign() < 0 || (x - QuadraticNumber(1)).sign() >= 0)
    throw std::domain_error("expansion input must lie in [0, 1)");
}

}  // namespace

void DigitWord::validate() const {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet_size must be >= 1");
  for (size_t i = 0; i < digits.size(); ++i)
    if (digits[i] < 0 || digits[i] >= alphabet_size)
      throw std::invalid_argument("digit out of range at position " + std::to_string(i));
}

RationalInterval base_r_value(const DigitWord& word, long r) {
  if (r < 2) throw std::domain_error("base r must be >= 2");
  word.validate();
  Rational partial(0);
  Rational scale(1);
  Rational inv_r(1, r);
  inv_r.canonicalize();
  for (int d : word.digits) {
    scale *= inv_r;
    partial += d * scale;
  }
  // Remaining digits are at most q-1 each: tail <= (q-1)/((r-1) r^n).
  Rational tail = Rational(word.alphabet_size - 1) / Rational(r - 1) * scale;
  return RationalInterval{partial, partial + tail};
}

Rational base_r_value(const DigitWord& word, long r, TailMode mode) {
  RationalInterval iv = base_r_value(word, r);
  return mode == TailMode::Zero ? iv.lo : iv.hi;
}

std::vector<int> base_r_expand(const Rational& x, long r, int n) {
  if (r < 2) throw std::domain_error("base r must be >= 2");
  if (sgn(x) < 0 || x >= 1) throw std::domain_error("expansion input must lie in [0, 1)");
  std::vector<int> digits;
  digits.reserve(n);
  Rational y = x;
  for (int k = 0; k < n; ++k) {
    Rational t = y * r;
    mpz_class d = floor_rational(t);
    digits.push_back(static_cast<int>(d.get_si()));
    y = t - Rational(d);
  }
  return digits;
}

std::vector<int> parry_expand(const QuadraticNumber& x, int n) {
  if (n < 1) throw std::domain_error("digit count must be >= 1");
  require_unit_interval(x);
  std::vector<int> digits;
  digits.reserve(n);
  QuadraticNumber y = x;
  for (int k = 0; k < n; ++k) {
    QuadraticNumber t = kBeta * y;
    mpz_class d = t.floor();
    int digit = static_cast<int>(d.get_si());
    digits.push_back(digit);
    y = t - QuadraticNumber(Rational(d));
  }
  auto check = is_admissible(digits);
  if (!check.admissible)
    throw std::logic_error("parry_expand produced a forbidden 11 factor");
  return digits;
}

namespace {

// Achievable values of sum_{m>=j} alpha_m (-beta)^{-(m+1)} over admissible
// tails with free first digit form the half-open interval (lo_free(j),
// hi_free(j)]: the maximum (ones on odd positions) is attained, the
// infimum (ones on even positions) is the forbidden (10)^inf tail.
QuadraticNumber neg_beta_hi_free(long j) {
  return kBeta.pow(j % 2 != 0 ? -j : -(j + 1));
}

QuadraticNumber neg_beta_lo_free(long j) {
  return -kBeta.pow(j % 2 == 0 ? -j : -(j + 1));
}

bool in_free_bracket(const QuadraticNumber& t, long j) {
  return (t - neg_beta_lo_free(j)).sign() > 0 && (t - neg_beta_hi_free(j)).sign() <= 0;
}

}  // namespace

std::vector<int> neg_beta_expand(const QuadraticNumber& x, int n) {
  if (n < 1) throw std::domain_error("digit count must be >= 1");
  require_unit_interval(x);
  std::vector<int> digits;
  digits.reserve(n);
  // t_k = required value of sum_{m>=k} alpha_m w_m, w_m = (-beta)^{-(m+1)}.
  QuadraticNumber t = kBeta.pow(-1) - x;
  QuadraticNumber w = kBeta.pow(-2);  // w_1 = (-beta)^{-2}
  const QuadraticNumber step = QuadraticNumber(1) - kBeta;  // -1/beta
  bool forced_zero = false;
  for (long k = 1; k <= n; ++k) {
    int digit;
    if (forced_zero) {
      digit = 0;
    } else {
      bool zero_ok = in_free_bracket(t, k + 1);
      bool one_ok = in_free_bracket(t - w, k + 2);
      if (zero_ok == one_ok)
        throw std::logic_error("neg_beta_expand bracketing was not decisive");
      digit = one_ok ? 1 : 0;
    }
    digits.push_back(digit);
    if (digit == 1) t -= w;
    forced_zero = digit == 1;
    w *= step;
  }
  auto check = is_admissible(digits);
  if (!check.admissible)
    throw std::logic_error("neg_beta_expand produced a forbidden 11 factor");
  return digits;
}

AdmissibilityResult is_admissible(std::span<const int> word) {
  for (size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] == 1 && word[i] == 1) return {false, i};
  return {true, std::nullopt};
}

AdmissibilityResult is_admissible(std::span<const int> word, ExpansionSystem) {
  return is_admissible(word);
}

namespace {

// Does sigma^shift of preperiod.period^inf equal (10)^inf?  Both sequences
// are eventually periodic, so agreement on a long enough prefix decides it.
bool shift_equals_one_zero(std::span<const int> pre, std::span<const int> period,
                           size_t shift) {
  size_t horizon = pre.size() + 2 * std::lcm(period.size(), size_t{2}) + 4;
  for (size_t i = 0; i < horizon; ++i) {
    size_t pos = shift + i;
    int digit = pos < pre.size() ? pre[pos]
                                 : period[(pos - pre.size()) % period.size()];
    int expected = i % 2 == 0 ? 1 : 0;
    if (digit != expected) return false;
  }
  return true;
}

}  // namespace

AdmissibilityResult is_admissible_periodic(std::span<const int> preperiod,
                                           std::span<const int> period,
                                           ExpansionSystem system) {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  // "11" can only appear within the first preperiod + 2*period digits.
  std::vector<int> head;
  size_t head_len = preperiod.size() + 2 * period.size() + 1;
  head.reserve(head_len);
  for (size_t i = 0; i < head_len; ++i)
    head.push_back(i < preperiod.size()
                       ? preperiod[i]
                       : period[(i - preperiod.size()) % period.size()]);
  if (auto r = is_admissible(head); !r.admissible) return r;

  size_t max_shift = preperiod.size() + 2 * std::lcm(period.size(), size_t{2});
  for (size_t shift = 0; shift <= max_shift; ++shift) {
    if (system == ExpansionSystem::NegBeta && shift % 2 == 0) continue;
    if (shift_equals_one_zero(preperiod, period, shift))
      return {false, shift};
  }
  return {true, std::nullopt};
}

QuadInterval parry_cylinder(std::span<const int> w) {
  if (auto r = is_admissible(w); !r.admissible)
    throw std::invalid_argument("word contains the forbidden factor 11");
  QuadraticNumber lo(0);
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == 1) lo += kBeta.pow(-static_cast<long>(i + 1));
  long n = static_cast<long>(w.size());
  // sup of admissible tails: ones on alternating positions starting at n+1
  // (n+2 when the word ends in 1); the sup itself is the forbidden tail.
  QuadraticNumber width =
      (n > 0 && w[w.size() - 1] == 1) ? kBeta.pow(-(n + 1)) : kBeta.pow(-n);
  return QuadInterval{lo, lo + width};
}

QuadInterval neg_beta_cylinder(std::span<const int> w) {
  if (auto r = is_admissible(w); !r.admissible)
    throw std::invalid_argument("word contains the forbidden factor 11");
  // x = 1/beta - S over admissible alpha starting with w.
  QuadraticNumber prefix(0);
  QuadraticNumber wk = kBeta.pow(-2);
  const QuadraticNumber step = QuadraticNumber(1) - kBeta;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) prefix += wk;
    wk *= step;
  }
  long j = static_cast<long>(w.size()) + 1;
  bool forced = !w.empty() && w[w.size() - 1] == 1;
  QuadraticNumber s_hi = prefix + neg_beta_hi_free(forced ? j + 1 : j);
  QuadraticNumber s_lo = prefix + neg_beta_lo_free(forced ? j + 1 : j);
  QuadraticNumber inv_beta = kBeta.pow(-1);
  return QuadInterval{inv_beta - s_hi, inv_beta - s_lo};
}

Encode3Result encode3(std::span<const int> word) {
  if (auto r = is_admissible(word); !r.admissible)
    throw std::invalid_argument("encode3 input contains the forbidden factor 11");
  Encode3Result out;
  size_t pos = 0;
  while (pos < word.size()) {
    size_t left = word.size() - pos;
    if (word[pos] == 1) {
      if (left < 2) break;
      out.code.push_back(2);  // consumes "10"
      pos += 2;
    } else if (left >= 2 && word[pos + 1] == 0) {
      out.code.push_back(0);  // consumes "00"
      pos += 2;
    } else if (left >= 3) {
      out.code.push_back(1);  // consumes "010"
      pos += 3;
    } else {
      break;  // "0" or "01": next code word undecided
    }
  }
  out.suffix.assign(word.begin() + pos, word.end());
  return out;
}

std::vector<int> decode3(std::span<const int> code) {
  std::vector<int> out;
  for (int c : code) {
    switch (c) {
      case 0:
        out.insert(out.end(), {0, 0});
        break;
      case 1:
        out.insert(out.end(), {0, 1, 0});
        break;
      case 2:
        out.insert(out.end(), {1, 0});
        break;
      default:
        throw std::invalid_argument("ternary code digit out of range");
    }
  }
  return out;
}

QuadraticNumber parry_tail_bound(int n) {
  // beta/(beta-1) = beta^2
  return kBeta.pow(2 - n);
}

QuadraticNumber neg_beta_tail_bound(int n) { return kBeta.pow(-n); }

}  // namespace gibbsnum

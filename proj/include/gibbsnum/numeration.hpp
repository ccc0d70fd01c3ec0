#ifndef GIBBSNUM_NUMERATION_HPP
#define GIBBSNUM_NUMERATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gibbsnum/quadratic.hpp"
#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Finite word over the alphabet {0, ..., alphabet_size-1}.
struct DigitWord {
  int alphabet_size = 2;
  std::vector<int> digits;

  DigitWord() = default;
  DigitWord(int q, std::vector<int> d) : alphabet_size(q), digits(std::move(d)) {}
  size_t size() const { return digits.size(); }
  void validate() const;  // throws std::invalid_argument on a bad digit
};

enum class ExpansionSystem { Parry, NegBeta };
enum class TailMode { Zero, Max };

struct RationalInterval {
  Rational lo, hi;  // [lo, hi]
};

struct QuadInterval {
  QuadraticNumber lo, hi;  // [lo, hi)
};

// Exact range of X_{q,r} = sum_n w_n r^{-n} over all infinite extensions of
// the word: [partial sum, partial sum + (q-1)/((r-1) r^n)].
RationalInterval base_r_value(const DigitWord& word, long r);
Rational base_r_value(const DigitWord& word, long r, TailMode mode);

// First n base-r digits of a rational x in [0, 1).
std::vector<int> base_r_expand(const Rational& x, long r, int n);

// First n digits of the greedy (Parry) expansion of x in [0,1) in base
// beta = (1+sqrt5)/2: eps_k = floor(beta T^{k-1} x), T(y) = beta y mod 1.
// The output never contains "11".
std::vector<int> parry_expand(const QuadraticNumber& x, int n);

// First n digits of the (-beta) companion expansion
//   x = 1/beta - sum_m alpha_m (-beta)^{-(m+1)},
// digits without "11" and without a forbidden (10)^inf tail at odd shifts.
// Extraction is by exact interval bracketing over admissible completions.
std::vector<int> neg_beta_expand(const QuadraticNumber& x, int n);

struct AdmissibilityResult {
  bool admissible = true;
  std::optional<size_t> violation_pos;  // index of the second 1 of a "11" pair
};

// Finite words: admissible iff "11" never occurs (both systems).
AdmissibilityResult is_admissible(std::span<const int> word);
AdmissibilityResult is_admissible(std::span<const int> word, ExpansionSystem system);

// Eventually periodic infinite word preperiod.period^inf.  On top of the
// "11" check, rejects tails equal to (10)^inf at the shifts forbidden for
// the system: every shift for Parry, odd shifts for NegBeta.
AdmissibilityResult is_admissible_periodic(std::span<const int> preperiod,
                                           std::span<const int> period,
                                           ExpansionSystem system);

// Parry cylinder [[w]]: the x in [0,1) whose expansion starts with w.
QuadInterval parry_cylinder(std::span<const int> w);
// (-beta) cylinder [[w]]*.
QuadInterval neg_beta_cylinder(std::span<const int> w);

// Ternary recoding by the words w(0)=00, w(1)=010, w(2)=10.
struct Encode3Result {
  std::vector<int> code;
  std::vector<int> suffix;  // unconsumed tail, too short to decide
};

// Parses admissible binary words left to right; stops (leaving a suffix)
// when the remaining prefix does not determine the next code word.
Encode3Result encode3(std::span<const int> word);

// Concatenation w(c_1)...w(c_n); never contains "11".
std::vector<int> decode3(std::span<const int> code);

// Exact reconstruction error bounds after n digits.
QuadraticNumber parry_tail_bound(int n);     // beta^{-n} * beta/(beta-1)
QuadraticNumber neg_beta_tail_bound(int n);  // beta^{-n}

}  // namespace gibbsnum

#endif

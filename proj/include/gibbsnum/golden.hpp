#ifndef GIBBSNUM_GOLDEN_HPP
#define GIBBSNUM_GOLDEN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gibbsnum/baser.hpp"
#include "gibbsnum/matmeasure.hpp"
#include "gibbsnum/numeration.hpp"
#include "gibbsnum/quadratic.hpp"
#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Bernoulli parameters (p, q), p + q = 1, both positive; alpha = p/q.
struct GoldenParams {
  Rational p, q;

  Rational alpha() const { return p / q; }
  void validate() const;
};

// mu is the law of X(w) = sum w_n beta^-(n+1), mustar the law of
// Y(w) = 1/beta - sum w_n (-beta)^-(n+1), for i.i.d. Bernoulli(p, q) digits.

std::array<Rational, 3> mu_initial_vector(const GoldenParams& params);
std::array<Rational, 3> mustar_initial_vector(const GoldenParams& params);
RatMatrix mu_matrix(const GoldenParams& params, int digit);      // M_0, M_1
RatMatrix mustar_matrix(const GoldenParams& params, int digit);  // A_0, A_1

struct CylinderVector {
  std::array<Rational, 3> v;
  // Words ending in 1 are handled by the exact additivity
  // mu[[w1]] = mu[[w]] - mu[[w0]], not by the matrix product formula.
  bool derived_from_additivity = false;
};

// (mu((1/b)[[w]]), mu(1/b + (1/b)[[w]]), mu(1/b^2 + (1/b)[[w]])) for an
// admissible word; empty word returns the initial vector.
CylinderVector mu_cylinder_vector(const GoldenParams& params, std::span<const int> w);
// (mustar([[w]]*), mustar(-1/b + [[w]]*), mustar(1/b^2 + [[w]]*)).
CylinderVector mustar_cylinder_vector(const GoldenParams& params, std::span<const int> w);

// Product matrices attached to the ternary code digits: the digit matrices
// multiplied along the words 00, 010 and 10 respectively.
std::array<RatMatrix, 3> code_matrices(const GoldenParams& params);

// Closed form for the n-th power of code matrix 0 or 2 through
// u_n(x) = x^-1 + x^0 + ... + x^(n-2) (empty sum 0 at n = 0), v_n(x) = x^n.
RatMatrix code_matrix_power(const GoldenParams& params, int which, long n);

Rational cf_u(long n, const Rational& x);
Rational cf_v(long n, const Rational& x);

// Generalized continued-fraction convergents for blocks a_0 >= 0,
// a_1, ..., a_n > 0: u_i/v_i evaluated at alpha for even i and at 1/alpha
// for odd i, with (p_-1, q_-1) = (1, 0), (p_0, q_0) = (u_0, 1) and
// (p_k, q_k) = u_k (p_{k-1}, q_{k-1}) + v_{k-1} (p_{k-2}, q_{k-2}).
struct CFState {
  long k = 0;
  Rational p_k, q_k;
  Rational p_prev, q_prev;   // p_{k-1}, q_{k-1}
  Rational u_k, v_k;
  std::optional<Rational> delta;  // |p_k/q_k - p_{k-1}/q_{k-1}|, k >= 1
};

std::vector<CFState> cf_convergents(std::span<const long> a, const Rational& alpha);

struct DeltaBoundEntry {
  long k = 0;
  bool holds_i = true, holds_ii = true, holds_iii = true, holds_corollary = true;
  Rational delta;
};

struct DeltaBoundsReport {
  bool all_hold = true;
  bool deltas_nonincreasing = true;
  std::vector<DeltaBoundEntry> entries;
};

// Exact verification of the convergent-gap bounds for alpha > 1:
//   (i)   delta_k <= v_{k-1}/(u_k u_{k-1} + v_{k-1}) delta_{k-1}   (k >= 2)
//   (ii)  delta_k <= alpha^(1-(a_{k-1}+a_k)) delta_{k-1}           (k even)
//   (iii) delta_k <= alpha^(a_0 - (a_1+...+a_k)/2)                 (k even)
// plus the corollary delta_k <= alpha^(a_0 - (k-1)/2) for every k >= 1.
// Half-integer powers of alpha are compared through squares.
DeltaBoundsReport delta_bounds_check(std::span<const long> a, const Rational& alpha);

// n-step potential of mustar composed with the ternary coding: the log
// ratio of (1 0 0) . (code-matrix product over c_1..c_n) . v0 over the same
// with c_1 dropped, v0 the mustar initial vector. Exact rationals, log last.
double phi_n_golden(const GoldenParams& params, std::span<const int> code);

// phi_n for n = 1..n_max along one ternary probe sequence.
std::vector<double> phi_sequence_golden(const GoldenParams& params,
                                        std::span<const int> code, int n_max);

enum class TailCase { ZeroTwoBlocks, AllZeros, RankOnePattern, Undetermined };

struct TailClassification {
  TailCase kind = TailCase::Undetermined;
  bool decided = false;  // only the rank-one pattern is decidable from a prefix
  size_t N = 0, n = 0;   // the pattern occupies positions N+1..N+n (1-based)
};

// Classifies a finite ternary prefix: RankOnePattern when a digit in {1,2}
// is followed (through zeros) by a 1 (such blocks collapse the product
// matrices to rank one); otherwise ZeroTwoBlocks / AllZeros "consistent so
// far" depending on the tail after the last 1.
TailClassification classify_ternary_tail(std::span<const int> prefix);

enum class GoldenTarget { Mu, MuStar };

// One of the shifted cylinder sets appearing in the defining displays:
// row 0, 1, 2 selects the offset (0, 1/b, 1/b^2 for mu; 0, -1/b, 1/b^2 for
// mustar); mu additionally contracts the cylinder by 1/b.
struct GoldenSetSpec {
  GoldenTarget target = GoldenTarget::Mu;
  std::vector<int> word;
  int row = 0;
};

QuadInterval golden_set_interval(const GoldenSetSpec& set);

// Sorted draws of X or Y for i.i.d. Bernoulli(p, q) digits truncated at
// `depth`; guard band beta^-(depth-2) dominates the truncation tail.
class GoldenSampler {
 public:
  static GoldenSampler draw(const GoldenParams& params, GoldenTarget target,
                            size_t n_samples, int depth, uint64_t seed);
  McEstimate set_mass(const QuadInterval& set) const;
  const std::vector<double>& values() const { return values_; }
  double band() const { return band_; }

 private:
  std::vector<double> values_;
  double band_ = 0.0;
};

McEstimate golden_mc_oracle(const GoldenParams& params, const GoldenSetSpec& set,
                            size_t n_samples, int depth, uint64_t seed);

}  // namespace gibbsnum

#endif

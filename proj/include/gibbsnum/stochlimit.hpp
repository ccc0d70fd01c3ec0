#ifndef GIBBSNUM_STOCHLIMIT_HPP
#define GIBBSNUM_STOCHLIMIT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gibbsnum/numeration.hpp"
#include "gibbsnum/quadratic.hpp"
#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Finite family of row-stochastic 2x2 matrices M_k = [[x_k, 1-x_k],
// [y_k, 1-y_k]] with sampling weights p_k. Entries live in Q(sqrt5) so that
// golden-ratio convolution families stay exact; rational families embed.
// The identity and the swap [[0,1],[1,0]] are excluded, which forces
// |det M_k| = |x_k - y_k| < 1.
struct RowStochasticFamily {
  std::vector<QuadraticNumber> x, y;
  std::vector<Rational> weights;

  int size() const { return static_cast<int>(x.size()); }
  QuadraticNumber det(int k) const { return x[k] - y[k]; }
  void validate() const;  // throws std::domain_error on a violated hypothesis
};

RowStochasticFamily rational_family(const std::vector<Rational>& x,
                                    const std::vector<Rational>& y,
                                    std::vector<Rational> weights);

// Example family tied to numeration in base beta: y_k = (k/(r-1))(1-1/beta),
// x_k = y_k + 1/beta; then x_omega = ((beta-1)/(r-1)) sum_n omega_n beta^-n.
// Weights default to uniform.
RowStochasticFamily convolution_family(const QuadraticNumber& beta, int r);

// Exact entries of the backward product P_n = M_{w_n} ... M_{w_1}, which has
// equal-column form [[x_n, 1-x_n],[y_n, 1-y_n]] with
// y_n = sum_i y_{w_i} det P_{i-1} and x_n = y_n + det P_n.
struct BackwardProduct {
  QuadraticNumber x, y, det;
};

BackwardProduct backward_product(const RowStochasticFamily& family,
                                 std::span<const int> word);

using DigitStream = std::function<int(size_t)>;  // 0-based index -> digit

struct QuadIntervalClosed {
  QuadraticNumber lo, hi;  // [lo, hi]
  QuadraticNumber width() const { return hi - lo; }
};

// Interval of width <= tol containing x^omega = lim y_n, obtained by
// truncating once the geometric tail bound prod|det| / (1 - max|det|)
// is small enough.
QuadIntervalClosed x_limit(const RowStochasticFamily& family, const DigitStream& stream,
                           const Rational& tol);

struct LambdaSample {
  std::vector<double> values;  // sorted draws of x^omega (truncated)
  double truncation_bound = 0.0;
  int depth = 0;
  uint64_t seed = 0;
};

// i.i.d. draws of omega with digit law p; each x^omega evaluated to `depth`
// terms. Reproducible from the seed.
LambdaSample sample_lambda(const RowStochasticFamily& family, size_t n_samples,
                           int depth, uint64_t seed);

enum class LimitLawKind { Discrete, SingularContinuous, Unknown };

// Classification of the limit law lambda: Discrete when some M_k is
// singular; SingularContinuous when prod_k (|det M_k|/p_k)^{p_k} lies in
// (0,1] with some factor != 1; Unknown otherwise (the classification rule is an
// implication, not a dichotomy, so nothing else is guessed). The product
// test is exact: with D a common
// denominator of the p_k, the rational power prod (|det|/p)^{p D} is
// compared against 1 in Q(sqrt5).
struct ClassifyCertificate {
  LimitLawKind kind = LimitLawKind::Unknown;
  std::optional<int> noninvertible_index;
  std::vector<QuadraticNumber> factors;  // |det M_k| / p_k, exact
  unsigned long common_denominator = 1;  // D
  QuadraticNumber product_power_D;       // prod factors^{p_k D}, exact
  double product_value = 0.0;            // (product_power_D)^(1/D)
};

ClassifyCertificate classify(const RowStochasticFamily& family);

// Max over partition bins B of |lambda(B) - sum_k p_k lambda((B-y_k)/(x_k-y_k))|
// on the empirical law of sorted samples; bin edges at sample quantiles.
double selfsim_residual(const RowStochasticFamily& family,
                        std::span<const double> sorted_samples, int bins);

// Empirical CDF helpers shared with the Monte Carlo modules.
double ecdf(std::span<const double> sorted, double x);
double ecdf_mass(std::span<const double> sorted, double lo, double hi);  // [lo, hi)
double ks_distance_to_uniform(std::span<const double> sorted);

}  // namespace gibbsnum

#endif

#ifndef GIBBSNUM_BASER_HPP
#define GIBBSNUM_BASER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gibbsnum/matmeasure.hpp"
#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Parameters of the Bernoulli convolution read in integral base r:
// X_{2r-1,r}(omega) = sum_n omega_n r^{-n} with omega_n i.i.d. over
// {0,...,2r-2} with law p.
struct BaseRParams {
  int r = 2;
  std::vector<Rational> p;  // length 2r-1, nonnegative, sums to 1

  void validate() const;
};

// The 2x2 matrix family whose cylinder products realize nu_p (the law of
// frac X): a_k = p_k, c_k = p_{r+k} (k <= r-2), b_0 = c_{r-1} = 0,
// b_{k+1} = a_k, d_{k+1} = c_k, d_0 = a_{r-1}; V and L are the eigenvalue-1
// right/left eigenvectors of sum M_k with L V = 1. Throws std::domain_error
// when the eigenvector fails to be strictly positive (degenerate p).
MatrixMeasureSpec matrices_from_p(const BaseRParams& params);

struct McEstimate {
  double estimate = 0.0;
  double sigma = 0.0;      // binomial standard error
  double band_mass = 0.0;  // fraction of samples inside the guard band
  size_t n_samples = 0;
};

// Sorted Monte Carlo draws of X, reusable across every interval query.
// Samples landing within `band` of a query boundary are tallied separately
// as uncertainty, never resolved by tie-breaking.
class BaseRSampler {
 public:
  static BaseRSampler draw(const BaseRParams& params, size_t n_samples, int depth,
                           uint64_t seed);

  // mu_p-mass of [lo, hi).
  McEstimate interval_mass(double lo, double hi) const;
  // nu_p-mass of the base-r cylinder of `word` under frac(X).
  McEstimate frac_cylinder_mass(std::span<const int> word) const;
  // nu*_p(B) = mu_p(B) + mu_p(B+1) for B = [lo, hi) inside [-1, 2].
  McEstimate nu_star(double lo, double hi) const;

  double band() const { return band_; }
  int depth() const { return depth_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;  // sorted
  double band_ = 0.0;
  int depth_ = 0;
  int r_ = 2;
};

McEstimate mc_frac_distribution(const BaseRParams& params, std::span<const int> word,
                                size_t n_samples, int depth, uint64_t seed);

McEstimate nu_star_eval(const BaseRParams& params, double lo, double hi,
                        size_t n_samples, int depth, uint64_t seed);

// Empirical residual of mu_p(B) = sum_k p_k mu_p(rB - k) over a uniform
// partition of [0, 2] into `bins` intervals.
double selfsim_residual_mu(const BaseRParams& params, const BaseRSampler& sampler,
                           int bins);

}  // namespace gibbsnum

#endif

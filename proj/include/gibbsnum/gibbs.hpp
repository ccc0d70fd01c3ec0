#ifndef GIBBSNUM_GIBBS_HPP
#define GIBBSNUM_GIBBS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibbsnum/matmeasure.hpp"

namespace gibbsnum {

// Raised when a phi-style ratio has a zero-measure cylinder in the
// denominator; zero numerators are reported as -infinity instead.
struct CylinderMeasureZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n-step potential phi_n(w) = log eta[w_1..w_n] - log eta[w_2..w_n].
// Returns -infinity when the numerator vanishes. Evaluated in log space so
// that masses decaying like c^n never underflow.
double phi_n(const MatrixMeasureSpec& spec, std::span<const int> word);

using Potential = std::function<double(std::span<const int>)>;

// ( eta[w] / prod_{k=0}^{n-1} e^{phi(suffix_k w)} )^{1/n}.
double weak_gibbs_ratio(const MatrixMeasureSpec& spec, const Potential& potential,
                        std::span<const int> word);

// ( eta[w] / (eta[w_1..i] eta[w_{i+1}..n]) )^{1/root_n}; root_n = 0 means
// the word length (the literal reading of the defining display).
double quasi_bernoulli_ratio(const MatrixMeasureSpec& spec, std::span<const int> word,
                             size_t split, size_t root_n = 0);

// Eventually periodic probe sequence preperiod.period^inf.
struct Probe {
  std::string name;
  std::vector<int> preperiod;
  std::vector<int> period;

  int digit(size_t i) const {
    return i < preperiod.size() ? preperiod[i]
                                : period[(i - preperiod.size()) % period.size()];
  }
  std::vector<int> prefix(size_t n) const {
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = digit(i);
    return out;
  }
};

// Adversarial families (constant digits, alternations, blocks) plus seeded
// pseudo-random probes.
std::vector<Probe> default_probes(int alphabet, int n_random, size_t random_len,
                                  uint64_t seed);

struct PotentialTrace {
  std::vector<Probe> probes;
  int n_max = 0;
  // phi[p][n-1] = phi_n on probe p; -inf marks zero-mass numerators.
  std::vector<std::vector<double>> phi;
  // residual[p][n-1] = |sum_a e^{phi_n(a w)} - 1| on probe p.
  std::vector<std::vector<double>> normalization_residual;
  std::vector<double> sup_increment;  // per probe: sup_n |phi_{n+1} - phi_n|
  double overall_sup = 0.0;
  // sup_increment_by_n[n-1] = sup over probes of |phi_{n+1} - phi_n|.
  std::vector<double> sup_increment_by_n;
};

PotentialTrace convergence_report(const MatrixMeasureSpec& spec,
                                  const std::vector<Probe>& probes, int n_max);

}  // namespace gibbsnum

#endif

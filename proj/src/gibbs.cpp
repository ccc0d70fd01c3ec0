#include "gibbsnum/gibbs.hpp"

#include <cmath>
#include <limits>

#include "gibbsnum/rng.hpp"

namespace gibbsnum {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_or_neg_inf(const Rational& x) {
  if (sgn(x) < 0) throw std::logic_error("negative cylinder mass");
  if (sgn(x) == 0) return -kInf;
  return log_rational(x);
}
}  // namespace

double phi_n(const MatrixMeasureSpec& spec, std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("phi_n needs a nonempty word");
  Rational num = cylinder_measure(spec, word);
  Rational den = cylinder_measure(spec, word.subspan(1));
  if (sgn(den) == 0) throw CylinderMeasureZero("cylinder has measure zero");
  return log_or_neg_inf(num) - log_rational(den);
}

double weak_gibbs_ratio(const MatrixMeasureSpec& spec, const Potential& potential,
                        std::span<const int> word) {
  if (word.empty()) throw std::invalid_argument("weak_gibbs_ratio needs a nonempty word");
  Rational mass = cylinder_measure(spec, word);
  if (sgn(mass) == 0) throw CylinderMeasureZero("cylinder has measure zero");
  double log_prod = 0.0;
  for (size_t k = 0; k < word.size(); ++k) log_prod += potential(word.subspan(k));
  double n = static_cast<double>(word.size());
  return std::exp((log_rational(mass) - log_prod) / n);
}

double quasi_bernoulli_ratio(const MatrixMeasureSpec& spec, std::span<const int> word,
                             size_t split, size_t root_n) {
  if (split < 1 || split >= word.size())
    throw std::invalid_argument("split must satisfy 1 <= i < n");
  Rational whole = cylinder_measure(spec, word);
  Rational left = cylinder_measure(spec, word.subspan(0, split));
  Rational right = cylinder_measure(spec, word.subspan(split));
  if (sgn(left) == 0 || sgn(right) == 0)
    throw CylinderMeasureZero("cylinder has measure zero");
  if (sgn(whole) == 0) return 0.0;
  double n = static_cast<double>(root_n == 0 ? word.size() : root_n);
  return std::exp((log_rational(whole) - log_rational(left) - log_rational(right)) / n);
}

std::vector<Probe> default_probes(int alphabet, int n_random, size_t random_len,
                                  uint64_t seed) {
  std::vector<Probe> probes;
  for (int a = 0; a < alphabet; ++a)
    probes.push_back({std::to_string(a) + "^inf", {}, {a}});
  if (alphabet >= 2) {
    probes.push_back({"(10)^inf", {}, {1, 0}});
    probes.push_back({"(01)^inf", {}, {0, 1}});
    probes.push_back({"(1100)^inf", {}, {1, 1, 0, 0}});
    if (alphabet >= 3) probes.push_back({"(120)^inf", {}, {1, 2, 0}});
  }
  Rng rng(seed);
  for (int i = 0; i < n_random; ++i) {
    Probe p;
    p.name = "random" + std::to_string(i);
    p.period.resize(random_len);
    for (size_t j = 0; j < random_len; ++j)
      p.period[j] = static_cast<int>(rng.uniform_int(0, alphabet - 1));
    probes.push_back(std::move(p));
  }
  return probes;
}

PotentialTrace convergence_report(const MatrixMeasureSpec& spec,
                                  const std::vector<Probe>& probes, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  PotentialTrace trace;
  trace.probes = probes;
  trace.n_max = n_max;
  trace.phi.resize(probes.size());
  trace.normalization_residual.resize(probes.size());
  trace.sup_increment.assign(probes.size(), 0.0);
  trace.sup_increment_by_n.assign(n_max - 1, 0.0);

  const int r = spec.alphabet_size();
  for (size_t p = 0; p < probes.size(); ++p) {
    std::vector<int> word = probes[p].prefix(static_cast<size_t>(n_max));
    auto& phis = trace.phi[p];
    auto& residuals = trace.normalization_residual[p];
    phis.reserve(n_max);
    residuals.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
      std::span<const int> prefix(word.data(), static_cast<size_t>(n));
      phis.push_back(phi_n(spec, prefix));
      // normalization diagnostic: sum_a e^{phi_n(a w)} with w the first
      // n-1 digits of the probe.
      std::vector<int> extended(prefix.begin(), prefix.end());
      extended.insert(extended.begin(), 0);
      extended.pop_back();
      double sum = 0.0;
      for (int a = 0; a < r; ++a) {
        extended[0] = a;
        double v = phi_n(spec, extended);
        sum += std::exp(v);
      }
      residuals.push_back(std::fabs(sum - 1.0));
    }
    double sup = 0.0;
    for (int n = 0; n + 1 < n_max; ++n) {
      double inc = std::fabs(phis[n + 1] - phis[n]);
      if (std::isnan(inc)) inc = kInf;  // -inf minus -inf: treat as divergent
      if (inc > sup) sup = inc;
      if (inc > trace.sup_increment_by_n[n]) trace.sup_increment_by_n[n] = inc;
    }
    trace.sup_increment[p] = sup;
    if (sup > trace.overall_sup) trace.overall_sup = sup;
  }
  return trace;
}

}  // namespace gibbsnum

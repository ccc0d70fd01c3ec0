#include "gibbsnum/baser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gibbsnum/rng.hpp"
#include "gibbsnum/stochlimit.hpp"

namespace gibbsnum {

void BaseRParams::validate() const {
  if (r < 2) throw std::domain_error("base r must be >= 2");
  if (static_cast<int>(p.size()) != 2 * r - 1)
    throw std::domain_error("p must have 2r-1 entries");
  Rational total(0);
  for (const Rational& v : p) {
    if (sgn(v) < 0) throw std::domain_error("p entries must be nonnegative");
    total += v;
  }
  if (total != 1) throw std::domain_error("p must sum to 1");
}

MatrixMeasureSpec matrices_from_p(const BaseRParams& params) {
  params.validate();
  const int r = params.r;
  const auto& p = params.p;

  std::vector<Rational> a(r), b(r), c(r), d(r);
  for (int k = 0; k < r; ++k) a[k] = p[k];
  for (int k = 0; k + 1 < r; ++k) c[k] = p[r + k];
  c[r - 1] = 0;
  b[0] = 0;
  for (int k = 0; k + 1 < r; ++k) {
    b[k + 1] = a[k];
    d[k + 1] = c[k];
  }
  d[0] = a[r - 1];

  MatrixMeasureSpec spec;
  spec.dim = 2;
  for (int k = 0; k < r; ++k) {
    RatMatrix m(2, 2);
    m.at(0, 0) = a[k];
    m.at(0, 1) = b[k];
    m.at(1, 0) = c[k];
    m.at(1, 1) = d[k];
    spec.matrices.push_back(m);
  }
  // sum M_k always has eigenvalue 1 when sum p = 1; the right eigenvector is
  // (sum_{k<=r-2} p_k, sum_{k>=r} p_k), the left one is (1, 1).
  Rational v1(0), v2(0);
  for (int k = 0; k + 1 < r; ++k) v1 += p[k];
  for (int k = r; k <= 2 * r - 2; ++k) v2 += p[k];
  if (sgn(v1) <= 0 || sgn(v2) <= 0)
    throw std::domain_error(
        "degenerate parameter vector: eigenvector of sum M_k is not positive");
  spec.V = {v1, v2};
  Rational norm = v1 + v2;
  spec.L = {1 / norm, 1 / norm};
  return spec;
}

BaseRSampler BaseRSampler::draw(const BaseRParams& params, size_t n_samples, int depth,
                                uint64_t seed) {
  params.validate();
  if (n_samples < 1) throw std::domain_error("need at least one sample");
  if (depth < 2) throw std::domain_error("depth must be >= 2");
  BaseRSampler out;
  out.depth_ = depth;
  out.r_ = params.r;
  // Guard band r^-(depth-2) strictly dominates the truncation tail
  // (2r-2)/((r-1) r^depth) = 2 r^-depth, so a sample can change sides of a
  // boundary only if it was already tallied as in-band.
  out.band_ = std::pow(static_cast<double>(params.r), -(depth - 2));
  std::vector<double> cum = Rng::cumulative(params.p);
  Rng rng(seed);
  out.values_.resize(n_samples);
  const double r = static_cast<double>(params.r);
  for (size_t s = 0; s < n_samples; ++s) {
    double x = 0.0, scale = 1.0;
    for (int i = 0; i < depth; ++i) {
      scale /= r;
      x += scale * static_cast<double>(rng.sample(cum));
    }
    out.values_[s] = x;
  }
  std::sort(out.values_.begin(), out.values_.end());
  return out;
}

namespace {

McEstimate finish(double hits, double in_band, size_t n) {
  McEstimate est;
  est.n_samples = n;
  est.estimate = hits / static_cast<double>(n);
  est.band_mass = in_band / static_cast<double>(n);
  est.sigma = std::sqrt(std::max(est.estimate * (1.0 - est.estimate), 1e-12) /
                        static_cast<double>(n));
  return est;
}

}  // namespace

McEstimate BaseRSampler::interval_mass(double lo, double hi) const {
  std::span<const double> v(values_);
  double inside = ecdf_mass(v, lo, hi) * static_cast<double>(values_.size());
  double banded = 0.0;
  for (double edge : {lo, hi})
    banded += (ecdf(v, edge + band_) - ecdf(v, edge - band_)) *
              static_cast<double>(values_.size());
  return finish(inside, banded, values_.size());
}

McEstimate BaseRSampler::frac_cylinder_mass(std::span<const int> word) const {
  double lo = 0.0, scale = 1.0;
  for (int digit : word) {
    if (digit < 0 || digit >= r_) throw std::invalid_argument("word digit out of range");
    scale /= static_cast<double>(r_);
    lo += scale * static_cast<double>(digit);
  }
  double hi = lo + scale;
  // frac(X) lands in [lo, hi) iff X does modulo an integer shift; X <= 2.
  std::span<const double> v(values_);
  double hits = 0.0, banded = 0.0;
  for (int shift = 0; shift <= 2; ++shift) {
    double a = lo + shift, b = hi + shift;
    hits += ecdf_mass(v, a, b) * static_cast<double>(values_.size());
    for (double edge : {a, b})
      banded += (ecdf(v, edge + band_) - ecdf(v, edge - band_)) *
                static_cast<double>(values_.size());
  }
  // Integer boundaries flip the value of frac; they are already inside the
  // banded tally through the shifted interval edges when lo = 0.
  return finish(hits, banded, values_.size());
}

McEstimate BaseRSampler::nu_star(double lo, double hi) const {
  if (lo < -1.0 - 1e-12 || hi > 2.0 + 1e-12)
    throw std::domain_error("nu* interval must lie inside [-1, 2]");
  std::span<const double> v(values_);
  double hits = (ecdf_mass(v, lo, hi) + ecdf_mass(v, lo + 1.0, hi + 1.0)) *
                static_cast<double>(values_.size());
  double banded = 0.0;
  for (double edge : {lo, hi, lo + 1.0, hi + 1.0})
    banded += (ecdf(v, edge + band_) - ecdf(v, edge - band_)) *
              static_cast<double>(values_.size());
  return finish(hits, banded, values_.size());
}

McEstimate mc_frac_distribution(const BaseRParams& params, std::span<const int> word,
                                size_t n_samples, int depth, uint64_t seed) {
  return BaseRSampler::draw(params, n_samples, depth, seed).frac_cylinder_mass(word);
}

McEstimate nu_star_eval(const BaseRParams& params, double lo, double hi,
                        size_t n_samples, int depth, uint64_t seed) {
  return BaseRSampler::draw(params, n_samples, depth, seed).nu_star(lo, hi);
}

double selfsim_residual_mu(const BaseRParams& params, const BaseRSampler& sampler,
                           int bins) {
  params.validate();
  if (bins < 1) throw std::domain_error("need at least one bin");
  std::span<const double> v(sampler.values());
  std::vector<double> ps;
  for (const Rational& w : params.p) ps.push_back(rational_to_double(w));
  const double r = static_cast<double>(params.r);
  double residual = 0.0;
  for (int b = 0; b < bins; ++b) {
    double lo = 2.0 * b / bins, hi = 2.0 * (b + 1) / bins;
    double lhs = ecdf_mass(v, lo, hi);
    double rhs = 0.0;
    for (size_t k = 0; k < ps.size(); ++k)
      rhs += ps[k] * ecdf_mass(v, r * lo - static_cast<double>(k),
                               r * hi - static_cast<double>(k));
    residual = std::max(residual, std::fabs(lhs - rhs));
  }
  return residual;
}

}  // namespace gibbsnum

#include "gibbsnum/stochlimit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gibbsnum/rng.hpp"

namespace gibbsnum {

void RowStochasticFamily::validate() const {
  if (x.empty() || x.size() != y.size() || x.size() != weights.size())
    throw std::domain_error("family vectors must be nonempty and of equal length");
  Rational total(0);
  for (const Rational& w : weights) {
    if (sgn(w) <= 0) throw std::domain_error("weights must be positive");
    total += w;
  }
  if (total != 1) throw std::domain_error("weights must sum to 1");
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k].sign() < 0 || (x[k] - QuadraticNumber(1)).sign() > 0 ||
        y[k].sign() < 0 || (y[k] - QuadraticNumber(1)).sign() > 0)
      throw std::domain_error("x_k, y_k must lie in [0, 1]");
    bool is_identity = x[k] == QuadraticNumber(1) && y[k].is_zero();
    bool is_swap = x[k].is_zero() && y[k] == QuadraticNumber(1);
    if (is_identity || is_swap)
      throw std::domain_error("the identity and the swap matrix are excluded");
  }
}

RowStochasticFamily rational_family(const std::vector<Rational>& x,
                                    const std::vector<Rational>& y,
                                    std::vector<Rational> weights) {
  RowStochasticFamily family;
  for (const Rational& v : x) family.x.emplace_back(v);
  for (const Rational& v : y) family.y.emplace_back(v);
  family.weights = std::move(weights);
  family.validate();
  return family;
}

RowStochasticFamily convolution_family(const QuadraticNumber& beta, int r) {
  if ((beta - QuadraticNumber(1)).sign() <= 0)
    throw std::domain_error("convolution family needs beta > 1");
  if (r < 2) throw std::domain_error("convolution family needs r >= 2");
  QuadraticNumber inv_beta = beta.inverse();
  QuadraticNumber gap = QuadraticNumber(1) - inv_beta;
  RowStochasticFamily family;
  for (int k = 0; k < r; ++k) {
    QuadraticNumber yk = QuadraticNumber(make_rational(k, r - 1)) * gap;
    family.y.push_back(yk);
    family.x.push_back(yk + inv_beta);
    family.weights.push_back(make_rational(1, r));
  }
  family.validate();
  return family;
}

BackwardProduct backward_product(const RowStochasticFamily& family,
                                 std::span<const int> word) {
  BackwardProduct state{QuadraticNumber(1), QuadraticNumber(0), QuadraticNumber(1)};
  for (int digit : word) {
    if (digit < 0 || digit >= family.size())
      throw std::invalid_argument("word digit out of range");
    state.y += family.y[digit] * state.det;
    state.det *= family.det(digit);
    state.x = state.y + state.det;
  }
  return state;
}

QuadIntervalClosed x_limit(const RowStochasticFamily& family, const DigitStream& stream,
                           const Rational& tol) {
  if (sgn(tol) <= 0) throw std::domain_error("tol must be positive");
  family.validate();
  QuadraticNumber max_det(0);
  for (int k = 0; k < family.size(); ++k) {
    QuadraticNumber d = family.det(k).abs();
    if ((d - max_det).sign() > 0) max_det = d;
  }
  // |x^omega - y_n| <= prod|det| / (1 - max|det|); stop once that tail is
  // at most tol/2 (width <= tol) or the determinant product hits zero.
  QuadraticNumber one_minus = QuadraticNumber(1) - max_det;
  QuadraticNumber target = QuadraticNumber(tol) * one_minus * QuadraticNumber(Rational(1, 2));
  QuadraticNumber y(0), det_prod(1);
  for (size_t i = 0; !det_prod.is_zero(); ++i) {
    if ((det_prod.abs() - target).sign() <= 0) break;
    int digit = stream(i);
    if (digit < 0 || digit >= family.size())
      throw std::invalid_argument("stream digit out of range");
    y += family.y[digit] * det_prod;
    det_prod *= family.det(digit);
  }
  QuadraticNumber tail = det_prod.abs() * one_minus.inverse();
  return QuadIntervalClosed{y - tail, y + tail};
}

LambdaSample sample_lambda(const RowStochasticFamily& family, size_t n_samples,
                           int depth, uint64_t seed) {
  if (n_samples < 1) throw std::domain_error("need at least one sample");
  family.validate();
  const int r = family.size();
  std::vector<double> xs(r), ys(r), dets(r);
  double max_det = 0.0;
  for (int k = 0; k < r; ++k) {
    xs[k] = family.x[k].to_double();
    ys[k] = family.y[k].to_double();
    dets[k] = xs[k] - ys[k];
    max_det = std::max(max_det, std::fabs(dets[k]));
  }
  LambdaSample out;
  out.depth = depth;
  out.seed = seed;
  out.truncation_bound =
      max_det >= 1.0 ? 1.0 : std::pow(max_det, depth) / (1.0 - max_det);
  std::vector<double> cum = Rng::cumulative(family.weights);
  Rng rng(seed);
  out.values.resize(n_samples);
  for (size_t s = 0; s < n_samples; ++s) {
    double y = 0.0, det_prod = 1.0;
    for (int i = 0; i < depth && det_prod != 0.0; ++i) {
      int digit = rng.sample(cum);
      y += ys[digit] * det_prod;
      det_prod *= dets[digit];
    }
    out.values[s] = y;
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

ClassifyCertificate classify(const RowStochasticFamily& family) {
  family.validate();
  ClassifyCertificate cert;
  for (int k = 0; k < family.size(); ++k)
    if (family.det(k).is_zero()) {
      cert.kind = LimitLawKind::Discrete;
      cert.noninvertible_index = k;
      return cert;
    }

  mpz_class denom_lcm(1);
  for (const Rational& p : family.weights)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), p.get_den_mpz_t());
  cert.common_denominator = denom_lcm.get_ui();

  bool some_factor_not_one = false;
  QuadraticNumber power(1);
  for (int k = 0; k < family.size(); ++k) {
    QuadraticNumber factor =
        family.det(k).abs() * QuadraticNumber(family.weights[k]).inverse();
    cert.factors.push_back(factor);
    if (factor != QuadraticNumber(1)) some_factor_not_one = true;
    Rational exponent = family.weights[k] * Rational(denom_lcm);  // integer p_k * D
    power *= factor.pow(mpz_class(exponent.get_num()).get_si());
  }
  cert.product_power_D = power;
  cert.product_value =
      std::pow(power.to_double(), 1.0 / static_cast<double>(cert.common_denominator));
  // power > 0 always here (no singular matrix); product in (0,1] iff
  // power <= 1, decided exactly.
  bool in_unit = (power - QuadraticNumber(1)).sign() <= 0;
  cert.kind = (in_unit && some_factor_not_one) ? LimitLawKind::SingularContinuous
                                               : LimitLawKind::Unknown;
  return cert;
}

double ecdf(std::span<const double> sorted, double x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

double ecdf_mass(std::span<const double> sorted, double lo, double hi) {
  if (hi < lo) std::swap(lo, hi);
  return ecdf(sorted, hi) - ecdf(sorted, lo);
}

double ks_distance_to_uniform(std::span<const double> sorted) {
  double ks = 0.0;
  const double n = static_cast<double>(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    double u = std::min(1.0, std::max(0.0, sorted[i]));
    ks = std::max(ks, std::fabs(static_cast<double>(i + 1) / n - u));
    ks = std::max(ks, std::fabs(u - static_cast<double>(i) / n));
  }
  return ks;
}

double selfsim_residual(const RowStochasticFamily& family,
                        std::span<const double> sorted_samples, int bins) {
  family.validate();
  if (bins < 1) throw std::domain_error("need at least one bin");
  for (int k = 0; k < family.size(); ++k)
    if (family.det(k).is_zero())
      throw std::domain_error("selfsimilarity relation needs invertible matrices");

  const int r = family.size();
  std::vector<double> xs(r), ys(r), dets(r), ps(r);
  for (int k = 0; k < r; ++k) {
    xs[k] = family.x[k].to_double();
    ys[k] = family.y[k].to_double();
    dets[k] = xs[k] - ys[k];
    ps[k] = rational_to_double(family.weights[k]);
  }

  // Bin edges at quantiles of the pooled transformed samples, so that no
  // transformed image is starved of data.
  std::vector<double> pooled(sorted_samples.begin(), sorted_samples.end());
  for (int k = 0; k < r; ++k)
    for (double v : sorted_samples) pooled.push_back(v * dets[k] + ys[k]);
  std::sort(pooled.begin(), pooled.end());
  std::vector<double> edges;
  edges.push_back(0.0);
  for (int b = 1; b < bins; ++b) {
    size_t idx = pooled.size() * static_cast<size_t>(b) / static_cast<size_t>(bins);
    double e = pooled[std::min(idx, pooled.size() - 1)];
    if (e > edges.back()) edges.push_back(e);
  }
  edges.push_back(std::nextafter(1.0, 2.0));

  double residual = 0.0;
  for (size_t b = 0; b + 1 < edges.size(); ++b) {
    double lo = edges[b], hi = edges[b + 1];
    double lhs = ecdf_mass(sorted_samples, lo, hi);
    double rhs = 0.0;
    for (int k = 0; k < r; ++k)
      rhs += ps[k] * ecdf_mass(sorted_samples, (lo - ys[k]) / dets[k],
                               (hi - ys[k]) / dets[k]);
    residual = std::max(residual, std::fabs(lhs - rhs));
  }
  return residual;
}

}  // namespace gibbsnum

#include "gibbsnum/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gibbsnum/gibbs.hpp"
#include "gibbsnum/rng.hpp"
#include "gibbsnum/stochlimit.hpp"

namespace gibbsnum {

namespace {
const QuadraticNumber kBeta = QuadraticNumber::golden_beta();

RatMatrix from_rows(std::array<std::array<Rational, 3>, 3> rows) {
  RatMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::array<Rational, 3> mat_apply3(const RatMatrix& m, const std::array<Rational, 3>& v) {
  std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}
}  // namespace

void GoldenParams::validate() const {
  if (sgn(p) <= 0 || sgn(q) <= 0) throw std::domain_error("p, q must be positive");
  if (p + q != 1) throw std::domain_error("p + q must equal 1");
}

std::array<Rational, 3> mu_initial_vector(const GoldenParams& params) {
  params.validate();
  Rational den = params.p + params.q * params.q;
  return {params.p / den, params.q * params.q / den, params.q / den};
}

std::array<Rational, 3> mustar_initial_vector(const GoldenParams& params) {
  params.validate();
  Rational den = 1 + params.q;
  return {Rational(1), params.q / den, 1 / den};
}

RatMatrix mu_matrix(const GoldenParams& params, int digit) {
  params.validate();
  const Rational &p = params.p, &q = params.q;
  const Rational zero(0);
  if (digit == 0)
    return from_rows({{{p, zero, zero}, {zero, zero, q}, {q, p, zero}}});
  if (digit == 1)
    return from_rows({{{q, p, zero}, {zero, zero, zero}, {zero, q, zero}}});
  throw std::invalid_argument("digit must be 0 or 1");
}

RatMatrix mustar_matrix(const GoldenParams& params, int digit) {
  params.validate();
  const Rational &p = params.p, &q = params.q;
  const Rational zero(0);
  if (digit == 0)
    return from_rows({{{p, q, zero}, {zero, zero, q}, {zero, p, zero}}});
  if (digit == 1)
    return from_rows({{{q, zero, zero}, {zero, zero, zero}, {p, q, zero}}});
  throw std::invalid_argument("digit must be 0 or 1");
}

namespace {

CylinderVector cylinder_vector_impl(const GoldenParams& params, std::span<const int> w,
                                    bool mustar) {
  if (auto r = is_admissible(w); !r.admissible)
    throw std::invalid_argument("word contains the forbidden factor 11");
  auto matrix = [&](int d) {
    return mustar ? mustar_matrix(params, d) : mu_matrix(params, d);
  };
  std::array<Rational, 3> v =
      mustar ? mustar_initial_vector(params) : mu_initial_vector(params);
  CylinderVector out;
  if (!w.empty() && w[w.size() - 1] == 1) {
    // The display needs a trailing 0; use mu[[w1]] = mu[[w]] - mu[[w0]]
    // componentwise (the cylinder splits into the w0 and w1 children).
    std::vector<int> base(w.begin(), w.end() - 1);
    CylinderVector whole = cylinder_vector_impl(params, base, mustar);
    base.push_back(0);
    CylinderVector child0 = cylinder_vector_impl(params, base, mustar);
    for (int i = 0; i < 3; ++i) out.v[i] = whole.v[i] - child0.v[i];
    out.derived_from_additivity = true;
    return out;
  }
  for (size_t i = w.size(); i-- > 0;) v = mat_apply3(matrix(w[i]), v);
  out.v = v;
  return out;
}

}  // namespace

CylinderVector mu_cylinder_vector(const GoldenParams& params, std::span<const int> w) {
  return cylinder_vector_impl(params, w, false);
}

CylinderVector mustar_cylinder_vector(const GoldenParams& params,
                                      std::span<const int> w) {
  return cylinder_vector_impl(params, w, true);
}

std::array<RatMatrix, 3> code_matrices(const GoldenParams& params) {
  RatMatrix a0 = mustar_matrix(params, 0);
  RatMatrix a1 = mustar_matrix(params, 1);
  return {a0 * a0, a0 * a1 * a0, a1 * a0};
}

Rational cf_u(long n, const Rational& x) {
  if (n < 0) throw std::domain_error("u_n needs n >= 0");
  Rational sum(0);
  Rational power = 1 / x;  // x^-1
  for (long j = -1; j <= n - 2; ++j) {
    sum += power;
    power *= x;
  }
  return sum;
}

Rational cf_v(long n, const Rational& x) { return pow_rational(x, n); }

RatMatrix code_matrix_power(const GoldenParams& params, int which, long n) {
  params.validate();
  if (n < 1) throw std::domain_error("code_matrix_power needs n >= 1");
  Rational alpha = params.alpha();
  Rational pq = params.p * params.q;
  Rational scale = pow_rational(pq, n);
  const Rational zero(0), one(1);
  RatMatrix m(3, 3);
  if (which == 0) {
    Rational u = cf_u(n, alpha), v = cf_v(n, alpha);
    m = from_rows({{{v, alpha * u, u}, {zero, one, zero}, {zero, zero, one}}});
  } else if (which == 2) {
    Rational inv_alpha = 1 / alpha;
    Rational u = cf_u(n, inv_alpha), v = cf_v(n, inv_alpha);
    m = from_rows(
        {{{one, inv_alpha, zero}, {zero, zero, zero}, {u, u * inv_alpha, v}}});
  } else {
    throw std::invalid_argument("closed-form powers exist for code matrices 0 and 2 only");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) *= scale;
  return m;
}

std::vector<CFState> cf_convergents(std::span<const long> a, const Rational& alpha) {
  if (a.empty()) throw std::invalid_argument("need at least a_0");
  if (sgn(alpha) <= 0) throw std::domain_error("alpha must be positive");
  if (a[0] < 0) throw std::domain_error("a_0 must be >= 0");
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] <= 0) throw std::domain_error("a_i must be positive for i >= 1");

  Rational inv_alpha = 1 / alpha;
  auto u_at = [&](size_t i) { return cf_u(a[i], i % 2 == 0 ? alpha : inv_alpha); };
  auto v_at = [&](size_t i) { return cf_v(a[i], i % 2 == 0 ? alpha : inv_alpha); };

  std::vector<CFState> states;
  Rational p_mm(1), q_mm(0);  // (p_-1, q_-1)
  Rational p_m = u_at(0), q_m(1);
  {
    CFState s;
    s.k = 0;
    s.p_k = p_m;
    s.q_k = q_m;
    s.p_prev = p_mm;
    s.q_prev = q_mm;
    s.u_k = u_at(0);
    s.v_k = v_at(0);
    states.push_back(s);
  }
  for (size_t k = 1; k < a.size(); ++k) {
    Rational u = u_at(k), v_prev = v_at(k - 1);
    Rational p_k = u * p_m + v_prev * p_mm;
    Rational q_k = u * q_m + v_prev * q_mm;
    if (sgn(q_k) <= 0) throw std::logic_error("q_k must stay positive");
    CFState s;
    s.k = static_cast<long>(k);
    s.p_k = p_k;
    s.q_k = q_k;
    s.p_prev = p_m;
    s.q_prev = q_m;
    s.u_k = u;
    s.v_k = v_at(k);
    if (sgn(q_m) > 0) {
      Rational d = p_k / q_k - p_m / q_m;
      s.delta = sgn(d) < 0 ? -d : d;
    }
    states.push_back(s);
    p_mm = p_m;
    q_mm = q_m;
    p_m = p_k;
    q_m = q_k;
  }
  return states;
}

namespace {

// delta <= alpha^(e/2) decided exactly: both sides nonnegative, compare
// delta^2 against alpha^e.
bool le_alpha_half_power(const Rational& delta, const Rational& alpha, long e) {
  return delta * delta <= pow_rational(alpha, e);
}

}  // namespace

DeltaBoundsReport delta_bounds_check(std::span<const long> a, const Rational& alpha) {
  if (alpha <= 1) throw std::domain_error("the bounds require alpha > 1");
  auto states = cf_convergents(a, alpha);
  DeltaBoundsReport report;
  Rational prev_delta;
  bool have_prev = false;
  Rational a_sum(0);  // a_1 + ... + a_k
  for (size_t k = 1; k < states.size(); ++k) {
    const CFState& s = states[k];
    a_sum += Rational(a[k]);
    if (!s.delta) continue;
    DeltaBoundEntry entry;
    entry.k = s.k;
    entry.delta = *s.delta;
    if (have_prev) {
      const CFState& t = states[k - 1];
      entry.holds_i =
          *s.delta * (s.u_k * t.u_k + t.v_k) <= t.v_k * prev_delta;
      if (k % 2 == 0)
        entry.holds_ii =
            *s.delta <= pow_rational(alpha, 1 - (a[k - 1] + a[k])) * prev_delta;
      if (*s.delta > prev_delta) report.deltas_nonincreasing = false;
    }
    if (k % 2 == 0) {
      // delta_k <= alpha^(a_0 - (a_1+...+a_k)/2)
      long e = 2 * a[0] - mpz_class(a_sum.get_num()).get_si();
      entry.holds_iii = le_alpha_half_power(*s.delta, alpha, e);
    }
    entry.holds_corollary =
        le_alpha_half_power(*s.delta, alpha, 2 * a[0] - (s.k - 1));
    if (!(entry.holds_i && entry.holds_ii && entry.holds_iii && entry.holds_corollary))
      report.all_hold = false;
    report.entries.push_back(entry);
    prev_delta = *s.delta;
    have_prev = true;
  }
  return report;
}

double phi_n_golden(const GoldenParams& params, std::span<const int> code) {
  if (code.empty()) throw std::invalid_argument("phi_n needs a nonempty code");
  auto as = code_matrices(params);
  for (int c : code)
    if (c < 0 || c > 2) throw std::invalid_argument("code digit out of range");
  std::array<Rational, 3> init = mustar_initial_vector(params);
  std::vector<Rational> num_row = {Rational(1), Rational(0), Rational(0)};
  std::vector<Rational> den_row = num_row;
  for (size_t i = 0; i < code.size(); ++i) {
    num_row = vec_mat(num_row, as[code[i]]);
    if (i >= 1) den_row = vec_mat(den_row, as[code[i]]);
  }
  std::span<const Rational> init_span(init.data(), 3);
  Rational num = dot(num_row, init_span);
  Rational den = dot(den_row, init_span);
  if (sgn(den) == 0) throw CylinderMeasureZero("cylinder has measure zero");
  if (sgn(num) == 0) return -std::numeric_limits<double>::infinity();
  return log_rational(num) - log_rational(den);
}

std::vector<double> phi_sequence_golden(const GoldenParams& params,
                                        std::span<const int> code, int n_max) {
  if (static_cast<size_t>(n_max) > code.size())
    throw std::invalid_argument("code shorter than n_max");
  auto as = code_matrices(params);
  std::array<Rational, 3> init = mustar_initial_vector(params);
  std::span<const Rational> init_span(init.data(), 3);
  std::vector<Rational> num_row = {Rational(1), Rational(0), Rational(0)};
  std::vector<Rational> den_row = num_row;
  std::vector<double> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    num_row = vec_mat(num_row, as[code[n - 1]]);
    if (n >= 2) den_row = vec_mat(den_row, as[code[n - 1]]);
    Rational num = dot(num_row, init_span);
    Rational den = dot(den_row, init_span);
    if (sgn(den) == 0) throw CylinderMeasureZero("cylinder has measure zero");
    out.push_back(sgn(num) == 0 ? -std::numeric_limits<double>::infinity()
                                : log_rational(num) - log_rational(den));
  }
  return out;
}

TailClassification classify_ternary_tail(std::span<const int> prefix) {
  for (int c : prefix)
    if (c < 0 || c > 2) throw std::invalid_argument("code digit out of range");
  // rank-one pattern: a digit in {1,2}, then zeros, then a 1.
  std::optional<size_t> last_nonzero;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 0) continue;
    if (prefix[i] == 1 && last_nonzero &&
        (prefix[*last_nonzero] == 1 || prefix[*last_nonzero] == 2)) {
      TailClassification res;
      res.kind = TailCase::RankOnePattern;
      res.decided = true;
      res.N = *last_nonzero;
      res.n = i - *last_nonzero + 1;
      return res;
    }
    last_nonzero = i;
  }
  TailClassification res;
  if (prefix.empty()) return res;
  // Tail after the last 1 (whole prefix when no 1 occurs).
  size_t tail_start = 0;
  for (size_t i = prefix.size(); i-- > 0;)
    if (prefix[i] == 1) {
      tail_start = i + 1;
      break;
    }
  bool has_two = false;
  for (size_t i = tail_start; i < prefix.size(); ++i)
    if (prefix[i] == 2) has_two = true;
  if (tail_start == prefix.size()) return res;  // ends at a 1: undetermined
  res.N = tail_start;
  res.n = prefix.size() - tail_start;
  res.kind = has_two ? TailCase::ZeroTwoBlocks : TailCase::AllZeros;
  return res;
}

QuadInterval golden_set_interval(const GoldenSetSpec& set) {
  if (set.row < 0 || set.row > 2) throw std::invalid_argument("row must be 0, 1 or 2");
  QuadraticNumber inv_beta = kBeta.pow(-1), inv_beta2 = kBeta.pow(-2);
  if (set.target == GoldenTarget::Mu) {
    QuadInterval base = parry_cylinder(set.word);
    QuadraticNumber offsets[3] = {QuadraticNumber(0), inv_beta, inv_beta2};
    return QuadInterval{base.lo * inv_beta + offsets[set.row],
                        base.hi * inv_beta + offsets[set.row]};
  }
  QuadInterval base = neg_beta_cylinder(set.word);
  QuadraticNumber offsets[3] = {QuadraticNumber(0), -inv_beta, inv_beta2};
  return QuadInterval{base.lo + offsets[set.row], base.hi + offsets[set.row]};
}

GoldenSampler GoldenSampler::draw(const GoldenParams& params, GoldenTarget target,
                                  size_t n_samples, int depth, uint64_t seed) {
  params.validate();
  if (n_samples < 1) throw std::domain_error("need at least one sample");
  if (depth < 4) throw std::domain_error("depth must be >= 4");
  GoldenSampler out;
  const double beta = kBeta.to_double();
  out.band_ = std::pow(beta, -(depth - 2));
  double pd = rational_to_double(params.p);
  Rng rng(seed);
  out.values_.resize(n_samples);
  if (target == GoldenTarget::Mu) {
    // X = sum w_n beta^-(n+1)
    for (size_t s = 0; s < n_samples; ++s) {
      double x = 0.0, scale = 1.0 / beta;
      for (int n = 1; n <= depth; ++n) {
        scale /= beta;
        if (rng.uniform01() >= pd) x += scale;  // digit 1 with probability q
      }
      out.values_[s] = x;
    }
  } else {
    // Y = 1/beta - sum w_n (-beta)^-(n+1)
    for (size_t s = 0; s < n_samples; ++s) {
      double y = 1.0 / beta, scale = -1.0 / beta;
      for (int n = 1; n <= depth; ++n) {
        scale /= -beta;
        if (rng.uniform01() >= pd) y -= scale;
      }
      out.values_[s] = y;
    }
  }
  std::sort(out.values_.begin(), out.values_.end());
  return out;
}

McEstimate GoldenSampler::set_mass(const QuadInterval& set) const {
  double lo = set.lo.to_double(), hi = set.hi.to_double();
  std::span<const double> v(values_);
  double hits = ecdf_mass(v, lo, hi) * static_cast<double>(values_.size());
  double banded = 0.0;
  for (double edge : {lo, hi})
    banded += (ecdf(v, edge + band_) - ecdf(v, edge - band_)) *
              static_cast<double>(values_.size());
  McEstimate est;
  est.n_samples = values_.size();
  est.estimate = hits / static_cast<double>(values_.size());
  est.band_mass = banded / static_cast<double>(values_.size());
  est.sigma = std::sqrt(std::max(est.estimate * (1.0 - est.estimate), 1e-12) /
                        static_cast<double>(values_.size()));
  return est;
}

McEstimate golden_mc_oracle(const GoldenParams& params, const GoldenSetSpec& set,
                            size_t n_samples, int depth, uint64_t seed) {
  GoldenSampler sampler = GoldenSampler::draw(params, set.target, n_samples, depth, seed);
  return sampler.set_mass(golden_set_interval(set));
}

}  // namespace gibbsnum

#include "gibbsnum/matmeasure.hpp"

#include <stdexcept>

namespace gibbsnum {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.m_.size(); ++i) c.m_[i] = a.m_[i] + b.m_[i];
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
}

RatMatrix RatMatrix::pow(long n) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  if (n < 0) throw std::invalid_argument("negative matrix power");
  RatMatrix result = identity(rows_);
  RatMatrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

int RatMatrix::rank() const {
  RatMatrix work = *this;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i)
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(work.at(row, j), work.at(pivot, j));
    for (int i = row + 1; i < rows_; ++i) {
      if (work.at(i, col) == 0) continue;
      Rational f = work.at(i, col) / work.at(row, col);
      for (int j = col; j < cols_; ++j) work.at(i, j) -= f * work.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool RatMatrix::nonnegative() const {
  for (const Rational& x : m_)
    if (sgn(x) < 0) return false;
  return true;
}

std::vector<Rational> mat_vec(const RatMatrix& m, std::span<const Rational> v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<Rational> vec_mat(std::span<const Rational> v, const RatMatrix& m) {
  if (m.rows() != static_cast<int>(v.size()))
    throw std::invalid_argument("vector/matrix shape mismatch");
  std::vector<Rational> out(m.cols(), Rational(0));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) out[j] += v[i] * m.at(i, j);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Rational out(0);
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

ValidationReport validate(const MatrixMeasureSpec& spec) {
  ValidationReport report;
  const int d = spec.dim;
  if (d < 1) {
    report.failures.push_back("dim must be >= 1");
    return report;
  }
  if (static_cast<int>(spec.L.size()) != d || static_cast<int>(spec.V.size()) != d) {
    report.failures.push_back("L/V length does not match dim");
    return report;
  }
  for (const Rational& x : spec.L)
    if (sgn(x) < 0) report.failures.push_back("L has a negative entry");
  for (const Rational& x : spec.V)
    if (sgn(x) <= 0) report.failures.push_back("V has a nonpositive entry");
  for (size_t k = 0; k < spec.matrices.size(); ++k) {
    const RatMatrix& m = spec.matrices[k];
    if (m.rows() != d || m.cols() != d) {
      report.failures.push_back("matrix " + std::to_string(k) + " has wrong shape");
      return report;
    }
    if (!m.nonnegative())
      report.failures.push_back("matrix " + std::to_string(k) + " has a negative entry");
  }
  if (dot(spec.L, spec.V) != 1) report.failures.push_back("L V != 1");
  if (!spec.matrices.empty()) {
    RatMatrix sum = spec.matrices[0];
    for (size_t k = 1; k < spec.matrices.size(); ++k) sum = sum + spec.matrices[k];
    if (mat_vec(sum, spec.V) != spec.V)
      report.failures.push_back("sum_k M_k V != V (Kolmogorov consistency)");
  }
  if (d == 2) {
    for (size_t k = 0; k < spec.matrices.size(); ++k) {
      const RatMatrix& m = spec.matrices[k];
      for (int j = 0; j < 2; ++j)
        if (m.at(0, j) == 0 && m.at(1, j) == 0)
          report.failures.push_back("matrix " + std::to_string(k) + " has a zero column");
    }
  }
  return report;
}

Rational cylinder_measure(const MatrixMeasureSpec& spec, std::span<const int> word) {
  std::vector<Rational> row = spec.L;
  for (int digit : word) {
    if (digit < 0 || digit >= spec.alphabet_size())
      throw std::invalid_argument("word digit out of range");
    row = vec_mat(row, spec.matrices[digit]);
  }
  return dot(row, spec.V);
}

MatrixMeasureSpec bernoulli_spec(std::vector<Rational> p) {
  if (p.empty()) throw std::domain_error("bernoulli needs at least one weight");
  Rational total(0);
  for (const Rational& x : p) {
    if (sgn(x) <= 0) throw std::domain_error("bernoulli weights must be positive");
    total += x;
  }
  if (total != 1) throw std::domain_error("bernoulli weights must sum to 1");
  MatrixMeasureSpec spec;
  spec.dim = 1;
  spec.L = {Rational(1)};
  spec.V = {Rational(1)};
  for (const Rational& x : p) {
    RatMatrix m(1, 1);
    m.at(0, 0) = x;
    spec.matrices.push_back(m);
  }
  return spec;
}

MatrixMeasureSpec markov_spec(const RatMatrix& P, std::vector<Rational> pi) {
  const int r = P.rows();
  if (P.cols() != r || static_cast<int>(pi.size()) != r)
    throw std::domain_error("markov needs a square P and matching pi");
  Rational total(0);
  for (const Rational& x : pi) {
    if (sgn(x) <= 0) throw std::domain_error("pi entries must be positive");
    total += x;
  }
  if (total != 1) throw std::domain_error("pi must sum to 1");
  for (int i = 0; i < r; ++i) {
    Rational row_sum(0);
    for (int j = 0; j < r; ++j) {
      if (sgn(P.at(i, j)) < 0) throw std::domain_error("P entries must be nonnegative");
      row_sum += P.at(i, j);
    }
    if (row_sum != 1) throw std::domain_error("P rows must sum to 1");
  }
  // (M_k)_{ij} = [i == k] P_{k j}; then L M_{w_1}..M_{w_n} V telescopes to
  // pi_{w_1} P_{w_1 w_2} ... P_{w_{n-1} w_n} with V = (1,..,1)^T.
  MatrixMeasureSpec spec;
  spec.dim = r;
  spec.L = std::move(pi);
  spec.V.assign(r, Rational(1));
  for (int k = 0; k < r; ++k) {
    RatMatrix m(r, r);
    for (int j = 0; j < r; ++j) m.at(k, j) = P.at(k, j);
    spec.matrices.push_back(m);
  }
  return spec;
}

MatrixMeasureSpec mu3_spec(int r) {
  if (r < 2) throw std::domain_error("mu3 needs r >= 2");
  MatrixMeasureSpec spec;
  spec.dim = 2;
  spec.L = {Rational(1, 2), Rational(1, 2)};
  spec.V = {Rational(1), Rational(1)};
  Rational scale(1, 2 * r);
  scale.canonicalize();
  for (int w = 0; w < r; ++w) {
    Rational w_prime = 1 + Rational(2 * w, r - 1);
    w_prime.canonicalize();
    RatMatrix m(2, 2);
    m.at(0, 0) = w_prime * scale;
    m.at(1, 0) = scale;
    m.at(1, 1) = scale;
    spec.matrices.push_back(m);
  }
  return spec;
}

MatrixMeasureSpec mu4_spec() {
  MatrixMeasureSpec spec;
  spec.dim = 2;
  spec.L = {Rational(1, 2), Rational(1, 2)};
  spec.V = {Rational(1), Rational(1)};
  RatMatrix m0(2, 2), m1(2, 2);
  m0.at(1, 0) = Rational(1, 4);
  m0.at(1, 1) = Rational(1, 4);
  m1.at(0, 0) = Rational(1);
  m1.at(1, 0) = Rational(1, 4);
  m1.at(1, 1) = Rational(1, 4);
  spec.matrices = {m0, m1};
  return spec;
}

bool is_right_eigenvector(const RatMatrix& m, std::span<const Rational> v) {
  std::vector<Rational> mv = mat_vec(m, v);
  return mv[0] * v[1] == mv[1] * v[0];
}

bool is_left_eigenvector(std::span<const Rational> v, const RatMatrix& m) {
  std::vector<Rational> vm = vec_mat(v, m);
  return vm[0] * v[1] == vm[1] * v[0];
}

ConditionReport direction_conditions(const std::vector<RatMatrix>& matrices,
                                     std::span<const Rational> V) {
  if (V.size() != 2) throw std::domain_error("direction conditions need dim 2");
  for (const RatMatrix& m : matrices) {
    if (m.rows() != 2 || m.cols() != 2)
      throw std::domain_error("direction conditions need 2x2 matrices");
    if (!m.nonnegative()) throw std::domain_error("matrices must be nonnegative");
    for (int j = 0; j < 2; ++j)
      if (m.at(0, j) == 0 && m.at(1, j) == 0)
        throw std::domain_error("matrix has a zero column");
  }

  ConditionReport report;
  const int r = static_cast<int>(matrices.size());
  for (int k = 0; k < r; ++k) {
    if (matrices[k].at(0, 0) == 0) report.set_m1.push_back(k);
    if (matrices[k].at(1, 1) == 0) report.set_m4.push_back(k);
  }

  bool m2_a_gt_d = false, m2_a_le_d = false;
  bool m3_a_lt_d = false, m3_a_ge_d = false;
  bool m2_isect_m3 = false;
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      RatMatrix prod = matrices[k] * matrices[l];
      const Rational &a = prod.at(0, 0), &b = prod.at(0, 1);
      const Rational &c = prod.at(1, 0), &d = prod.at(1, 1);
      bool in_m2 = b == 0, in_m3 = c == 0;
      if (in_m2) {
        report.set_m2.emplace_back(k, l);
        if (a > d) m2_a_gt_d = true;
        if (a <= d) m2_a_le_d = true;
      }
      if (in_m3) {
        report.set_m3.emplace_back(k, l);
        if (a < d) m3_a_lt_d = true;
        if (a >= d) m3_a_ge_d = true;
      }
      if (in_m2 && in_m3) m2_isect_m3 = true;
    }

  bool m1_empty = report.set_m1.empty();
  bool m4_empty = report.set_m4.empty();
  report.cond[0] = !m2_a_gt_d && !m3_a_lt_d && !m2_isect_m3;
  report.cond[1] = !m2_a_le_d && !m3_a_ge_d;
  report.cond[2] = !m2_a_le_d && !m3_a_lt_d && m1_empty;
  report.cond[3] = !m2_a_gt_d && !m3_a_ge_d && m4_empty;
  report.cond[4] = true;
  for (const RatMatrix& m : matrices)
    if (!is_right_eigenvector(m, V)) {
      report.cond[4] = false;
      break;
    }
  return report;
}

ContinuityResult potential_continuity(const MatrixMeasureSpec& spec) {
  if (spec.dim != 2) throw std::domain_error("potential_continuity needs dim 2");
  ContinuityResult result;
  result.directions = direction_conditions(spec.matrices, spec.V);
  result.cond_vi = true;
  for (const RatMatrix& m : spec.matrices)
    if (!is_left_eigenvector(spec.L, m)) {
      result.cond_vi = false;
      break;
    }
  static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
  for (int i = 0; i < 5; ++i)
    if (result.directions.cond[i]) {
      result.continuous = true;
      result.which = names[i];
      return result;
    }
  if (result.cond_vi) {
    result.continuous = true;
    result.which = "vi";
  }
  return result;
}

}  // namespace gibbsnum

#ifndef GIBBSNUM_MATMEASURE_HPP
#define GIBBSNUM_MATMEASURE_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gibbsnum/rational.hpp"

namespace gibbsnum {

// Dense matrix with exact rational entries (small dimensions only).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), m_(rows * cols, Rational(0)) {}
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return m_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return m_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  RatMatrix pow(long n) const;
  int rank() const;  // exact Gaussian elimination
  bool nonnegative() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> m_;
};

std::vector<Rational> mat_vec(const RatMatrix& m, std::span<const Rational> v);
std::vector<Rational> vec_mat(std::span<const Rational> v, const RatMatrix& m);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Measure on {0,...,r-1}^N given by eta[w_1...w_n] = L M_{w_1}...M_{w_n} V.
// Kolmogorov consistency (sum_k M_k V = V together with L V = 1) makes eta a
// probability measure.
struct MatrixMeasureSpec {
  int dim = 0;
  std::vector<Rational> L;        // nonnegative row vector
  std::vector<RatMatrix> matrices;  // one d x d nonnegative matrix per digit
  std::vector<Rational> V;        // positive column vector

  int alphabet_size() const { return static_cast<int>(matrices.size()); }
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks L V = 1, sum_k M_k V = V, nonnegativity and (for d = 2) nonzero
// matrix columns. Exact equality; reports itemized failures, never throws.
ValidationReport validate(const MatrixMeasureSpec& spec);

// Exact L M_{w_1} ... M_{w_n} V; the empty word gives L V = 1.
Rational cylinder_measure(const MatrixMeasureSpec& spec, std::span<const int> word);

MatrixMeasureSpec bernoulli_spec(std::vector<Rational> p);
// mu_2[w] = pi_{w_1} P_{w_1 w_2} ... P_{w_{n-1} w_n}.
MatrixMeasureSpec markov_spec(const RatMatrix& P, std::vector<Rational> pi);
// Example measure with M_w = (1/(2r)) [[w', 0], [1, 1]], w' = 1 + 2w/(r-1);
// the 1/(2 (2r)^n) prefactor is folded into L and the matrices.
MatrixMeasureSpec mu3_spec(int r);
// Example measure with M_0 = (1/4)[[0,0],[1,1]], M_1 = (1/4)[[4,0],[1,1]].
MatrixMeasureSpec mu4_spec();

// Decidable conditions for uniform convergence in direction of
// n -> M_{w_1}...M_{w_n} V / ||.||, for a set of nonnegative 2x2 matrices
// with nonzero columns. The derived sets:
//   M1 = {M in M   : a = 0},      M2 = {N in M^2 : b = 0},
//   M3 = {N in M^2 : c = 0},      M4 = {M in M   : d = 0},
// where a,b,c,d are the entries [[a,b],[c,d]] of the element itself.
struct ConditionReport {
  bool cond[5] = {false, false, false, false, false};  // (i)..(v)
  std::vector<int> set_m1, set_m4;                     // indices into input
  std::vector<std::pair<int, int>> set_m2, set_m3;     // ordered index pairs
  bool any() const {
    return cond[0] || cond[1] || cond[2] || cond[3] || cond[4];
  }
};

ConditionReport direction_conditions(const std::vector<RatMatrix>& matrices,
                                     std::span<const Rational> V);

// phi_eta exists and is continuous iff one of (i)..(v) holds or (vi): L is a
// common left eigenvector.
struct ContinuityResult {
  bool continuous = false;
  std::string which;  // "i".."v", "vi" or ""
  ConditionReport directions;
  bool cond_vi = false;
};

ContinuityResult potential_continuity(const MatrixMeasureSpec& spec);

// Exact proportionality test M v ~ v (cross product zero).
bool is_right_eigenvector(const RatMatrix& m, std::span<const Rational> v);
bool is_left_eigenvector(std::span<const Rational> v, const RatMatrix& m);

}  // namespace gibbsnum

#endif

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rmf/liecore.hpp"

namespace rmf {

/// Element of sl_n (x) sl_n with exact rational-function coefficients over the
/// basis of LieAlgSL.  Spectral inputs use Var::z on leg 1 and Var::t on leg 2;
/// constant tensors simply carry variable-free coefficients.
class Tensor2 {
 public:
  explicit Tensor2(int n);

  int n() const { return n_; }
  const LieAlgSL& alg() const { return build_sl(n_); }

  /// Accumulate coeff onto component (a, b); zero results are dropped.
  void add(int a, int b, const RatFun& coeff);
  const std::map<std::pair<int, int>, RatFun>& terms() const { return c_; }
  const RatFun& coeff(int a, int b) const;

  bool is_zero() const { return c_.empty(); }
  size_t term_count() const { return c_.size(); }

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 scale(const RatFun& s) const;

  /// Swap the tensor legs and exchange z <-> t in every coefficient.
  Tensor2 flip() const;

  /// Exact equality (component-wise RatFun equality).
  friend bool operator==(const Tensor2& a, const Tensor2& b);

  /// Substitute concrete values for spectral variables (absent vars ignored).
  Tensor2 substitute(const std::map<Var, Rational>& point) const;

  /// Image under the fundamental representation on both legs: an n^2 x n^2
  /// matrix with composite row index i1*n + i2.
  Matrix<RatFun> rep_matrix() const;

  std::string str() const;

 private:
  int n_;
  std::map<std::pair<int, int>, RatFun> c_;
};

/// Element of the triple tensor power with coefficients in {z1, z2, z3}.
class Tensor3 {
 public:
  explicit Tensor3(int n);

  int n() const { return n_; }
  void add(int a, int b, int c, const RatFun& coeff);
  const std::map<std::tuple<int, int, int>, RatFun>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  size_t term_count() const { return c_.size(); }
  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n_ == b.n_ && (a - b).is_zero();
  }
  std::string str() const;

 private:
  int n_;
  std::map<std::tuple<int, int, int>, RatFun> c_;
};

/// Quadratic Casimir element over dual bases of the trace form:
/// sum_{i != j} E_ij (x) E_ji + sum_{kl} (A^{-1})_{kl} h_k (x) h_l.
Tensor2 casimir(int n);
/// Its Cartan (h (x) h) block alone.
Tensor2 casimir_cartan_part(int n);

/// Inclusion of a Cartan tensor as a Tensor2.
Tensor2 cartan_to_tensor2(const CartanTensor& t);

/// Constant tensor from two basis matrices (each must decompose in sl_n).
Tensor2 simple_tensor(int n, const Matrix<Rational>& x, const Matrix<Rational>& y,
                      const RatFun& coeff);

/// SK(a (x) b) = a (x) b - b (x) a, extended linearly; on spectral input the
/// flip also exchanges z and t, so SK(z a(x)b) = z a(x)b - t b(x)a.
Tensor2 sk(const Tensor2& t);

/// Left side of the classical Yang-Baxter identity for r = r(z, t):
/// [r12, r13] + [r12, r23] + [r13, r23] with the leg embeddings carrying
/// (z1,z2), (z1,z3), (z2,z3).  Exact; zero iff r solves the equation.
Tensor3 cybe_residual(const Tensor2& r);

/// r + flip(r) - Casimir.  Zero for quasi-triangular constant solutions;
/// for spectral input the caller compares against 0 or -Casimir to decide
/// which normalization the input obeys (see unitarity_convention).
Tensor2 unitarity_residual(const Tensor2& r);

/// Which identity the input satisfies: "omega" if r + flip(r) = Casimir,
/// "skew" if r + flip(r) = 0, "none" otherwise.
std::string unitarity_convention(const Tensor2& r);

/// Lie cobracket of the polynomial map a against a quasi-trigonometric X:
/// delta(a) = [X(z,t), a(t) (x) 1 + 1 (x) a(z)].  The argument is a basis
/// coefficient vector with entries polynomial in Var::t.  The (z - t) pole
/// must cancel; a surviving pole raises IntegrityError.
Tensor2 cobracket(const Tensor2& X, const std::vector<RatFun>& a);

/// Adjoint action [x (x) 1 + 1 (x) x, t] of a constant basis element.
Tensor2 ad_action(int basis_idx, const Tensor2& t);

/// JSON forms: list of {legs: [[i,j],...], coeff: {num, den}} with matrix
/// units as [i,j] (i != j) and Cartan h_k as [k,k]; entries sorted by legs.
std::string tensor2_json(const Tensor2& t);
std::string tensor3_json(const Tensor3& t);

}  // namespace rmf

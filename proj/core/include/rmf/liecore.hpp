#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rmf/matrix.hpp"
#include "rmf/ratfun.hpp"

namespace rmf {

/// Loop variable used by the loop realization of the affine algebra.
inline constexpr Var kLoopVar = Var::u1;

/// A positive root of type A_{n-1}, stored as the interval (i, j) with
/// 1 <= i < j <= n, standing for alpha_i + ... + alpha_{j-1}.  The raising
/// root vector is the matrix unit E_{ij}, the lowering one E_{ji}.
struct RootA {
  int i = 0;
  int j = 0;

  RootA() = default;
  RootA(int i_, int j_) : i(i_), j(j_) {}
  static RootA simple(int k) { return RootA(k, k + 1); }

  bool is_simple() const { return j == i + 1; }
  int height() const { return j - i; }

  friend bool operator==(const RootA& a, const RootA& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const RootA& a, const RootA& b) { return !(a == b); }
  friend bool operator<(const RootA& a, const RootA& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }

  /// Interval vector in simple-root coordinates: 1 at positions i..j-1.
  std::vector<int> interval_vector(int n) const;
  /// Inverse of interval_vector.  DomainError if v is not an interval.
  static RootA from_interval_vector(const std::vector<int>& v);

  std::string str() const;
};

/// Root data of A_{n-1}, optionally extended to the affine diagram.
/// The affine Cartan matrix is indexed 0..n-1 with cyclic adjacency and
/// requires n >= 3 (so that off-diagonal entries stay in {0, -1}).
struct RootSystemA {
  int n = 0;
  bool affine = false;
  int rank = 0;                          // number of finite simple roots
  Matrix<Rational> cartan;               // rank x rank, or n x n when affine
  std::vector<std::vector<int>> positive_roots;  // interval vectors
  std::vector<std::string> simple_labels;        // "a1".. ("a0" first if affine)

  static RootSystemA build(int n, bool affine);
};

/// The Lie algebra sl_n in its matrix realization, with the basis
///   E_{ij} (i != j, ordered by row then column), then h_1..h_{n-1},
/// the full commutator table, the trace form tr(xy), and root-vector
/// bookkeeping.  Instances are immutable; obtain shared ones via build_sl.
class LieAlgSL {
 public:
  explicit LieAlgSL(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// Index of E_{ij} (1-based matrix positions, i != j).
  int e_index(int i, int j) const;
  /// Index of h_k = E_{kk} - E_{k+1,k+1} (1 <= k <= n-1).
  int h_index(int k) const;
  bool is_cartan_index(int idx) const { return idx >= dim() - (n_ - 1); }

  const Matrix<Rational>& basis_matrix(int idx) const;
  const std::string& basis_name(int idx) const;

  /// [basis a, basis b] expanded in the basis; pairs (index, coefficient).
  const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const;

  /// Expansion of a traceless matrix in the basis (dense coefficient vector).
  std::vector<Rational> decompose(const Matrix<Rational>& m) const;

  /// tr(basis_a * basis_b).
  const Rational& trace_form_basis(int a, int b) const;

  Matrix<Rational> cartan_matrix() const;
  const Matrix<Rational>& cartan_inverse() const;

  const std::vector<RootA>& positive_roots() const { return roots_; }
  bool is_root(const RootA& r) const;

  /// Values alpha(h_k), k = 1..n-1, for the root functional of alpha.
  std::vector<Rational> root_values(const RootA& alpha) const;

  /// Cartan pairing (alpha, beta) = alpha(h_beta) for positive roots.
  Rational root_pairing(const RootA& alpha, const RootA& beta) const;

 private:
  int n_;
  std::vector<Matrix<Rational>> basis_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, int> e_pos_;  // (i,j) -> basis index
  std::vector<RootA> roots_;
  Matrix<Rational> cartan_inv_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table_;
  std::vector<std::vector<Rational>> form_;
};

/// Shared immutable instance for a given n (built on first use).
const LieAlgSL& build_sl(int n);

/// Trace form tr(xy) on square matrices of matching size.
Rational trace_form(const Matrix<Rational>& x, const Matrix<Rational>& y);
RatFun trace_form(const Matrix<RatFun>& x, const Matrix<RatFun>& y);

/// Raising (sign > 0) or lowering (sign < 0) root vector of a positive root
/// given in simple-root coordinates.
Matrix<Rational> root_vector(const LieAlgSL& g, const std::vector<int>& root,
                             int sign);
Matrix<Rational> root_vector(const LieAlgSL& g, const RootA& root, int sign);

/// An element of the loop algebra sl_n[u, 1/u]: a matrix whose entries are
/// Laurent polynomials in the loop variable.  The matrix commutator realizes
/// [x u^a, y u^b] = [x, y] u^{a+b}; the central extension is represented
/// trivially (the degree audit in the embedding verifier justifies this).
using LoopElement = Matrix<RatFun>;

/// Generator images of the loop realization.  Labels: "e1".."e{n-1}",
/// "f1".."f{n-1}", "h1".."h{n-1}" for the finite part and "e0", "f0", "h0"
/// for the affine node (E_{n1} u, E_{1n} u^{-1}, (E_{nn} - E_{11})).
LoopElement loop_realize(int n, const std::string& label);

/// The set of u-degrees with a nonzero matrix coefficient.
std::vector<int> loop_degrees(const LoopElement& x);

/// Lift a constant matrix into the loop algebra, optionally times u^deg.
LoopElement loop_lift(const Matrix<Rational>& m, int deg = 0);

/// Chevalley-Serre relation audit for the finite (loop = false) or loop
/// (loop = true) generators.  Returns human-readable descriptions of every
/// violated relation; empty means all relations hold.
std::vector<std::string> chevalley_relation_failures(int n, bool loop);

/// An element of h tensor h, stored as the (n-1) x (n-1) coefficient matrix c
/// with meaning sum c_{kl} h_k (x) h_l.
struct CartanTensor {
  int n = 0;
  Matrix<Rational> c;

  CartanTensor() = default;
  CartanTensor(int n_, Matrix<Rational> c_);
  static CartanTensor zero(int n);

  CartanTensor transpose() const { return CartanTensor(n, c.transpose()); }
  bool is_symmetric() const { return c == c.transpose(); }

  CartanTensor operator+(const CartanTensor& o) const;
  CartanTensor operator-(const CartanTensor& o) const;
  CartanTensor scale(const Rational& s) const;
  friend bool operator==(const CartanTensor& a, const CartanTensor& b) {
    return a.n == b.n && a.c == b.c;
  }

  /// Concrete matrix sum c_{kl} (pi h_k) x (pi h_l)-free form: the element of
  /// sl_n given by contracting the first leg with the functional phi
  /// (phi given by its values on h_1..h_{n-1}): result_l = sum_k phi_k c_{kl}.
  std::vector<Rational> contract_first(const std::vector<Rational>& phi) const;
  /// Same on the second leg: result_k = sum_l c_{kl} phi_l.
  std::vector<Rational> contract_second(const std::vector<Rational>& phi) const;

  std::string str() const;
};

/// Cartan part of the Casimir element: coefficient matrix = inverse Cartan
/// matrix of A_{n-1}, so that sum (A^{-1})_{kl} h_k (x) h_l pairs dually with
/// the trace form.
CartanTensor cartan_casimir(int n);

}  // namespace rmf

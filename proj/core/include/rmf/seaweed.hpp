#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmf/liecore.hpp"
#include "rmf/matrix.hpp"
#include "rmf/rational.hpp"

namespace rmf {

/// A bracket-closed subalgebra of sl(n) given by an explicit basis of
/// traceless matrices.  Construction verifies closure and stores the exact
/// structure constants.
struct SeaweedAlg {
  int n = 0;
  std::string label;
  std::vector<std::string> names;
  std::vector<Matrix<Rational>> basis;
  /// struct_consts[i][j] lists (k, c) with [b_i, b_j] = sum c * b_k.
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> struct_consts;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Builds a SeaweedAlg from an explicit basis, verifying bracket closure and
/// linear independence.  IntegrityError if a commutator leaves the span;
/// StructuralError if the basis is dependent or shapes disagree.
SeaweedAlg subalgebra_from_basis(int n, const std::vector<std::string>& names,
                                 const std::vector<Matrix<Rational>>& basis,
                                 const std::string& label);

/// Intersection of the two maximal parabolic subalgebras: the matrix unit
/// E_kl (k < l) is dropped when k <= i < l, the unit E_kl (k > l) is dropped
/// when l <= j < k, and the full Cartan h_1..h_{n-1} is kept.
/// pre: 1 <= i, j <= n-1 (DomainError otherwise).
SeaweedAlg build_seaweed(int n, int i, int j);

/// Coefficients of the distinguished element p over h_1..h_{n-1}:
/// p = sum_k ((n - 2k)/n) h_k.
std::vector<Rational> p_element(int n);

/// The restricted algebra: units of build_seaweed(n, 1, n-1), the Cartan
/// elements h_2..h_{n-2}, and p adjoined.  pre: n >= 3.
SeaweedAlg restricted_seaweed(int n);

/// Index of the algebra: dim(a) minus the maximal rank of the antisymmetric
/// matrix M[i][j] = F([b_i, b_j]) over `trials` pseudorandom rational
/// functionals F drawn from `seed`.  The result is an exact upper bound for
/// the true index that stabilizes as trials grow; index 0 certifies that the
/// algebra is Frobenius.
int algebra_index(const SeaweedAlg& a, int trials, unsigned long seed);

/// Generator-by-generator assignment: a labelled source element of sl(5)
/// together with its intended image in the loop algebra of sl(4).
struct EmbeddingMap {
  std::vector<std::string> names;
  std::vector<Matrix<Rational>> source;   // 5x5 traceless
  std::vector<LoopElement> image;         // 4x4 over the loop variable
};

/// The generator assignments of the classical embedding of the restricted
/// sl(5) algebra into the loop algebra of sl(4):
///   p        -> (3/4) h_1 + (1/2) h_2 + (1/4) h_3
///   e_{a4}   -> E_41 * u
///   e_{-a1}  -> E_21
///   e_{a2}   -> E_23,  e_{a3} -> E_34
///   h_{a2}   -> h_2,   h_{a3} -> h_3
EmbeddingMap iota5();

/// Same map extended by e_{-a2} -> E_32 and e_{-a3} -> E_43, whose Lie
/// closure covers the whole restricted algebra (dimension 15 instead of the
/// 10-dimensional closure of the seven listed generators).
EmbeddingMap iota5_completed();

/// Result of verify_embedding.
struct EmbeddingReport {
  bool ok = false;
  int closure_dim = 0;
  std::vector<int> degrees;           // sorted distinct loop degrees seen
  std::vector<std::string> failures;  // bracket pairs whose images disagree
};

/// Extends the assignment to the Lie closure of its source elements by
/// forcing bracket images, then checks every ordered pair for consistency:
/// whenever a source bracket re-expands over the current closure, the image
/// bracket must re-expand with the same coefficients.  Also certifies that
/// the closure stays inside the restricted algebra (IntegrityError
/// otherwise), that the image set is linearly independent, and that every
/// loop degree stays in {0, +1} so no central term can arise.
EmbeddingReport verify_embedding(const EmbeddingMap& m);

}  // namespace rmf

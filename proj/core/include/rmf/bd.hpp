#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rmf/cybe.hpp"
#include "rmf/liecore.hpp"
#include "rmf/matrix.hpp"

namespace rmf {

/// Combinatorial datum on the simple roots of sl(n): two index sets
/// gamma1, gamma2 inside {1, ..., n-1} and a bijection tau between them.
/// Indices are 1-based simple-root labels; the sets are kept sorted.
struct BDTriple {
  int n = 0;
  std::vector<int> gamma1;
  std::vector<int> gamma2;
  std::map<int, int> tau;  // gamma1 -> gamma2

  bool is_empty() const { return gamma1.empty(); }
  std::string str() const;
};

/// Result of validate_triple.  `violations` lists, in human-readable form,
/// every defining condition the triple fails; it is empty iff `valid`.
struct TripleReport {
  bool valid = false;
  std::vector<std::string> violations;
};

/// Checks the defining conditions of a triple: gamma1 and gamma2 are
/// duplicate-free subsets of the simple roots, tau is a bijection
/// gamma1 -> gamma2 preserving the Cartan pairing, and every tau-orbit
/// eventually leaves gamma1 (no cycles).
/// DomainError if n < 2 or an index lies outside 1..n-1.
TripleReport validate_triple(const BDTriple& t);

/// Every valid triple on sl(n), the empty one included, in a deterministic
/// order (by |gamma1|, then lexicographically by gamma1, gamma2 and the
/// image tuple of tau).
std::vector<BDTriple> enumerate_triples(int n);

/// Affine solution set of the Cartan-part constraints attached to a triple:
/// the tensor c must satisfy c + c^T = A^{-1} (A the Cartan matrix) and, for
/// every a in gamma1 and every index m,
///   sum_k A(tau(a), k) c(k, m)  +  sum_l c(m, l) A(a, l)  =  0.
struct R0Solution {
  CartanTensor particular;
  std::vector<CartanTensor> kernel_basis;

  int dimension() const { return static_cast<int>(kernel_basis.size()); }
  /// particular + sum coeffs[i] * kernel_basis[i].
  CartanTensor member(const std::vector<Rational>& coeffs) const;
};

/// Solves the constraint system exactly.  DomainError if the triple is
/// invalid; IntegrityError if the system were inconsistent (impossible for a
/// valid triple, kept as an internal sanity trap).
R0Solution solve_r0(const BDTriple& t);

/// Direct substitution check: lists every constraint the candidate tensor
/// violates.  Empty result means r0 lies in the solution set of solve_r0(t).
std::vector<std::string> r0_constraint_failures(const BDTriple& t,
                                                const CartanTensor& r0);

/// tau extended additively to a positive root alpha: defined when every
/// simple constituent of alpha lies in gamma1 and the image constituents
/// again form a root.  Returns false when undefined; on success stores the
/// image root through `image` (which must be non-null).
bool tau_applies(const BDTriple& t, const RootA& alpha, RootA* image);

/// Image of the root vector E_alpha under the multiplicative extension of
/// tau to the nilpotent subalgebra it generates: for a simple root the
/// E-basis vector of tau(alpha); for a composite root defined recursively
/// through the bracket, theta(E_{(i,j)}) = [theta(E_{(i,i+1)}),
/// theta(E_{(i+1,j)})].  The image is coeff * E_beta with coeff in {+1,-1};
/// coeff can be -1 when tau reverses the order of a block.  Returns false
/// when tau does not apply to alpha.
bool theta_image(const BDTriple& t, const RootA& alpha, RootA* beta,
                 Rational* coeff);

/// One wedge term of the r-matrix: alpha runs over the positive roots,
/// beta = tau^k(alpha) for some k >= 1, and coeff is the product of the
/// theta coefficients along the chain.
struct ChainPair {
  RootA alpha;
  RootA beta;
  Rational coeff;
};

/// All chain pairs (alpha, tau^k(alpha)), k >= 1, in a deterministic order.
/// IntegrityError on a runaway orbit (only possible for an invalid triple).
std::vector<ChainPair> tau_chain_pairs(const BDTriple& t);

/// Constant r-matrix attached to the triple:
///   r  =  r0  +  sum_{alpha > 0} X_{-alpha} (x) X_alpha  +  wedge terms,
/// one wedge coeff * (X_{-alpha} ^ X_{tau^k alpha}) per chain pair, with
/// the orientation fixed by kWedgeDir / kWedgeSign below.
/// pre: the triple is valid and r0 lies in the solution set of solve_r0(t)
/// (DomainError otherwise).
Tensor2 assemble_r(const BDTriple& t, const CartanTensor& r0);

/// Same, with an explicit wedge orientation; exposed so the test suite can
/// certify that the pinned orientation is the unique one compatible with
/// the classical Yang-Baxter equation.
///   dir = 0:  wedge spans X_{-alpha} (x) X_{tau^k alpha} minus its flip;
///   dir = 1:  wedge spans X_{alpha} (x) X_{-tau^k alpha} minus its flip;
/// sign multiplies the whole wedge sum.
Tensor2 assemble_r_with(const BDTriple& t, const CartanTensor& r0, int dir,
                        int sign);

/// Orientation used by assemble_r.  Certified once against the classical
/// Yang-Baxter equation (see test_bd) and then frozen.
inline constexpr int kWedgeDir = 0;
inline constexpr int kWedgeSign = 1;

/// The shift triple: gamma1 = {a_1..a_{n-2}}, gamma2 = {a_2..a_{n-1}},
/// tau(a_i) = a_{i+1}.  DomainError if n < 2.
BDTriple cg_triple(int n);

/// Triple with both index sets empty.
BDTriple empty_triple(int n);

/// Standard r-matrix of the empty triple with the symmetric Cartan part
/// (half the Cartan block of the Casimir).
Tensor2 dj_rmatrix(int n);

}  // namespace rmf

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmf/rational.hpp"
#include "rmf/vars.hpp"

namespace rmf {

// Exponent vector; entry i belongs to the i-th variable of the owning
// polynomial's variable set.  Compared lexicographically, most significant
// variable first (std::vector's operator< does exactly that).
using Monomial = std::vector<std::int32_t>;

// Multivariate polynomial with Rational coefficients over an explicit
// variable set drawn from the global universe.  Terms are kept in a sorted
// map with no zero coefficients, so representation is canonical and
// iteration order deterministic.
//
// Arithmetic requires both operands to carry the *same* variable set;
// a mismatch is a StructuralError.  Use lift() to move a polynomial into a
// larger set deliberately.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero polynomial over the empty variable set
  explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarSet vars, const Rational& c);
  static MultiPoly variable(VarSet vars, Var v);  // v must be in vars

  const VarSet& vars() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // 0 if zero; DomainError if non-constant
  size_t term_count() const { return terms_.size(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Total order usable as a map key (compares variable sets, then terms).
  static int cmp(const MultiPoly& a, const MultiPoly& b);
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return cmp(a, b) < 0; }

  // Leading term in lex order; DomainError on zero.
  std::pair<Monomial, Rational> leading_term() const;

  // Exact division: returns the quotient when divisor divides *this
  // exactly, std::nullopt otherwise.  DomainError on zero divisor.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // Adds a coefficient to the monomial (variadic building block).
  void add_term(const Monomial& m, const Rational& c);

  // Full evaluation; point must cover every variable of the set.
  Rational eval(const std::map<Var, Rational>& point) const;

  // Partial substitution of rational values; result lives over the
  // remaining variables.
  MultiPoly substitute(const std::map<Var, Rational>& point) const;

  // Substitute a polynomial for one variable (composition).  The result's
  // variable set is (vars() minus v) union p.vars().
  MultiPoly substitute_poly(Var v, const MultiPoly& p) const;

  // Injective variable renaming; target set is the sorted image.
  MultiPoly rename(const std::map<Var, Var>& mapping) const;

  // Re-embeds into a superset of the current variable set.
  MultiPoly lift(const VarSet& superset) const;

  int degree_in(Var v) const;  // -1 for the zero polynomial
  int total_degree() const;    // -1 for the zero polynomial

  std::string str() const;  // human-readable, deterministic

 private:
  void check_same_vars(const MultiPoly& o, const char* op) const;

  VarSet vars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace rmf

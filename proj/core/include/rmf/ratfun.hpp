#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmf/multipoly.hpp"

namespace rmf {

// Element of the fraction field of the polynomial ring, stored as
//
//   num / prod_i f_i^{e_i}
//
// with the denominator kept in factored form.  Factors are monic in lex
// order (scalar folded into the numerator) and sorted, so representation
// is deterministic.  After every arithmetic step the numerator is trial-
// divided by each factor, which fully cancels whenever denominators are
// products of the linear forms that actually occur here (z - t, u1 - u2,
// monomials in s, ...); equality is nevertheless decided by
// cross-multiplication and never relies on successful cancellation.
//
// Unlike MultiPoly, arithmetic between operands over different variable
// sets is allowed: both sides are lifted to the union set first.
class RatFun {
 public:
  RatFun() = default;  // zero over the empty variable set
  explicit RatFun(const Rational& c)
      : num_(MultiPoly::constant({}, c)) {}
  explicit RatFun(MultiPoly p) : num_(std::move(p)) {}
  RatFun(MultiPoly num, const MultiPoly& den);  // DomainError if den == 0

  static RatFun variable(Var v);
  static RatFun one() { return RatFun(Rational(1)); }

  const MultiPoly& num() const { return num_; }
  const std::vector<std::pair<MultiPoly, int>>& den_factors() const { return den_; }
  MultiPoly den_expanded() const;

  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const;  // DomainError if not constant

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inv() const;  // DomainError on zero
  RatFun pow(long e) const;

  // Exact equality of field elements (cross-multiplication).
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Full evaluation; DomainError if the denominator vanishes at the point.
  Rational eval(const std::map<Var, Rational>& point) const;

  // Partial substitution of rational values.
  RatFun substitute(const std::map<Var, Rational>& point) const;

  // Injective variable renaming (applies to numerator and denominator).
  RatFun rename(const std::map<Var, Var>& mapping) const;

  RatFun lift(const VarSet& superset) const;

  std::string str() const;

 private:
  void push_den_factor(MultiPoly f, int e);  // monic-normalizes, merges
  void normalize();                          // cancel factors into num
  static void align(RatFun& a, RatFun& b);

  MultiPoly num_;
  std::vector<std::pair<MultiPoly, int>> den_;  // sorted by MultiPoly order
};

}  // namespace rmf

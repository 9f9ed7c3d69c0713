#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmf/errors.hpp"
#include "rmf/ratfun.hpp"

namespace rmf {

// Truncated power series in eps: c0 + c1*eps + ... + c_{k-1}*eps^{k-1},
// arithmetic mod eps^k.  The coefficient type C must supply default
// construction (zero), +, -, *, is_zero(), and inv() for division.
// Operands must share the truncation order; a mismatch is a
// StructuralError.
template <typename C>
class TruncSeries {
 public:
  TruncSeries(int order, C zero = C{}) : c_(static_cast<size_t>(order), zero) {
    if (order <= 0) throw DomainError("TruncSeries: order must be positive");
  }

  static TruncSeries constant(int order, const C& value) {
    TruncSeries s(order);
    s.c_[0] = value;
    return s;
  }

  // The series eps itself (throws if order < 2 would truncate it away is
  // fine: coefficient simply lands outside and the series is zero).
  static TruncSeries eps(int order, const C& one) {
    TruncSeries s(order);
    if (order >= 2) s.c_[1] = one;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const C& coeff(int k) const {
    if (k < 0 || k >= order()) throw DomainError("TruncSeries::coeff: index out of range");
    return c_[static_cast<size_t>(k)];
  }
  C& coeff(int k) {
    if (k < 0 || k >= order()) throw DomainError("TruncSeries::coeff: index out of range");
    return c_[static_cast<size_t>(k)];
  }

  bool is_zero() const {
    for (const C& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  TruncSeries operator-() const {
    TruncSeries out = *this;
    for (C& x : out.c_) x = C{} - x;
    return out;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a.match(b, "+");
    for (int i = 0; i < a.order(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    a.match(b, "-");
    for (int i = 0; i < a.order(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.match(b, "*");
    TruncSeries out(a.order());
    for (int i = 0; i < a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j < a.order(); ++j) {
        if (b.c_[j].is_zero()) continue;
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scale(const C& k) const {
    TruncSeries out = *this;
    for (C& x : out.c_) x = x * k;
    return out;
  }

  // Multiplicative inverse; DomainError when the constant term is zero.
  TruncSeries inv() const {
    if (c_[0].is_zero())
      throw DomainError("TruncSeries::inv: constant term is zero (not a unit)");
    TruncSeries out(order());
    C i0 = c_[0].inv();
    out.c_[0] = i0;
    for (int k = 1; k < order(); ++k) {
      C acc{};
      for (int j = 1; j <= k; ++j) acc = acc + c_[j] * out.c_[k - j];
      out.c_[k] = C{} - i0 * acc;
    }
    return out;
  }

  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    return a * b.inv();
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) return false;
    for (int i = 0; i < a.order(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  void match(const TruncSeries& o, const char* op) const {
    if (order() != o.order())
      throw StructuralError(std::string("TruncSeries: order mismatch in ") + op);
  }

  std::vector<C> c_;
};

// Expands a polynomial after the substitution v -> base + eps, truncated
// mod eps^order.  Coefficients live over the remaining variables.
// (1 + eps)^k is expanded with exact binomial coefficients.
TruncSeries<RatFun> expand_at(const MultiPoly& p, Var v, const Rational& base, int order);

// Same for a rational function; DomainError if the denominator's leading
// series coefficient vanishes (non-unit denominator at the expansion
// point).
TruncSeries<RatFun> expand_at(const RatFun& f, Var v, const Rational& base, int order);

}  // namespace rmf

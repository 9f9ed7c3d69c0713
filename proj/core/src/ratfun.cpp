#include "rmf/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace rmf {

RatFun::RatFun(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw DomainError("RatFun: zero denominator");
  if (num_.vars() != den.vars()) {
    VarSet u = vars_union(num_.vars(), den.vars());
    num_ = num_.lift(u);
    push_den_factor(den.lift(u), 1);
  } else {
    push_den_factor(den, 1);
  }
  normalize();
}

RatFun RatFun::variable(Var v) {
  return RatFun(MultiPoly::variable({v}, v));
}

MultiPoly RatFun::den_expanded() const {
  MultiPoly d = MultiPoly::constant(num_.vars(), Rational(1));
  for (const auto& [f, e] : den_) d = d * f.pow(static_cast<unsigned>(e));
  return d;
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw DomainError("RatFun::constant_value: not constant: " + str());
  return num_.constant_value();
}

void RatFun::push_den_factor(MultiPoly f, int e) {
  if (e == 0) return;
  if (e < 0) throw DomainError("RatFun: negative factor exponent");
  if (f.is_zero()) throw DomainError("RatFun: zero denominator factor");
  if (f.is_constant()) {
    num_ /= f.constant_value().pow(e);
    return;
  }
  if (f.vars() != num_.vars()) {
    VarSet u = vars_union(f.vars(), num_.vars());
    num_ = num_.lift(u);
    for (auto& [g, k] : den_) g = g.lift(u);
    f = f.lift(u);
    std::sort(den_.begin(), den_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  // Monic-normalize: fold the lex leading coefficient into the numerator.
  Rational lc = f.leading_term().second;
  if (!lc.is_one()) {
    f /= lc;
    num_ /= lc.pow(e);
  }
  auto it = std::lower_bound(den_.begin(), den_.end(), f,
                             [](const auto& p, const MultiPoly& g) { return p.first < g; });
  if (it != den_.end() && it->first == f)
    it->second += e;
  else
    den_.insert(it, {std::move(f), e});
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    num_ = MultiPoly(num_.vars());
    return;
  }
  for (auto& [f, e] : den_) {
    while (e > 0) {
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(),
                            [](const auto& p) { return p.second == 0; }),
             den_.end());
}

void RatFun::align(RatFun& a, RatFun& b) {
  if (a.num_.vars() == b.num_.vars()) return;
  VarSet u = vars_union(a.num_.vars(), b.num_.vars());
  a = a.lift(u);
  b = b.lift(u);
}

RatFun RatFun::lift(const VarSet& superset) const {
  if (num_.vars() == superset) return *this;
  RatFun out;
  out.num_ = num_.lift(superset);
  for (const auto& [f, e] : den_) out.den_.push_back({f.lift(superset), e});
  std::sort(out.den_.begin(), out.den_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFun operator*(const RatFun& a0, const RatFun& b0) {
  RatFun a = a0, b = b0;
  RatFun::align(a, b);
  RatFun out;
  out.num_ = a.num_ * b.num_;
  out.den_ = a.den_;
  for (auto& [f, e] : b.den_) out.push_den_factor(f, e);
  out.normalize();
  return out;
}

RatFun operator+(const RatFun& a0, const RatFun& b0) {
  RatFun a = a0, b = b0;
  RatFun::align(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Combined denominator: per factor, the max exponent on either side.
  // num = a.num * (D/Da) + b.num * (D/Db), den = D.
  RatFun out;
  out.num_ = MultiPoly(a.num_.vars());
  std::map<MultiPoly, int> all;
  for (const auto& [f, e] : a.den_) all[f] = std::max(all[f], e);
  for (const auto& [f, e] : b.den_) all[f] = std::max(all[f], e);
  MultiPoly na = a.num_, nb = b.num_;
  for (const auto& [f, e] : all) {
    int ea = 0, eb = 0;
    for (const auto& [g, k] : a.den_)
      if (g == f) ea = k;
    for (const auto& [g, k] : b.den_)
      if (g == f) eb = k;
    if (e > ea) na = na * f.pow(static_cast<unsigned>(e - ea));
    if (e > eb) nb = nb * f.pow(static_cast<unsigned>(e - eb));
  }
  out.num_ = na + nb;
  for (const auto& [f, e] : all) out.push_den_factor(f, e);
  out.normalize();
  return out;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw DomainError("RatFun: inverse of zero");
  RatFun out;
  out.num_ = den_expanded();
  out.push_den_factor(num_, 1);
  out.normalize();
  return out;
}

RatFun RatFun::pow(long e) const {
  if (e == 0) return RatFun::one().lift(vars());
  RatFun base = e < 0 ? inv() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  RatFun acc = RatFun(Rational(1)).lift(base.vars());
  while (k) {
    if (k & 1ul) acc = acc * base;
    k >>= 1ul;
    if (k) base = base * base;
  }
  return acc;
}

bool operator==(const RatFun& a0, const RatFun& b0) {
  RatFun a = a0, b = b0;
  RatFun::align(a, b);
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;  // fast path
  return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

Rational RatFun::eval(const std::map<Var, Rational>& point) const {
  Rational d(1);
  for (const auto& [f, e] : den_) d *= f.eval(point).pow(e);
  if (d.is_zero()) throw DomainError("RatFun::eval: denominator vanishes at the point");
  return num_.eval(point) / d;
}

RatFun RatFun::substitute(const std::map<Var, Rational>& point) const {
  RatFun out;
  out.num_ = num_.substitute(point);
  for (const auto& [f, e] : den_) {
    MultiPoly g = f.substitute(point);
    if (g.is_zero())
      throw DomainError("RatFun::substitute: denominator factor vanishes: " + f.str());
    out.push_den_factor(g, e);
  }
  out.normalize();
  return out;
}

RatFun RatFun::rename(const std::map<Var, Var>& mapping) const {
  RatFun out;
  out.num_ = num_.rename(mapping);
  for (const auto& [f, e] : den_) out.push_den_factor(f.rename(mapping), e);
  out.normalize();
  return out;
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (";
  bool first = true;
  for (const auto& [f, e] : den_) {
    if (!first) os << " * ";
    first = false;
    os << "(" << f.str() << ")";
    if (e != 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

}  // namespace rmf

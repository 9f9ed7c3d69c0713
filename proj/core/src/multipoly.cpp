#include "rmf/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace rmf {

MultiPoly MultiPoly::constant(VarSet vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSet vars, Var v) {
  MultiPoly p(std::move(vars));
  int pos = var_position(p.vars_, v);
  if (pos < 0)
    throw StructuralError(std::string("MultiPoly::variable: ") + var_name(v) +
                          " not in set " + vars_str(p.vars_));
  Monomial m(p.vars_.size(), 0);
  m[pos] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::int32_t e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw DomainError("MultiPoly::constant_value: not constant: " + str());
  return terms_.begin()->second;
}

void MultiPoly::check_same_vars(const MultiPoly& o, const char* op) const {
  if (vars_ != o.vars_)
    throw StructuralError(std::string("MultiPoly: variable-set mismatch in ") + op + ": " +
                          vars_str(vars_) + " vs " + vars_str(o.vars_));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(vars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_.size())
    throw StructuralError("MultiPoly::add_term: exponent vector length mismatch");
  for (std::int32_t e : m)
    if (e < 0) throw DomainError("MultiPoly::add_term: negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o, "+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_vars(o, "-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b, "*");
  MultiPoly p(a.vars_);
  const size_t w = a.vars_.size();
  Monomial m(w, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < w; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
  if (c.is_zero()) throw DomainError("MultiPoly: division by zero scalar");
  for (auto& [m, v] : terms_) v /= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

int MultiPoly::cmp(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("MultiPoly::leading_term: zero polynomial");
  auto it = terms_.rbegin();  // lex-largest
  return {it->first, it->second};
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_same_vars(divisor, "divide_exact");
  if (divisor.is_zero()) throw DomainError("MultiPoly::divide_exact: zero divisor");
  MultiPoly r = *this;
  MultiPoly q(vars_);
  const auto [dm, dc] = divisor.leading_term();
  const size_t w = vars_.size();
  Monomial qm(w, 0);
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term();
    for (size_t i = 0; i < w; ++i) {
      if (rm[i] < dm[i]) return std::nullopt;
      qm[i] = rm[i] - dm[i];
    }
    Rational qc = rc / dc;
    q.add_term(qm, qc);
    // r -= (qc * x^qm) * divisor
    Monomial m(w, 0);
    for (const auto& [m2, c2] : divisor.terms_) {
      for (size_t i = 0; i < w; ++i) m[i] = qm[i] + m2[i];
      r.add_term(m, -(qc * c2));
    }
  }
  return q;
}

Rational MultiPoly::eval(const std::map<Var, Rational>& point) const {
  for (Var v : vars_)
    if (!point.count(v))
      throw StructuralError(std::string("MultiPoly::eval: missing value for ") + var_name(v));
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (m[i]) t *= point.at(vars_[i]).pow(m[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::map<Var, Rational>& point) const {
  VarSet rest;
  std::vector<int> keep;  // positions kept
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (!point.count(vars_[i])) {
      rest.push_back(vars_[i]);
      keep.push_back(static_cast<int>(i));
    }
  }
  MultiPoly out(rest);
  Monomial m(rest.size(), 0);
  for (const auto& [mon, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it != point.end() && mon[i]) t *= it->second.pow(mon[i]);
    }
    for (size_t k = 0; k < keep.size(); ++k) m[k] = mon[keep[k]];
    out.add_term(m, t);
  }
  return out;
}

MultiPoly MultiPoly::substitute_poly(Var v, const MultiPoly& p) const {
  int pos = var_position(vars_, v);
  if (pos < 0) throw StructuralError("MultiPoly::substitute_poly: variable not present");
  VarSet rest;
  for (Var w : vars_)
    if (w != v) rest.push_back(w);
  VarSet target = vars_union(rest, p.vars());
  MultiPoly out(target);
  MultiPoly pl = p.lift(target);
  // Cache powers of pl.
  std::vector<MultiPoly> powers{MultiPoly::constant(target, Rational(1))};
  for (const auto& [mon, c] : terms_) {
    int e = mon[pos];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * pl);
    // Rest of the monomial, lifted to target.
    MultiPoly base(target);
    Monomial tm(target.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (static_cast<int>(i) == pos) continue;
      int tp = var_position(target, vars_[i]);
      tm[tp] = mon[i];
    }
    base.add_term(tm, c);
    out += base * powers[e];
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::map<Var, Var>& mapping) const {
  VarSet target;
  std::vector<int> dest(vars_.size());
  std::vector<Var> image(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = mapping.find(vars_[i]);
    image[i] = it == mapping.end() ? vars_[i] : it->second;
  }
  {
    VarSet sorted = image;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw StructuralError("MultiPoly::rename: mapping not injective on this set");
    target = sorted;
  }
  for (size_t i = 0; i < vars_.size(); ++i) dest[i] = var_position(target, image[i]);
  MultiPoly out(target);
  Monomial m(target.size(), 0);
  for (const auto& [mon, c] : terms_) {
    std::fill(m.begin(), m.end(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) m[dest[i]] = mon[i];
    out.add_term(m, c);
  }
  return out;
}

MultiPoly MultiPoly::lift(const VarSet& superset) const {
  if (superset == vars_) return *this;
  std::vector<int> dest(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    dest[i] = var_position(superset, vars_[i]);
    if (dest[i] < 0)
      throw StructuralError("MultiPoly::lift: target set does not contain " +
                            std::string(var_name(vars_[i])));
  }
  MultiPoly out(superset);
  Monomial m(superset.size(), 0);
  for (const auto& [mon, c] : terms_) {
    std::fill(m.begin(), m.end(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) m[dest[i]] = mon[i];
    out.terms_.emplace(m, c);
  }
  return out;
}

int MultiPoly::degree_in(Var v) const {
  int pos = var_position(vars_, v);
  if (pos < 0) return terms_.empty() ? -1 : 0;
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[pos]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (std::int32_t e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print from lex-largest down, the conventional reading order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vs;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!m[i]) continue;
      if (any_var) vs << "*";
      any_var = true;
      vs << var_name(vars_[i]);
      if (m[i] != 1) vs << "^" << m[i];
    }
    if (!any_var) {
      os << a.str();
    } else if (a.is_one()) {
      os << vs.str();
    } else if ((-a).is_one()) {
      os << "-" << vs.str();
    } else {
      os << a.str() << "*" << vs.str();
    }
  }
  return os.str();
}

}  // namespace rmf

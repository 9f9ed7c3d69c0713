#include "rmf/cybe.hpp"

#include <sstream>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

const RatFun& zero_fun() {
  static const RatFun z;
  return z;
}

std::map<Var, Var> swap_zt() {
  return {{Var::z, Var::t}, {Var::t, Var::z}};
}

/// Recover the matrix-unit or Cartan label of a basis index as a pair:
/// E_ij -> (i, j), h_k -> (k, k).
std::pair<int, int> leg_pair(int n, int idx) {
  int units = n * (n - 1);
  if (idx < units) {
    int i = idx / (n - 1) + 1;
    int pos = idx % (n - 1);
    int j = pos + 1 + (pos + 1 >= i ? 1 : 0);
    return {i, j};
  }
  int k = idx - units + 1;
  return {k, k};
}

}  // namespace

Tensor2::Tensor2(int n) : n_(n) {
  if (n < 2) throw DomainError("tensor over sl_n requires n >= 2");
}

void Tensor2::add(int a, int b, const RatFun& coeff) {
  if (coeff.is_zero()) return;
  int d = alg().dim();
  if (a < 0 || a >= d || b < 0 || b >= d)
    throw DomainError("tensor component index out of range");
  auto key = std::make_pair(a, b);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

const RatFun& Tensor2::coeff(int a, int b) const {
  auto it = c_.find({a, b});
  return it == c_.end() ? zero_fun() : it->second;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  if (n_ != o.n_) throw StructuralError("tensor algebra mismatch");
  Tensor2 out = *this;
  for (const auto& [k, v] : o.c_) out.add(k.first, k.second, v);
  return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  if (n_ != o.n_) throw StructuralError("tensor algebra mismatch");
  Tensor2 out = *this;
  for (const auto& [k, v] : o.c_) out.add(k.first, k.second, RatFun() - v);
  return out;
}

Tensor2 Tensor2::scale(const RatFun& s) const {
  Tensor2 out(n_);
  for (const auto& [k, v] : c_) out.add(k.first, k.second, v * s);
  return out;
}

Tensor2 Tensor2::flip() const {
  Tensor2 out(n_);
  auto m = swap_zt();
  for (const auto& [k, v] : c_) out.add(k.second, k.first, v.rename(m));
  return out;
}

bool operator==(const Tensor2& a, const Tensor2& b) {
  if (a.n_ != b.n_) return false;
  return (a - b).is_zero();
}

Tensor2 Tensor2::substitute(const std::map<Var, Rational>& point) const {
  Tensor2 out(n_);
  for (const auto& [k, v] : c_) out.add(k.first, k.second, v.substitute(point));
  return out;
}

Matrix<RatFun> Tensor2::rep_matrix() const {
  const LieAlgSL& g = alg();
  int nn = n_ * n_;
  Matrix<RatFun> out(nn, nn);
  for (const auto& [k, v] : c_) {
    const Matrix<Rational>& xa = g.basis_matrix(k.first);
    const Matrix<Rational>& xb = g.basis_matrix(k.second);
    for (int i1 = 0; i1 < n_; ++i1)
      for (int j1 = 0; j1 < n_; ++j1) {
        if (xa.at(i1, j1).is_zero()) continue;
        RatFun va = v * RatFun(xa.at(i1, j1));
        for (int i2 = 0; i2 < n_; ++i2)
          for (int j2 = 0; j2 < n_; ++j2) {
            if (xb.at(i2, j2).is_zero()) continue;
            out.at(i1 * n_ + i2, j1 * n_ + j2) += va * RatFun(xb.at(i2, j2));
          }
      }
  }
  return out;
}

std::string Tensor2::str() const {
  if (c_.empty()) return "0";
  const LieAlgSL& g = alg();
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")*" << g.basis_name(k.first) << "(x)"
       << g.basis_name(k.second);
  }
  return os.str();
}

Tensor3::Tensor3(int n) : n_(n) {
  if (n < 2) throw DomainError("tensor over sl_n requires n >= 2");
}

void Tensor3::add(int a, int b, int c, const RatFun& coeff) {
  if (coeff.is_zero()) return;
  int d = build_sl(n_).dim();
  if (a < 0 || a >= d || b < 0 || b >= d || c < 0 || c >= d)
    throw DomainError("tensor component index out of range");
  auto key = std::make_tuple(a, b, c);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  if (n_ != o.n_) throw StructuralError("tensor algebra mismatch");
  Tensor3 out = *this;
  for (const auto& [k, v] : o.c_)
    out.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
  return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  if (n_ != o.n_) throw StructuralError("tensor algebra mismatch");
  Tensor3 out = *this;
  for (const auto& [k, v] : o.c_)
    out.add(std::get<0>(k), std::get<1>(k), std::get<2>(k), RatFun() - v);
  return out;
}

std::string Tensor3::str() const {
  if (c_.empty()) return "0";
  const LieAlgSL& g = build_sl(n_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")*" << g.basis_name(std::get<0>(k)) << "(x)"
       << g.basis_name(std::get<1>(k)) << "(x)" << g.basis_name(std::get<2>(k));
  }
  return os.str();
}

Tensor2 casimir(int n) {
  const LieAlgSL& g = build_sl(n);
  Tensor2 out = casimir_cartan_part(n);
  RatFun one = RatFun(Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.add(g.e_index(i, j), g.e_index(j, i), one);
  return out;
}

Tensor2 casimir_cartan_part(int n) {
  return cartan_to_tensor2(cartan_casimir(n));
}

Tensor2 cartan_to_tensor2(const CartanTensor& t) {
  const LieAlgSL& g = build_sl(t.n);
  Tensor2 out(t.n);
  for (int k = 1; k < t.n; ++k)
    for (int l = 1; l < t.n; ++l)
      out.add(g.h_index(k), g.h_index(l), RatFun(t.c.at(k - 1, l - 1)));
  return out;
}

Tensor2 simple_tensor(int n, const Matrix<Rational>& x, const Matrix<Rational>& y,
                      const RatFun& coeff) {
  const LieAlgSL& g = build_sl(n);
  auto cx = g.decompose(x);
  auto cy = g.decompose(y);
  Tensor2 out(n);
  for (int a = 0; a < g.dim(); ++a) {
    if (cx[a].is_zero()) continue;
    for (int b = 0; b < g.dim(); ++b) {
      if (cy[b].is_zero()) continue;
      out.add(a, b, coeff * RatFun(cx[a] * cy[b]));
    }
  }
  return out;
}

Tensor2 sk(const Tensor2& t) { return t - t.flip(); }

Tensor3 cybe_residual(const Tensor2& r) {
  const LieAlgSL& g = r.alg();
  std::map<Var, Var> to12 = {{Var::z, Var::z1}, {Var::t, Var::z2}};
  std::map<Var, Var> to13 = {{Var::z, Var::z1}, {Var::t, Var::z3}};
  std::map<Var, Var> to23 = {{Var::z, Var::z2}, {Var::t, Var::z3}};
  std::vector<std::pair<std::pair<int, int>, RatFun>> r12, r13, r23;
  for (const auto& [k, v] : r.terms()) {
    r12.push_back({k, v.rename(to12)});
    r13.push_back({k, v.rename(to13)});
    r23.push_back({k, v.rename(to23)});
  }
  Tensor3 out(r.n());
  for (const auto& [ka, fa] : r12)
    for (const auto& [kb, fb] : r13) {
      RatFun prod = fa * fb;
      for (const auto& [idx, c] : g.bracket(ka.first, kb.first))
        out.add(idx, ka.second, kb.second, prod * RatFun(c));
    }
  for (const auto& [ka, fa] : r12)
    for (const auto& [kb, fb] : r23) {
      RatFun prod = fa * fb;
      for (const auto& [idx, c] : g.bracket(ka.second, kb.first))
        out.add(ka.first, idx, kb.second, prod * RatFun(c));
    }
  for (const auto& [ka, fa] : r13)
    for (const auto& [kb, fb] : r23) {
      RatFun prod = fa * fb;
      for (const auto& [idx, c] : g.bracket(ka.second, kb.second))
        out.add(ka.first, kb.first, idx, prod * RatFun(c));
    }
  return out;
}

Tensor2 unitarity_residual(const Tensor2& r) {
  return r + r.flip() - casimir(r.n());
}

std::string unitarity_convention(const Tensor2& r) {
  Tensor2 s = r + r.flip();
  if (s == casimir(r.n())) return "omega";
  if (s.is_zero()) return "skew";
  return "none";
}

Tensor2 cobracket(const Tensor2& X, const std::vector<RatFun>& a) {
  const LieAlgSL& g = X.alg();
  if (static_cast<int>(a.size()) != g.dim())
    throw StructuralError("cobracket: coefficient vector has wrong length");
  std::map<Var, Var> t_to_z = {{Var::t, Var::z}};
  Tensor2 out(X.n());
  for (const auto& [k, f] : X.terms()) {
    for (int c = 0; c < g.dim(); ++c) {
      if (a[c].is_zero()) continue;
      RatFun at = f * a[c];
      RatFun az = f * a[c].rename(t_to_z);
      for (const auto& [idx, v] : g.bracket(k.first, c))
        out.add(idx, k.second, at * RatFun(v));
      for (const auto& [idx, v] : g.bracket(k.second, c))
        out.add(k.first, idx, az * RatFun(v));
    }
  }
  for (const auto& [k, v] : out.terms())
    if (!v.is_polynomial())
      throw IntegrityError("cobracket: pole fails to cancel at component (" +
                           g.basis_name(k.first) + ", " + g.basis_name(k.second) +
                           "): " + v.str());
  return out;
}

Tensor2 ad_action(int basis_idx, const Tensor2& t) {
  const LieAlgSL& g = t.alg();
  Tensor2 out(t.n());
  for (const auto& [k, f] : t.terms()) {
    for (const auto& [idx, v] : g.bracket(basis_idx, k.first))
      out.add(idx, k.second, f * RatFun(v));
    for (const auto& [idx, v] : g.bracket(basis_idx, k.second))
      out.add(k.first, idx, f * RatFun(v));
  }
  return out;
}

namespace {

void emit_coeff(std::ostringstream& os, const RatFun& v) {
  os << "{\"num\":\"" << v.num().str() << "\",\"den\":\""
     << v.den_expanded().str() << "\"}";
}

void emit_leg(std::ostringstream& os, int n, int idx) {
  auto [i, j] = leg_pair(n, idx);
  os << "[" << i << "," << j << "]";
}

}  // namespace

std::string tensor2_json(const Tensor2& t) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [k, v] : t.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"legs\":[";
    emit_leg(os, t.n(), k.first);
    os << ",";
    emit_leg(os, t.n(), k.second);
    os << "],\"coeff\":";
    emit_coeff(os, v);
    os << "}";
  }
  os << "]";
  return os.str();
}

std::string tensor3_json(const Tensor3& t) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [k, v] : t.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"legs\":[";
    emit_leg(os, t.n(), std::get<0>(k));
    os << ",";
    emit_leg(os, t.n(), std::get<1>(k));
    os << ",";
    emit_leg(os, t.n(), std::get<2>(k));
    os << "],\"coeff\":";
    emit_coeff(os, v);
    os << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace rmf

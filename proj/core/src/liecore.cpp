#include "rmf/liecore.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>

#include "rmf/errors.hpp"

namespace rmf {

std::vector<int> RootA::interval_vector(int n) const {
  if (i < 1 || j <= i || j > n)
    throw DomainError("interval_vector: (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not a positive root for n=" +
                      std::to_string(n));
  std::vector<int> v(n - 1, 0);
  for (int k = i; k < j; ++k) v[k - 1] = 1;
  return v;
}

RootA RootA::from_interval_vector(const std::vector<int>& v) {
  int first = -1, last = -1;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 1) {
      if (first < 0) first = static_cast<int>(k);
      last = static_cast<int>(k);
    } else if (v[k] != 0) {
      throw DomainError("root vector entries must be 0 or 1");
    }
  }
  if (first < 0) throw DomainError("zero vector is not a root");
  for (int k = first; k <= last; ++k)
    if (v[k] != 1) throw DomainError("root vector must be a contiguous interval");
  return RootA(first + 1, last + 2);
}

std::string RootA::str() const {
  if (is_simple()) return "a" + std::to_string(i);
  return "a" + std::to_string(i) + "+..+a" + std::to_string(j - 1);
}

RootSystemA RootSystemA::build(int n, bool affine) {
  if (n < 2) throw DomainError("root system requires n >= 2");
  if (affine && n < 3)
    throw DomainError("affine diagram with off-diagonal entries in {0,-1} requires n >= 3");
  RootSystemA rs;
  rs.n = n;
  rs.affine = affine;
  rs.rank = n - 1;
  int m = affine ? n : n - 1;
  rs.cartan = Matrix<Rational>(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int d = std::abs(a - b);
      bool adjacent = affine ? (d == 1 || d == n - 1) : (d == 1);
      rs.cartan.at(a, b) = a == b ? Rational(2) : Rational(adjacent ? -1 : 0);
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rs.positive_roots.push_back(RootA(i, j).interval_vector(n));
  int start = affine ? 0 : 1;
  for (int a = start; a < n; ++a) rs.simple_labels.push_back("a" + std::to_string(a));
  return rs;
}

LieAlgSL::LieAlgSL(int n) : n_(n) {
  if (n < 2) throw DomainError("sl_n requires n >= 2");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Matrix<Rational> m(n, n);
      m.at(i - 1, j - 1) = Rational(1);
      e_pos_[{i, j}] = static_cast<int>(basis_.size());
      basis_.push_back(std::move(m));
      names_.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  for (int k = 1; k < n; ++k) {
    Matrix<Rational> m(n, n);
    m.at(k - 1, k - 1) = Rational(1);
    m.at(k, k) = Rational(-1);
    basis_.push_back(std::move(m));
    names_.push_back("h" + std::to_string(k));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) roots_.push_back(RootA(i, j));

  cartan_inv_ = inverse(cartan_matrix(), Rational(1));

  int d = dim();
  table_.assign(d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  form_.assign(d, std::vector<Rational>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Matrix<Rational> ab = basis_[a] * basis_[b];
      form_[a][b] = ab.trace();
      Matrix<Rational> comm = ab - basis_[b] * basis_[a];
      auto coeffs = decompose(comm);
      for (int k = 0; k < d; ++k)
        if (!coeffs[k].is_zero()) table_[a][b].push_back({k, coeffs[k]});
    }
}

int LieAlgSL::e_index(int i, int j) const {
  auto it = e_pos_.find({i, j});
  if (it == e_pos_.end())
    throw DomainError("no matrix unit E" + std::to_string(i) + std::to_string(j) +
                      " in sl_" + std::to_string(n_));
  return it->second;
}

int LieAlgSL::h_index(int k) const {
  if (k < 1 || k >= n_) throw DomainError("Cartan index out of range");
  return n_ * (n_ - 1) + (k - 1);
}

const Matrix<Rational>& LieAlgSL::basis_matrix(int idx) const {
  if (idx < 0 || idx >= dim()) throw DomainError("basis index out of range");
  return basis_[idx];
}

const std::string& LieAlgSL::basis_name(int idx) const {
  if (idx < 0 || idx >= dim()) throw DomainError("basis index out of range");
  return names_[idx];
}

const std::vector<std::pair<int, Rational>>& LieAlgSL::bracket(int a, int b) const {
  if (a < 0 || a >= dim() || b < 0 || b >= dim())
    throw DomainError("basis index out of range");
  return table_[a][b];
}

std::vector<Rational> LieAlgSL::decompose(const Matrix<Rational>& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw StructuralError("decompose: matrix size does not match the algebra");
  if (!m.trace().is_zero())
    throw DomainError("decompose: matrix has nonzero trace, not in sl_n");
  std::vector<Rational> out(dim());
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j) out[e_pos_.at({i, j})] = m.at(i - 1, j - 1);
  Rational partial;
  for (int k = 1; k < n_; ++k) {
    partial += m.at(k - 1, k - 1);
    out[h_index(k)] = partial;
  }
  return out;
}

const Rational& LieAlgSL::trace_form_basis(int a, int b) const {
  if (a < 0 || a >= dim() || b < 0 || b >= dim())
    throw DomainError("basis index out of range");
  return form_[a][b];
}

Matrix<Rational> LieAlgSL::cartan_matrix() const {
  int r = n_ - 1;
  Matrix<Rational> a(r, r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      a.at(p, q) = p == q ? Rational(2) : Rational(std::abs(p - q) == 1 ? -1 : 0);
  return a;
}

const Matrix<Rational>& LieAlgSL::cartan_inverse() const { return cartan_inv_; }

bool LieAlgSL::is_root(const RootA& r) const {
  return r.i >= 1 && r.i < r.j && r.j <= n_;
}

std::vector<Rational> LieAlgSL::root_values(const RootA& alpha) const {
  if (!is_root(alpha)) throw DomainError("not a positive root: " + alpha.str());
  std::vector<Rational> vals(n_ - 1);
  for (int k = 1; k < n_; ++k) {
    int v = (k == alpha.i ? 1 : 0) - (k + 1 == alpha.i ? 1 : 0) -
            (k == alpha.j ? 1 : 0) + (k + 1 == alpha.j ? 1 : 0);
    vals[k - 1] = Rational(v);
  }
  return vals;
}

Rational LieAlgSL::root_pairing(const RootA& alpha, const RootA& beta) const {
  auto vals = root_values(alpha);
  Rational out;
  for (int k = beta.i; k < beta.j; ++k) out += vals[k - 1];
  return out;
}

const LieAlgSL& build_sl(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LieAlgSL>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<LieAlgSL>(n)).first;
  return *it->second;
}

Rational trace_form(const Matrix<Rational>& x, const Matrix<Rational>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
    throw StructuralError("trace_form: dimension mismatch");
  return (x * y).trace();
}

RatFun trace_form(const Matrix<RatFun>& x, const Matrix<RatFun>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
    throw StructuralError("trace_form: dimension mismatch");
  return (x * y).trace();
}

Matrix<Rational> root_vector(const LieAlgSL& g, const RootA& root, int sign) {
  if (!g.is_root(root)) throw DomainError("not a positive root: " + root.str());
  if (sign == 0) throw DomainError("root vector sign must be nonzero");
  int i = sign > 0 ? root.i : root.j;
  int j = sign > 0 ? root.j : root.i;
  return g.basis_matrix(g.e_index(i, j));
}

Matrix<Rational> root_vector(const LieAlgSL& g, const std::vector<int>& root,
                             int sign) {
  if (static_cast<int>(root.size()) != g.n() - 1)
    throw StructuralError("root coordinate vector has wrong length");
  return root_vector(g, RootA::from_interval_vector(root), sign);
}

namespace {

RatFun loop_u(int deg) {
  RatFun u = RatFun::variable(kLoopVar);
  return u.pow(deg);
}

}  // namespace

LoopElement loop_realize(int n, const std::string& label) {
  if (n < 2) throw DomainError("loop realization requires n >= 2");
  if (label.size() < 2) throw DomainError("bad generator label: " + label);
  char kind = label[0];
  int k = -1;
  try {
    size_t used = 0;
    k = std::stoi(label.substr(1), &used);
    if (used + 1 != label.size()) k = -1;
  } catch (...) {
    k = -1;
  }
  if (k < 0 || k >= n) throw DomainError("bad generator label: " + label);

  const LieAlgSL& g = build_sl(n);
  LoopElement out(n, n);
  auto put = [&](const Matrix<Rational>& m, int deg) {
    RatFun u = loop_u(deg);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!m.at(a, b).is_zero()) out.at(a, b) = RatFun(m.at(a, b)) * u;
  };
  if (k >= 1) {
    switch (kind) {
      case 'e': put(g.basis_matrix(g.e_index(k, k + 1)), 0); return out;
      case 'f': put(g.basis_matrix(g.e_index(k + 1, k)), 0); return out;
      case 'h': put(g.basis_matrix(g.h_index(k)), 0); return out;
    }
  } else {
    Matrix<Rational> h0(n, n);
    h0.at(n - 1, n - 1) = Rational(1);
    h0.at(0, 0) = Rational(-1);
    switch (kind) {
      case 'e': put(g.basis_matrix(g.e_index(n, 1)), 1); return out;
      case 'f': put(g.basis_matrix(g.e_index(1, n)), -1); return out;
      case 'h': put(h0, 0); return out;
    }
  }
  throw DomainError("bad generator label: " + label);
}

std::vector<int> loop_degrees(const LoopElement& x) {
  std::vector<int> degs;
  for (int a = 0; a < x.rows(); ++a)
    for (int b = 0; b < x.cols(); ++b) {
      const RatFun& f = x.at(a, b);
      if (f.is_zero()) continue;
      int shift = 0;
      for (const auto& [factor, exp] : f.den_factors()) {
        bool is_u = factor.term_count() == 1 && factor.degree_in(kLoopVar) == 1 &&
                    factor.total_degree() == 1;
        if (!is_u || !factor.leading_term().second.is_one())
          throw DomainError("entry is not a Laurent polynomial in the loop variable");
        shift += exp;
      }
      const MultiPoly& num = f.num();
      for (Var v : num.vars())
        if (v != kLoopVar && num.degree_in(v) > 0)
          throw DomainError("entry involves a variable besides the loop variable");
      for (const auto& [mono, coeff] : num.terms()) {
        (void)coeff;
        int e = 0;
        int pos = var_position(num.vars(), kLoopVar);
        if (pos >= 0) e = mono[pos];
        degs.push_back(e - shift);
      }
    }
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  return degs;
}

LoopElement loop_lift(const Matrix<Rational>& m, int deg) {
  LoopElement out(m.rows(), m.cols());
  RatFun u = loop_u(deg);
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b)
      if (!m.at(a, b).is_zero()) out.at(a, b) = RatFun(m.at(a, b)) * u;
  return out;
}

std::vector<std::string> chevalley_relation_failures(int n, bool loop) {
  std::vector<int> labels;
  int lo = loop ? 0 : 1;
  for (int k = lo; k < n; ++k) labels.push_back(k);
  auto aij = [&](int i, int j) -> long {
    if (i == j) return 2;
    if (!loop) return std::abs(i - j) == 1 ? -1 : 0;
    if (n == 2) return -2;
    int d = std::abs(i - j);
    return (d == 1 || d == n - 1) ? -1 : 0;
  };
  std::map<int, LoopElement> e, f, h;
  for (int k : labels) {
    e[k] = loop_realize(n, "e" + std::to_string(k));
    f[k] = loop_realize(n, "f" + std::to_string(k));
    h[k] = loop_realize(n, "h" + std::to_string(k));
  }
  std::vector<std::string> bad;
  auto note = [&](const std::string& what, int i, int j) {
    bad.push_back(what + " fails for (" + std::to_string(i) + "," +
                  std::to_string(j) + "), n=" + std::to_string(n) +
                  (loop ? " loop" : ""));
  };
  LoopElement zero(n, n);
  for (int i : labels)
    for (int j : labels) {
      if (!(commutator(h[i], h[j]) == zero)) note("[h,h]=0", i, j);
      LoopElement ef = commutator(e[i], f[j]);
      if (i == j) {
        if (!(ef == h[i])) note("[e,f]=h", i, j);
      } else {
        if (!(ef == zero)) note("[e,f]=0", i, j);
      }
      Rational a(aij(i, j));
      if (!(commutator(h[i], e[j]) == e[j].scale(RatFun(a))))
        note("[h,e]=a*e", i, j);
      if (!(commutator(h[i], f[j]) == f[j].scale(RatFun(Rational() - a))))
        note("[h,f]=-a*f", i, j);
      if (i != j) {
        long reps = 1 - aij(i, j);
        LoopElement se = e[j], sf = f[j];
        for (long r = 0; r < reps; ++r) {
          se = commutator(e[i], se);
          sf = commutator(f[i], sf);
        }
        if (!(se == zero)) note("serre(e)", i, j);
        if (!(sf == zero)) note("serre(f)", i, j);
      }
    }
  return bad;
}

CartanTensor::CartanTensor(int n_, Matrix<Rational> c_) : n(n_), c(std::move(c_)) {
  if (c.rows() != n - 1 || c.cols() != n - 1)
    throw StructuralError("Cartan tensor coefficient matrix must be (n-1) x (n-1)");
}

CartanTensor CartanTensor::zero(int n) {
  return CartanTensor(n, Matrix<Rational>(n - 1, n - 1));
}

CartanTensor CartanTensor::operator+(const CartanTensor& o) const {
  if (n != o.n) throw StructuralError("Cartan tensor size mismatch");
  return CartanTensor(n, c + o.c);
}

CartanTensor CartanTensor::operator-(const CartanTensor& o) const {
  if (n != o.n) throw StructuralError("Cartan tensor size mismatch");
  return CartanTensor(n, c - o.c);
}

CartanTensor CartanTensor::scale(const Rational& s) const {
  return CartanTensor(n, c.scale(s));
}

std::vector<Rational> CartanTensor::contract_first(
    const std::vector<Rational>& phi) const {
  if (static_cast<int>(phi.size()) != n - 1)
    throw StructuralError("functional has wrong length");
  std::vector<Rational> out(n - 1);
  for (int l = 0; l < n - 1; ++l)
    for (int k = 0; k < n - 1; ++k) out[l] += phi[k] * c.at(k, l);
  return out;
}

std::vector<Rational> CartanTensor::contract_second(
    const std::vector<Rational>& phi) const {
  if (static_cast<int>(phi.size()) != n - 1)
    throw StructuralError("functional has wrong length");
  std::vector<Rational> out(n - 1);
  for (int k = 0; k < n - 1; ++k)
    for (int l = 0; l < n - 1; ++l) out[k] += c.at(k, l) * phi[l];
  return out;
}

std::string CartanTensor::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < c.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c.cols(); ++j) {
      if (j) os << " ";
      os << c.at(i, j);
    }
  }
  os << "]";
  return os.str();
}

CartanTensor cartan_casimir(int n) {
  return CartanTensor(n, build_sl(n).cartan_inverse());
}

}  // namespace rmf

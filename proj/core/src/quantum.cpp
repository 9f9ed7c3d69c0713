#include "rmf/quantum.hpp"

#include <algorithm>
#include <sstream>

#include "rmf/fixtures.hpp"
#include "rmf/quasitrig.hpp"
#include "rmf/series.hpp"

namespace rmf {

namespace {

constexpr long kQExp = 40; // q = s^40

Matrix<RatFun> zero_mat(int r, int c) { return Matrix<RatFun>(r, c); }

Matrix<RatFun> id_mat(int d) {
  return Matrix<RatFun>::identity(d, RatFun::one());
}

Matrix<RatFun> rename_entries(const Matrix<RatFun>& m,
                              const std::map<Var, Var>& mapping) {
  Matrix<RatFun> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = m.at(i, j).rename(mapping);
  return out;
}

std::string root_label(const RootA& a) {
  std::ostringstream os;
  os << "(" << a.i << "," << a.j << ")";
  return os.str();
}

std::vector<Rational> simple_values(int n, int k) {
  return LieAlgSL(n).root_values(RootA{k, k + 1});
}

std::map<int, Rational> vec_to_nodes(const std::vector<Rational>& v) {
  std::map<int, Rational> c;
  for (size_t k = 0; k < v.size(); ++k)
    if (!(v[k] == Rational(0))) c[static_cast<int>(k) + 1] = v[k];
  return c;
}

std::map<int, Rational> scale_nodes(const std::map<int, Rational>& c,
                                    const Rational& k) {
  std::map<int, Rational> out;
  for (const auto& [node, val] : c) out[node] = val * k;
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Scalars.

RatFun q_of_s() { return qk(1); }

RatFun qk(long k) { return RatFun::variable(Var::s).pow(kQExp * k); }

RatFun qpow(const Rational& r) {
  Rational e = r * Rational(kQExp);
  if (!e.is_integer())
    throw IntegrityError("qpow: exponent " + r.str() +
                         " does not clear the Laurent ring in s");
  return RatFun::variable(Var::s).pow(e.to_long());
}

// ---------------------------------------------------------------------------
// Representations.

Matrix<RatFun> RepMap::id() const { return id_mat(dim); }

bool RepMap::has_node(int node) const {
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

Matrix<RatFun> RepMap::h(int node) const {
  if (!has_node(node)) throw StructuralError("RepMap::h: unknown node");
  Matrix<RatFun> m(dim, dim);
  for (int b = 0; b < dim; ++b) {
    auto it = wt[static_cast<size_t>(b)].find(node);
    if (it != wt[static_cast<size_t>(b)].end() && !(it->second == Rational(0)))
      m.at(b, b) = RatFun(it->second);
  }
  return m;
}

Matrix<RatFun> RepMap::qh(const std::map<int, Rational>& c) const {
  Matrix<RatFun> m(dim, dim);
  for (int b = 0; b < dim; ++b) {
    Rational x(0);
    for (const auto& [node, coeff] : c) {
      auto it = wt[static_cast<size_t>(b)].find(node);
      if (it != wt[static_cast<size_t>(b)].end()) x = x + coeff * it->second;
    }
    m.at(b, b) = qpow(x);
  }
  return m;
}

RepMap vector_rep(int n) {
  if (n < 2) throw DomainError("vector_rep: n must be at least 2");
  RepMap r;
  r.n = n;
  r.affine = false;
  r.dim = n;
  for (int i = 1; i < n; ++i) {
    r.nodes.push_back(i);
    Matrix<RatFun> E(n, n), F(n, n);
    E.at(i - 1, i) = RatFun::one();
    F.at(i, i - 1) = RatFun::one();
    r.e[i] = E;
    r.f[i] = F;
  }
  r.wt.resize(static_cast<size_t>(n));
  for (int b = 0; b < n; ++b)
    for (int i = 1; i < n; ++i) {
      Rational w(0);
      if (b == i - 1) w = Rational(1);
      if (b == i) w = Rational(-1);
      if (!(w == Rational(0))) r.wt[static_cast<size_t>(b)][i] = w;
    }
  return r;
}

RepMap eval_rep(int n, const RatFun& u) {
  if (n < 3)
    throw DomainError("eval_rep: n must be at least 3 (cyclic diagram)");
  if (u.is_zero()) throw DomainError("eval_rep: parameter must be invertible");
  RepMap r = vector_rep(n);
  r.affine = true;
  r.nodes.insert(r.nodes.begin(), 0);
  Matrix<RatFun> E0(n, n), F0(n, n);
  RatFun minus_one{Rational(-1)};
  E0.at(n - 1, 0) = u * minus_one;
  F0.at(0, n - 1) = u.inv() * minus_one;
  r.e[0] = E0;
  r.f[0] = F0;
  for (int b = 0; b < n; ++b) {
    Rational w(0);
    if (b == n - 1) w = Rational(1);
    if (b == 0) w = Rational(-1);
    if (!(w == Rational(0))) r.wt[static_cast<size_t>(b)][0] = w;
  }
  return r;
}

RepMap counit_rep(const RepMap& like) {
  RepMap r;
  r.n = like.n;
  r.affine = like.affine;
  r.nodes = like.nodes;
  r.dim = 1;
  for (int i : r.nodes) {
    r.e[i] = Matrix<RatFun>(1, 1);
    r.f[i] = Matrix<RatFun>(1, 1);
  }
  r.wt.resize(1);
  return r;
}

RepMap delta_pullback(const RepMap& r1, const RepMap& r2) {
  if (r1.nodes != r2.nodes || r1.affine != r2.affine || r1.n != r2.n)
    throw StructuralError("delta_pullback: incompatible node sets");
  RepMap r;
  r.n = r1.n;
  r.affine = r1.affine;
  r.nodes = r1.nodes;
  r.dim = r1.dim * r2.dim;
  r.wt.resize(static_cast<size_t>(r.dim));
  for (int b1 = 0; b1 < r1.dim; ++b1)
    for (int b2 = 0; b2 < r2.dim; ++b2) {
      auto& w = r.wt[static_cast<size_t>(b1 * r2.dim + b2)];
      w = r1.wt[static_cast<size_t>(b1)];
      for (const auto& [node, val] : r2.wt[static_cast<size_t>(b2)]) {
        Rational s = val;
        auto it = w.find(node);
        if (it != w.end()) s = s + it->second;
        if (s == Rational(0))
          w.erase(node);
        else
          w[node] = s;
      }
    }
  for (int i : r.nodes) {
    std::map<int, Rational> unit{{i, Rational(1)}};
    std::map<int, Rational> munit{{i, Rational(-1)}};
    r.e[i] = kron(r1.qh(munit), r2.e.at(i)) + kron(r1.e.at(i), r2.id());
    r.f[i] = kron(r1.f.at(i), r2.qh(unit)) + kron(r1.id(), r2.f.at(i));
  }
  return r;
}

Rational cartan_pairing(bool affine, int n, int i, int j) {
  if (i == j) return Rational(2);
  int d = i > j ? i - j : j - i;
  if (!affine) return d == 1 ? Rational(-1) : Rational(0);
  return (d == 1 || d == n - 1) ? Rational(-1) : Rational(0);
}

std::vector<std::string> relation_failures(const RepMap& rho) {
  std::vector<std::string> bad;
  auto comm = [](const Matrix<RatFun>& a, const Matrix<RatFun>& b) {
    return a * b - b * a;
  };
  RatFun qdiff = qk(1) - qk(-1); // q - q^{-1}
  for (int i : rho.nodes) {
    Matrix<RatFun> hi = rho.h(i);
    for (int j : rho.nodes) {
      Rational pair = cartan_pairing(rho.affine, rho.n, i, j);
      const Matrix<RatFun>&ej = rho.e.at(j), &fj = rho.f.at(j);
      if (!(comm(hi, ej) - ej.scale(RatFun(pair))).is_zero())
        bad.push_back("cartan-ladder h" + std::to_string(i) + " e" +
                      std::to_string(j));
      if (!(comm(hi, fj) + fj.scale(RatFun(pair))).is_zero())
        bad.push_back("cartan-ladder h" + std::to_string(i) + " f" +
                      std::to_string(j));
      Matrix<RatFun> lhs = comm(rho.e.at(i), fj);
      Matrix<RatFun> rhs(rho.dim, rho.dim);
      if (i == j) {
        std::map<int, Rational> unit{{i, Rational(1)}};
        std::map<int, Rational> munit{{i, Rational(-1)}};
        rhs = (rho.qh(unit) - rho.qh(munit)).scale(qdiff.inv());
      }
      if (!(lhs - rhs).is_zero())
        bad.push_back("ladder-pair e" + std::to_string(i) + " f" +
                      std::to_string(j));
      if (i != j) {
        const Matrix<RatFun>& ei = rho.e.at(i);
        const Matrix<RatFun>& fi = rho.f.at(i);
        if (pair == Rational(-1)) {
          RatFun qq = qk(1) + qk(-1);
          if (!(ei * ei * ej - (ei * ej * ei).scale(qq) + ej * ei * ei)
                   .is_zero())
            bad.push_back("serre e" + std::to_string(i) + " e" +
                          std::to_string(j));
          if (!(fi * fi * fj - (fi * fj * fi).scale(qq) + fj * fi * fi)
                   .is_zero())
            bad.push_back("serre f" + std::to_string(i) + " f" +
                          std::to_string(j));
        } else {
          if (!comm(ei, ej).is_zero())
            bad.push_back("commute e" + std::to_string(i) + " e" +
                          std::to_string(j));
          if (!comm(fi, fj).is_zero())
            bad.push_back("commute f" + std::to_string(i) + " f" +
                          std::to_string(j));
        }
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Words.

Element Element::zero() { return Element{}; }

Element Element::generator(char kind, int node) {
  Word w;
  w.coeff = RatFun::one();
  w.items.push_back(GenItem{kind, node});
  return Element{{w}};
}

Element Element::qh(std::map<int, Rational> c) {
  Word w;
  w.coeff = RatFun::one();
  w.items.push_back(QhItem{std::move(c)});
  return Element{{w}};
}

Element Element::operator+(const Element& o) const {
  Element out = *this;
  out.words.insert(out.words.end(), o.words.begin(), o.words.end());
  return out;
}

Element Element::operator-(const Element& o) const {
  return *this + o.scale(RatFun(Rational(-1)));
}

Element Element::operator*(const Element& o) const {
  Element out;
  for (const Word& a : words)
    for (const Word& b : o.words) {
      Word w;
      w.coeff = a.coeff * b.coeff;
      w.items = a.items;
      w.items.insert(w.items.end(), b.items.begin(), b.items.end());
      out.words.push_back(std::move(w));
    }
  return out;
}

Element Element::scale(const RatFun& k) const {
  Element out = *this;
  for (Word& w : out.words) w.coeff = w.coeff * k;
  return out;
}

Matrix<RatFun> eval_element(const Element& x, const RepMap& rho) {
  Matrix<RatFun> acc(rho.dim, rho.dim);
  for (const Word& w : x.words) {
    if (w.coeff.is_zero()) continue;
    Matrix<RatFun> m = rho.id();
    for (const WordItem& item : w.items) {
      if (std::holds_alternative<GenItem>(item)) {
        const GenItem& g = std::get<GenItem>(item);
        const auto& table = g.kind == 'e' ? rho.e : rho.f;
        auto it = table.find(g.node);
        if (it == table.end())
          throw IntegrityError(std::string("eval_element: generator ") +
                               g.kind + std::to_string(g.node) +
                               " is not carried by the representation");
        m = m * it->second;
      } else {
        m = m * rho.qh(std::get<QhItem>(item).c);
      }
      if (m.is_zero()) break;
    }
    acc += m.scale(w.coeff);
  }
  return acc;
}

Element composite_e(int i, int j) {
  if (i < 1 || j <= i) throw DomainError("composite_e: need 1 <= i < j");
  if (j == i + 1) return Element::generator('e', i);
  Element a = composite_e(i, j - 1);
  Element b = Element::generator('e', j - 1);
  return a * b - (b * a).scale(qk(1));
}

Element composite_f(int i, int j) {
  if (i < 1 || j <= i) throw DomainError("composite_f: need 1 <= i < j");
  if (j == i + 1) return Element::generator('f', i);
  Element a = composite_f(i, j - 1);
  Element b = Element::generator('f', j - 1);
  return b * a - (a * b).scale(qk(-1));
}

Element primed_e(int n, const RootA& gamma, const CartanTensor& r0) {
  std::vector<Rational> v = LieAlgSL(n).root_values(gamma);
  return Element::qh(vec_to_nodes(r0.contract_first(v))) *
         composite_e(gamma.i, gamma.j);
}

Element primed_f(int n, const RootA& gamma, const CartanTensor& r0) {
  std::vector<Rational> v = LieAlgSL(n).root_values(gamma);
  std::vector<Rational> c = r0.contract_second(v);
  for (Rational& x : c) x = -x;
  return Element::qh(vec_to_nodes(c)) * composite_f(gamma.i, gamma.j);
}

// ---------------------------------------------------------------------------
// Twists.

Matrix<RatFun> exp_q2(const Matrix<RatFun>& x) {
  if (x.rows() != x.cols()) throw StructuralError("exp_q2: square matrix required");
  int d = x.rows();
  Matrix<RatFun> acc = id_mat(d);
  Matrix<RatFun> p = id_mat(d);
  RatFun fact = RatFun::one();
  for (int k = 1; k <= d + 1; ++k) {
    p = p * x;
    if (p.is_zero()) return acc; // series terminated by nilpotency
    RatFun bracket; // (k)_{q^2} = 1 + q^2 + ... + q^{2(k-1)}
    for (int m = 0; m < k; ++m) bracket += qk(2 * m);
    fact *= bracket;
    acc += p.scale(fact.inv());
  }
  throw IntegrityError("exp_q2: argument fails to be nilpotent");
}

namespace {

Matrix<RatFun> cartan_factor_image(const CartanTensor& c, const RepMap& r1,
                                   const RepMap& r2, int sign) {
  int rank = c.n - 1;
  int D = r1.dim * r2.dim;
  Matrix<RatFun> m(D, D);
  for (int b1 = 0; b1 < r1.dim; ++b1)
    for (int b2 = 0; b2 < r2.dim; ++b2) {
      Rational x(0);
      for (int k = 1; k <= rank; ++k) {
        auto i1 = r1.wt[static_cast<size_t>(b1)].find(k);
        if (i1 == r1.wt[static_cast<size_t>(b1)].end()) continue;
        for (int l = 1; l <= rank; ++l) {
          auto i2 = r2.wt[static_cast<size_t>(b2)].find(l);
          if (i2 == r2.wt[static_cast<size_t>(b2)].end()) continue;
          x = x + c.c.at(k - 1, l - 1) * i1->second * i2->second;
        }
      }
      int idx = b1 * r2.dim + b2;
      m.at(idx, idx) = qpow(sign > 0 ? x : -x);
    }
  return m;
}

Matrix<RatFun> unipotent_inverse(const Matrix<RatFun>& m) {
  int d = m.rows();
  Matrix<RatFun> n = m - id_mat(d); // nilpotent part
  Matrix<RatFun> acc = id_mat(d);
  Matrix<RatFun> p = id_mat(d);
  for (int k = 1; k <= d + 1; ++k) {
    p = p * n;
    if (p.is_zero()) return acc;
    acc = k % 2 == 0 ? acc + p : acc - p;
  }
  throw IntegrityError("unipotent_inverse: matrix is not unipotent");
}

} // namespace

Matrix<RatFun> TwistBuilder::instantiate(const RepMap& r1,
                                         const RepMap& r2) const {
  Matrix<RatFun> acc = id_mat(r1.dim * r2.dim);
  for (const TwistFactor& fac : factors) {
    Matrix<RatFun> img =
        fac.is_cartan
            ? cartan_factor_image(fac.cartan, r1, r2, +1)
            : exp_q2(kron(eval_element(fac.a, r1), eval_element(fac.b, r2))
                         .scale(fac.coeff));
    acc = acc * img;
  }
  return acc;
}

Matrix<RatFun> TwistBuilder::instantiate_inverse(const RepMap& r1,
                                                 const RepMap& r2) const {
  Matrix<RatFun> acc = id_mat(r1.dim * r2.dim);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    Matrix<RatFun> inv =
        it->is_cartan
            ? cartan_factor_image(it->cartan, r1, r2, -1)
            : unipotent_inverse(
                  exp_q2(kron(eval_element(it->a, r1), eval_element(it->b, r2))
                             .scale(it->coeff)));
    acc = acc * inv;
  }
  return acc;
}

TwistBuilder cartan_twist(const CartanTensor& c, const std::string& tag) {
  TwistBuilder F;
  F.tag = tag;
  TwistFactor fac;
  fac.is_cartan = true;
  fac.cartan = c;
  fac.name = tag;
  F.factors.push_back(fac);
  return F;
}

namespace {

// The six positive roots supported on the first three nodes of sl_5, in
// normal order.
const std::vector<RootA>& root_segment() {
  static const std::vector<RootA> seg = {{1, 2}, {1, 3}, {1, 4},
                                         {2, 3}, {2, 4}, {3, 4}};
  return seg;
}

} // namespace

TwistBuilder assemble_FCG5_prime() {
  CartanTensor r0 = fixture_r0_5();
  TwistBuilder F;
  F.tag = "FCG5-exp";
  for (int k = 3; k >= 1; --k)
    for (const RootA& beta : root_segment()) {
      if (beta.j + k > 5) continue; // shifted interval leaves the diagram
      RootA tb{beta.i + k, beta.j + k};
      TwistFactor fac;
      // One power of q per unit of area swept between beta and its shift:
      // q^{k ht(beta) - 1} (q^{-1} - q).
      fac.coeff = (qk(-1) - qk(1)) * qk(k * (beta.j - beta.i) - 1);
      fac.a = primed_e(5, tb, r0);
      fac.b = primed_f(5, beta, r0);
      fac.name = "F(" + std::to_string(k) + ") beta=" + root_label(beta);
      F.factors.push_back(fac);
    }
  return F;
}

TwistBuilder assemble_FCG5() {
  TwistBuilder F = assemble_FCG5_prime();
  F.tag = "FCG5";
  TwistFactor k5;
  k5.is_cartan = true;
  k5.cartan = fixture_r0_5();
  k5.name = "K5";
  F.factors.push_back(k5);
  return F;
}

// ---------------------------------------------------------------------------
// Affinization.

std::map<int, Rational> iota_cartan(const std::vector<Rational>& c) {
  if (c.size() != 4)
    throw StructuralError("iota_cartan: coefficient vector over h_1..h_4 expected");
  if (!(c[3] == -c[0]))
    throw IntegrityError(
        "iota_cartan: vector outside span{h_2, h_3, p5} (h_1/h_4 exposure)");
  Rational a = c[0] * Rational(5, 3);
  Rational b = c[1] - a * Rational(1, 5);
  Rational d = c[2] + a * Rational(1, 5);
  std::map<int, Rational> out;
  Rational n1 = a * Rational(3, 4);
  Rational n2 = a * Rational(1, 2) + b;
  Rational n3 = a * Rational(1, 4) + d;
  if (!(n1 == Rational(0))) out[1] = n1;
  if (!(n2 == Rational(0))) out[2] = n2;
  if (!(n3 == Rational(0))) out[3] = n3;
  return out;
}

Element iota_q(const Element& x) {
  Element out;
  for (const Word& w : x.words) {
    Word m;
    m.coeff = w.coeff;
    for (const WordItem& item : w.items) {
      if (std::holds_alternative<QhItem>(item)) {
        std::vector<Rational> c(4, Rational(0));
        for (const auto& [node, val] : std::get<QhItem>(item).c) {
          if (node < 1 || node > 4)
            throw StructuralError("iota_q: Cartan exponent outside h_1..h_4");
          c[static_cast<size_t>(node) - 1] = val;
        }
        m.items.push_back(QhItem{iota_cartan(c)});
        continue;
      }
      const GenItem& g = std::get<GenItem>(item);
      if (g.kind == 'e' && g.node >= 2 && g.node <= 3)
        m.items.push_back(GenItem{'e', g.node});
      else if (g.kind == 'e' && g.node == 4)
        m.items.push_back(GenItem{'e', 0});
      else if (g.kind == 'f' && g.node >= 1 && g.node <= 3)
        m.items.push_back(GenItem{'f', g.node});
      else
        throw IntegrityError(std::string("iota_q: generator ") + g.kind +
                             std::to_string(g.node) +
                             " lies outside the restricted subalgebra");
    }
    out.words.push_back(std::move(m));
  }
  return out;
}

TwistBuilder affinize_twist() {
  TwistBuilder F5 = assemble_FCG5_prime();
  TwistBuilder F;
  F.tag = "FCG4hat";
  for (const TwistFactor& fac : F5.factors) {
    TwistFactor mapped;
    mapped.coeff = fac.coeff;
    mapped.a = iota_q(fac.a);
    mapped.b = iota_q(fac.b);
    mapped.name = fac.name + " ->hat";
    F.factors.push_back(mapped);
  }
  TwistFactor k4;
  k4.is_cartan = true;
  k4.cartan = fixture_r0_4_hat();
  k4.name = "K4hat";
  F.factors.push_back(k4);
  return F;
}

// ---------------------------------------------------------------------------
// Checks.

CocycleReport cocycle_check(const TwistBuilder& F, const RepMap& r1,
                            const RepMap& r2, const RepMap& r3,
                            const Rational* s_value) {
  Matrix<RatFun> f12 = kron(F.instantiate(r1, r2), id_mat(r3.dim));
  Matrix<RatFun> df = F.instantiate(delta_pullback(r1, r2), r3);
  Matrix<RatFun> f23 = kron(id_mat(r1.dim), F.instantiate(r2, r3));
  Matrix<RatFun> fd = F.instantiate(r1, delta_pullback(r2, r3));
  if (s_value != nullptr) {
    f12 = specialize_s(f12, *s_value);
    df = specialize_s(df, *s_value);
    f23 = specialize_s(f23, *s_value);
    fd = specialize_s(fd, *s_value);
  }
  Matrix<RatFun> diff = f12 * df - f23 * fd;
  CocycleReport rep;
  rep.pass = diff.is_zero();
  if (!rep.pass) {
    for (int i = 0; i < diff.rows(); ++i)
      for (int j = 0; j < diff.cols(); ++j)
        if (!diff.at(i, j).is_zero()) {
          ++rep.mismatches;
          if (rep.sample.empty())
            rep.sample = "entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") = " + diff.at(i, j).str();
        }
  }
  return rep;
}

DisplayReport check_twisted_coproducts() {
  CartanTensor r0 = fixture_r0_5();
  RepMap rho = vector_rep(5);
  RepMap pull = delta_pullback(rho, rho);
  TwistBuilder K5 = cartan_twist(r0, "K5");
  Matrix<RatFun> K = K5.instantiate(rho, rho);
  Matrix<RatFun> Kinv = K5.instantiate_inverse(rho, rho);
  DisplayReport rep;
  rep.pass = true;
  for (int k = 1; k <= 4; ++k) {
    RootA ak{k, k + 1};
    std::vector<Rational> av = simple_values(5, k);
    Element ep = primed_e(5, ak, r0);
    Element fp = primed_f(5, ak, r0);
    Matrix<RatFun> ep1 = eval_element(ep, rho);
    Matrix<RatFun> fp1 = eval_element(fp, rho);
    std::map<int, Rational> two_v1 =
        vec_to_nodes(r0.contract_first(av));
    std::map<int, Rational> mtwo_v2 =
        vec_to_nodes(r0.contract_second(av));
    two_v1 = scale_nodes(two_v1, Rational(2));
    mtwo_v2 = scale_nodes(mtwo_v2, Rational(-2));
    Matrix<RatFun> lhs_e = K * eval_element(ep, pull) * Kinv;
    Matrix<RatFun> rhs_e =
        kron(ep1, rho.qh(two_v1)) + kron(rho.id(), ep1);
    if (!(lhs_e - rhs_e).is_zero()) {
      rep.pass = false;
      rep.failures.push_back("twisted coproduct of e'_" + std::to_string(k));
    }
    Matrix<RatFun> lhs_f = K * eval_element(fp, pull) * Kinv;
    Matrix<RatFun> rhs_f =
        kron(rho.qh(mtwo_v2), fp1) + kron(fp1, rho.id());
    if (!(lhs_f - rhs_f).is_zero()) {
      rep.pass = false;
      rep.failures.push_back("twisted coproduct of f'_" + std::to_string(k));
    }
  }
  return rep;
}

namespace {

// Membership of a Cartan coefficient vector (over h_1..h_4) in
// span{h_2, h_3, p5}: solve for the three coordinates and verify the
// reconstruction.
bool in_restricted_span(const std::vector<Rational>& c) {
  Rational a = c[0] * Rational(5, 3);
  return c[3] == -c[0] &&
         c[0] == a * Rational(3, 5) &&
         c[3] == a * Rational(-3, 5);
}

std::string vec_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

std::vector<Rational> node_map_to_vec(const std::map<int, Rational>& m,
                                      int rank) {
  std::vector<Rational> v(static_cast<size_t>(rank), Rational(0));
  for (const auto& [node, val] : m) v[static_cast<size_t>(node) - 1] = val;
  return v;
}

} // namespace

CartanConditionReport check_cartan_conditions() {
  CartanConditionReport rep;
  CartanTensor r0 = fixture_r0_5();
  CartanTensor r0hat = fixture_r0_4_hat();
  auto add_line = [&rep](const std::string& name, bool pass, bool warn,
                         const std::string& detail) {
    rep.lines.push_back({name, pass, warn, detail});
    if (!warn && !pass) rep.pass = false;
  };

  // Expected membership pattern: the first-leg contractions of the
  // raising nodes carried by the subalgebra (2, 3, 4) and the second-leg
  // contractions of the lowering nodes carried by it (1, 2, 3) land in
  // span{h_2, h_3, p5}; the two excluded nodes expose h_1 / h_4.
  for (int i = 1; i <= 4; ++i) {
    std::vector<Rational> av = simple_values(5, i);
    std::vector<Rational> v1 = r0.contract_first(av);
    std::vector<Rational> v2 = r0.contract_second(av);
    bool m1 = in_restricted_span(v1);
    bool m2 = in_restricted_span(v2);
    bool expect1 = i >= 2;
    bool expect2 = i <= 3;
    add_line("restriction:first-leg:alpha" + std::to_string(i),
             m1 == expect1, false,
             vec_str(v1) + (expect1 ? " must lie in the span"
                                    : " must expose h_1 (node excluded)"));
    add_line("restriction:second-leg:alpha" + std::to_string(i),
             m2 == expect2, false,
             vec_str(v2) + (expect2 ? " must lie in the span"
                                    : " must expose h_4 (node excluded)"));
  }

  // Closed form of the second-leg contraction against alpha_1.
  std::vector<Rational> v2_1 = r0.contract_second(simple_values(5, 1));
  std::vector<Rational> expect20 = {Rational(1, 5), Rational(-3, 5),
                                    Rational(-2, 5), Rational(-1, 5)};
  add_line("closed-form:second-leg:alpha1", v2_1 == expect20, false,
           vec_str(v2_1));

  // Affine transport of that vector.
  std::vector<Rational> img21 = node_map_to_vec(iota_cartan(v2_1), 3);
  std::vector<Rational> expect21 = {Rational(1, 4), Rational(-1, 2),
                                    Rational(-1, 4)};
  add_line("transport:second-leg:alpha1", img21 == expect21, false,
           vec_str(img21));

  // Affine transport of the first-leg contraction against alpha_4: the
  // corrected reading of the source vector reproduces the display, the
  // printed third component does not.
  std::vector<Rational> v1_4 = r0.contract_first(simple_values(5, 4));
  std::vector<Rational> expect22 = {Rational(-1, 4), Rational(-1, 2),
                                    Rational(-3, 4)};
  bool corrected_ok = false;
  std::string corrected_detail;
  {
    std::vector<Rational> img = node_map_to_vec(iota_cartan(v1_4), 3);
    corrected_ok = img == expect22;
    corrected_detail = vec_str(v1_4) + " -> " + vec_str(img);
  }
  add_line("transport:first-leg:alpha4:corrected", corrected_ok, false,
           corrected_detail);

  std::vector<Rational> printed = {Rational(-1, 5), Rational(-2, 5),
                                   Rational(-2, 3), Rational(1, 5)};
  bool printed_fails;
  std::string printed_detail;
  try {
    std::vector<Rational> img = node_map_to_vec(iota_cartan(printed), 3);
    printed_fails = !(img == expect22);
    printed_detail = vec_str(printed) + " -> " + vec_str(img);
  } catch (const IntegrityError&) {
    printed_fails = true;
    printed_detail = vec_str(printed) + " leaves the span";
  }
  add_line("transport:first-leg:alpha4:printed-third-component",
           printed_fails, true,
           printed_detail +
               " -- display reproduces only with third component -3/5");
  rep.typo_warn = printed_fails && corrected_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// R-matrices.

Matrix<RatFun> leg_permutation(int d) {
  Matrix<RatFun> p(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p.at(a * d + b, b * d + a) = RatFun::one();
  return p;
}

namespace {

std::string weight_key(const std::map<int, Rational>& w) {
  std::string s;
  for (const auto& [node, val] : w)
    s += std::to_string(node) + ":" + val.str() + ";";
  return s;
}

} // namespace

Matrix<RatFun> solve_intertwiner(const RepMap& r1, const RepMap& r2) {
  if (r1.nodes != r2.nodes || r1.dim != r2.dim)
    throw StructuralError("solve_intertwiner: incompatible representations");
  int D = r1.dim * r2.dim;
  RepMap p12 = delta_pullback(r1, r2);
  RepMap p21 = delta_pullback(r2, r1);

  // Unknowns: entries within weight blocks (the Cartan intertwining
  // equations force everything else to vanish).
  std::vector<std::pair<int, int>> unknown;
  std::map<std::pair<int, int>, int> unknown_id;
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      if (weight_key(p12.wt[static_cast<size_t>(a)]) ==
          weight_key(p12.wt[static_cast<size_t>(b)])) {
        unknown_id[{a, b}] = static_cast<int>(unknown.size());
        unknown.push_back({a, b});
      }
  int U = static_cast<int>(unknown.size());

  // Op-coproduct images through the leg swap.
  auto op_image = [&](const Matrix<RatFun>& m21) {
    Matrix<RatFun> out(D, D);
    int d2 = r2.dim;
    int d1 = r1.dim;
    for (int a1 = 0; a1 < d1; ++a1)
      for (int a2 = 0; a2 < d2; ++a2)
        for (int b1 = 0; b1 < d1; ++b1)
          for (int b2 = 0; b2 < d2; ++b2) {
            const RatFun& v = m21.at(a2 * d1 + a1, b2 * d1 + b1);
            if (!v.is_zero()) out.at(a1 * d2 + a2, b1 * d2 + b2) = v;
          }
    return out;
  };

  std::vector<std::vector<RatFun>> rows;
  auto add_equations = [&](const Matrix<RatFun>& m1, const Matrix<RatFun>& m2) {
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        std::vector<RatFun> row(static_cast<size_t>(U));
        bool nonempty = false;
        for (int k = 0; k < D; ++k) {
          auto it = unknown_id.find({a, k});
          if (it != unknown_id.end() && !m1.at(k, b).is_zero()) {
            row[static_cast<size_t>(it->second)] += m1.at(k, b);
            nonempty = true;
          }
          auto jt = unknown_id.find({k, b});
          if (jt != unknown_id.end() && !m2.at(a, k).is_zero()) {
            row[static_cast<size_t>(jt->second)] -= m2.at(a, k);
            nonempty = true;
          }
        }
        if (nonempty) rows.push_back(std::move(row));
      }
  };
  for (int i : r1.nodes) {
    add_equations(p12.e.at(i), op_image(p21.e.at(i)));
    add_equations(p12.f.at(i), op_image(p21.f.at(i)));
  }

  Matrix<RatFun> sys(static_cast<int>(rows.size()), U);
  for (int r = 0; r < sys.rows(); ++r)
    for (int c = 0; c < U; ++c)
      sys.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  std::vector<std::vector<RatFun>> null = nullspace(sys, RatFun::one());
  if (null.size() != 1)
    throw DomainError("solve_intertwiner: solution space has dimension " +
                      std::to_string(null.size()) +
                      " (parameters degenerate?)");
  Matrix<RatFun> R(D, D);
  for (int idx = 0; idx < U; ++idx) {
    const auto& [a, b] = unknown[static_cast<size_t>(idx)];
    R.at(a, b) = null[0][static_cast<size_t>(idx)];
  }
  if (R.at(0, 0).is_zero())
    throw IntegrityError("solve_intertwiner: normalizing entry vanishes");
  return R.scale(R.at(0, 0).inv());
}

Matrix<RatFun> twisted_R(const TwistBuilder& F, const Matrix<RatFun>& R,
                         const RepMap& r1, const RepMap& r2) {
  if (r1.dim != r2.dim)
    throw StructuralError("twisted_R: legs of equal dimension expected");
  int d = r1.dim;
  Matrix<RatFun> P = leg_permutation(d);
  Matrix<RatFun> f21 = P * F.instantiate(r2, r1) * P;
  return f21 * R * F.instantiate_inverse(r1, r2);
}

namespace {

// Embedding on legs 1 and 3 of the triple tensor power.
Matrix<RatFun> embed13(const Matrix<RatFun>& m, int d) {
  Matrix<RatFun> out(d * d * d, d * d * d);
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c)
      for (int a2 = 0; a2 < d; ++a2)
        for (int c2 = 0; c2 < d; ++c2) {
          const RatFun& v = m.at(a * d + c, a2 * d + c2);
          if (v.is_zero()) continue;
          for (int b = 0; b < d; ++b)
            out.at((a * d + b) * d + c, (a2 * d + b) * d + c2) = v;
        }
  return out;
}

} // namespace

Matrix<RatFun> qybe_residual(const Matrix<RatFun>& R, int legdim) {
  int d = legdim;
  Matrix<RatFun> r12 = kron(R, id_mat(d));
  Matrix<RatFun> r13 =
      embed13(rename_entries(R, {{Var::u2, Var::u3}}), d);
  Matrix<RatFun> r23 = kron(
      id_mat(d), rename_entries(R, {{Var::u1, Var::u2}, {Var::u2, Var::u3}}));
  return r12 * r13 * r23 - r23 * r13 * r12;
}

Matrix<RatFun> matrix_cybe_residual(const Matrix<RatFun>& r, int legdim) {
  int d = legdim;
  auto comm = [](const Matrix<RatFun>& a, const Matrix<RatFun>& b) {
    return a * b - b * a;
  };
  Matrix<RatFun> r12 = kron(r, id_mat(d));
  Matrix<RatFun> r13 = embed13(rename_entries(r, {{Var::u2, Var::u3}}), d);
  Matrix<RatFun> r23 = kron(
      id_mat(d), rename_entries(r, {{Var::u1, Var::u2}, {Var::u2, Var::u3}}));
  return comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
}

Matrix<RatFun> specialize_s(const Matrix<RatFun>& m, const Rational& val) {
  Matrix<RatFun> out(m.rows(), m.cols());
  std::map<Var, Rational> point{{Var::s, val}};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = m.at(i, j).substitute(point);
  return out;
}

Matrix<RatFun> fixture_X_matrix() {
  Tensor2 X = fixture_X_sl4().X.full();
  return rename_entries(X.rep_matrix(), {{Var::z, Var::u1}, {Var::t, Var::u2}});
}

// ---------------------------------------------------------------------------
// Semiclassical comparison.

namespace {

// Is m a scalar multiple of the identity?  Returns the scalar through
// `out` when it is.
bool scalar_matrix(const Matrix<RatFun>& m, RatFun* out) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j && !m.at(i, j).is_zero()) return false;
      if (i == j && !(m.at(i, j) == m.at(0, 0))) return false;
    }
  if (out) *out = m.at(0, 0);
  return true;
}

} // namespace

SemiclassicalReport semiclassical_extract(const Matrix<RatFun>& RF) {
  int D = RF.rows();
  SemiclassicalReport rep;
  rep.rhat = Matrix<RatFun>(D, D);
  Matrix<RatFun> C0(D, D), C1(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      if (RF.at(i, j).is_zero()) continue;
      TruncSeries<RatFun> ser = expand_at(RF.at(i, j), Var::s, Rational(1), 3);
      C0.at(i, j) = ser.coeff(0);
      C1.at(i, j) = ser.coeff(1);
    }

  RatFun c0;
  rep.order0_scalar = scalar_matrix(C0, &c0);

  Matrix<RatFun> Xm = fixture_X_matrix();
  int ai = -1, aj = -1;
  for (int i = 0; i < D && ai < 0; ++i)
    for (int j = 0; j < D; ++j)
      if (i != j && !Xm.at(i, j).is_zero() && !C1.at(i, j).is_zero()) {
        ai = i;
        aj = j;
        break;
      }
  if (ai < 0) {
    rep.detail = "no usable off-diagonal anchor entry";
    return rep;
  }
  RatFun ratio = C1.at(ai, aj) / Xm.at(ai, aj);
  rep.proportionality_constant = ratio.is_constant();
  if (rep.proportionality_constant) rep.kappa = ratio.constant_value();

  rep.rhat = C1.scale(ratio.inv());
  RatFun g;
  rep.matches_fixture = scalar_matrix(rep.rhat - Xm, &g);

  rep.cybe_pass = matrix_cybe_residual(rep.rhat, 4).is_zero();

  int d = 4;
  Matrix<RatFun> P = leg_permutation(d);
  Matrix<RatFun> flipped =
      P * rename_entries(rep.rhat, {{Var::u1, Var::u2}, {Var::u2, Var::u1}}) *
      P;
  RatFun skew_scalar;
  rep.skew_mod_id = scalar_matrix(rep.rhat + flipped, &skew_scalar);
  if (rep.skew_mod_id) rep.unitarity_convention = "skew-mod-id";

  std::ostringstream os;
  os << "kappa=" << (rep.proportionality_constant ? rep.kappa.str() : "-")
     << " order0=" << (rep.order0_scalar ? c0.str() : "non-scalar")
     << " id-shift=" << (rep.matches_fixture ? g.str() : "-");
  rep.detail = os.str();
  return rep;
}

} // namespace rmf

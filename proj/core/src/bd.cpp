#include "rmf/bd.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

void check_indices(const BDTriple& t) {
  if (t.n < 2) throw DomainError("BDTriple: n must be at least 2");
  auto in_range = [&](int a) { return a >= 1 && a <= t.n - 1; };
  for (int a : t.gamma1)
    if (!in_range(a))
      throw DomainError("BDTriple: gamma1 index " + std::to_string(a) +
                        " outside 1.." + std::to_string(t.n - 1));
  for (int a : t.gamma2)
    if (!in_range(a))
      throw DomainError("BDTriple: gamma2 index " + std::to_string(a) +
                        " outside 1.." + std::to_string(t.n - 1));
  for (const auto& [a, b] : t.tau)
    if (!in_range(a) || !in_range(b))
      throw DomainError("BDTriple: tau entry (" + std::to_string(a) + " -> " +
                        std::to_string(b) + ") outside 1.." +
                        std::to_string(t.n - 1));
}

int vec_index(int r, int i, int j) { return (i - 1) * r + (j - 1); }

}  // namespace

std::string BDTriple::str() const {
  std::ostringstream os;
  auto set_str = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ",";
      s += "a" + std::to_string(v[k]);
    }
    return s + "}";
  };
  os << "sl(" << n << "): gamma1=" << set_str(gamma1)
     << " gamma2=" << set_str(gamma2) << " tau={";
  bool first = true;
  for (const auto& [a, b] : tau) {
    if (!first) os << ",";
    first = false;
    os << "a" << a << "->a" << b;
  }
  os << "}";
  return os.str();
}

TripleReport validate_triple(const BDTriple& t) {
  check_indices(t);
  TripleReport rep;
  auto& v = rep.violations;

  std::set<int> g1(t.gamma1.begin(), t.gamma1.end());
  std::set<int> g2(t.gamma2.begin(), t.gamma2.end());
  if (g1.size() != t.gamma1.size()) v.push_back("gamma1 contains duplicates");
  if (g2.size() != t.gamma2.size()) v.push_back("gamma2 contains duplicates");

  std::set<int> dom, img;
  for (const auto& [a, b] : t.tau) {
    dom.insert(a);
    img.insert(b);
  }
  if (dom != g1) v.push_back("tau is not defined on exactly gamma1");
  if (img != g2 || img.size() != t.tau.size())
    v.push_back("tau is not a bijection onto gamma2");
  if (!v.empty()) {
    rep.valid = false;
    return rep;
  }

  const auto& g = build_sl(t.n);
  const Matrix<Rational> A = g.cartan_matrix();
  for (int a : t.gamma1)
    for (int b : t.gamma1) {
      int ta = t.tau.at(a), tb = t.tau.at(b);
      if (A.at(ta - 1, tb - 1) != A.at(a - 1, b - 1))
        v.push_back("pairing not preserved on (a" + std::to_string(a) + ", a" +
                    std::to_string(b) + ")");
    }

  for (int a : t.gamma1) {
    int x = a;
    bool escapes = false;
    for (std::size_t step = 0; step < t.gamma1.size(); ++step) {
      if (!g1.count(x)) {
        escapes = true;
        break;
      }
      x = t.tau.at(x);
    }
    if (!escapes && g1.count(x))
      v.push_back("orbit of a" + std::to_string(a) + " never leaves gamma1");
  }

  rep.valid = v.empty();
  return rep;
}

std::vector<BDTriple> enumerate_triples(int n) {
  if (n < 2) throw DomainError("enumerate_triples: n must be at least 2");
  const int r = n - 1;
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i + 1;

  // All subsets, grouped by size, each sorted ascending.
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<BDTriple> out;
  for (const auto& s1 : subsets)
    for (const auto& s2 : subsets) {
      if (s1.size() != s2.size()) continue;
      // Run over bijections as permutations of s2.
      std::vector<int> imgs = s2;
      std::sort(imgs.begin(), imgs.end());
      do {
        BDTriple t;
        t.n = n;
        t.gamma1 = s1;
        t.gamma2 = s2;
        for (std::size_t k = 0; k < s1.size(); ++k) t.tau[s1[k]] = imgs[k];
        if (validate_triple(t).valid) out.push_back(std::move(t));
      } while (std::next_permutation(imgs.begin(), imgs.end()));
    }
  return out;
}

CartanTensor R0Solution::member(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != kernel_basis.size())
    throw StructuralError("R0Solution::member: coefficient count mismatch");
  CartanTensor out = particular;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out = out + kernel_basis[k].scale(coeffs[k]);
  return out;
}

R0Solution solve_r0(const BDTriple& t) {
  TripleReport rep = validate_triple(t);
  if (!rep.valid)
    throw DomainError("solve_r0: invalid triple: " + rep.violations.front());

  const auto& g = build_sl(t.n);
  const int r = t.n - 1;
  const Matrix<Rational> A = g.cartan_matrix();
  const Matrix<Rational>& Ainv = g.cartan_inverse();

  const int unknowns = r * r;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  // Symmetric part: c(i,j) + c(j,i) = A^{-1}(i,j) for i <= j.
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      std::vector<Rational> row(unknowns, Rational(0));
      row[vec_index(r, i, j)] += Rational(1);
      row[vec_index(r, j, i)] += Rational(1);
      rows.push_back(std::move(row));
      rhs.push_back(Ainv.at(i - 1, j - 1));
    }

  // Root conditions: for a in gamma1, m = 1..r,
  //   sum_k A(tau(a), k) c(k, m) + sum_l c(m, l) A(a, l) = 0.
  for (int a : t.gamma1) {
    const int ta = t.tau.at(a);
    for (int m = 1; m <= r; ++m) {
      std::vector<Rational> row(unknowns, Rational(0));
      for (int k = 1; k <= r; ++k)
        row[vec_index(r, k, m)] += A.at(ta - 1, k - 1);
      for (int l = 1; l <= r; ++l)
        row[vec_index(r, m, l)] += A.at(a - 1, l - 1);
      rows.push_back(std::move(row));
      rhs.push_back(Rational(0));
    }
  }

  const int m_rows = static_cast<int>(rows.size());
  Matrix<Rational> M(m_rows, unknowns);
  Matrix<Rational> aug(m_rows, unknowns + 1);
  for (int i = 0; i < m_rows; ++i) {
    for (int j = 0; j < unknowns; ++j) {
      M.at(i, j) = rows[i][j];
      aug.at(i, j) = rows[i][j];
    }
    aug.at(i, unknowns) = rhs[i];
  }

  std::vector<int> pivots = rref(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == unknowns)
      throw IntegrityError("solve_r0: constraint system inconsistent");

  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug.at(static_cast<int>(k), unknowns);

  Matrix<Rational> part(r, r);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) part.at(i - 1, j - 1) = x[vec_index(r, i, j)];

  R0Solution sol;
  sol.particular = CartanTensor(t.n, std::move(part));
  for (const auto& vec : nullspace(M, Rational(1))) {
    Matrix<Rational> kmat(r, r);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        kmat.at(i - 1, j - 1) = vec[vec_index(r, i, j)];
    sol.kernel_basis.emplace_back(t.n, std::move(kmat));
  }
  return sol;
}

std::vector<std::string> r0_constraint_failures(const BDTriple& t,
                                                const CartanTensor& r0) {
  TripleReport rep = validate_triple(t);
  if (!rep.valid)
    throw DomainError("r0_constraint_failures: invalid triple: " +
                      rep.violations.front());
  if (r0.n != t.n)
    throw StructuralError("r0_constraint_failures: rank mismatch");

  const auto& g = build_sl(t.n);
  const int r = t.n - 1;
  const Matrix<Rational> A = g.cartan_matrix();
  const Matrix<Rational>& Ainv = g.cartan_inverse();

  std::vector<std::string> fails;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      if (r0.c.at(i, j) + r0.c.at(j, i) != Ainv.at(i, j))
        fails.push_back("symmetric part off at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");

  for (int a : t.gamma1) {
    const int ta = t.tau.at(a);
    for (int m = 1; m <= r; ++m) {
      Rational acc(0);
      for (int k = 1; k <= r; ++k)
        acc += A.at(ta - 1, k - 1) * r0.c.at(k - 1, m - 1);
      for (int l = 1; l <= r; ++l)
        acc += r0.c.at(m - 1, l - 1) * A.at(a - 1, l - 1);
      if (!acc.is_zero())
        fails.push_back("root condition off for a" + std::to_string(a) +
                        " at h_" + std::to_string(m));
    }
  }
  return fails;
}

bool tau_applies(const BDTriple& t, const RootA& alpha, RootA* image) {
  std::set<int> g1(t.gamma1.begin(), t.gamma1.end());
  std::set<int> imgs;
  for (int k = alpha.i; k < alpha.j; ++k) {
    if (!g1.count(k) || !t.tau.count(k)) return false;
    imgs.insert(t.tau.at(k));
  }
  if (imgs.empty()) return false;
  const int lo = *imgs.begin(), hi = *imgs.rbegin();
  if (hi - lo + 1 != static_cast<int>(imgs.size()))
    return false;  // image constituents do not form an interval
  if (image) *image = RootA(lo, hi + 1);
  return true;
}

bool theta_image(const BDTriple& t, const RootA& alpha, RootA* beta,
                 Rational* coeff) {
  RootA img;
  if (!tau_applies(t, alpha, &img)) return false;
  if (alpha.is_simple()) {
    if (beta) *beta = img;
    if (coeff) *coeff = Rational(1);
    return true;
  }
  // theta(E_{(i,j)}) = [theta(E_{(i,i+1)}), theta(E_{(i+1,j)})].
  RootA left, right;
  Rational cl, cr;
  if (!theta_image(t, RootA(alpha.i, alpha.i + 1), &left, &cl) ||
      !theta_image(t, RootA(alpha.i + 1, alpha.j), &right, &cr))
    return false;
  // [E_{a,b}, E_{c,d}] = delta(b,c) E_{a,d} - delta(d,a) E_{c,b}; for two
  // positive root vectors whose roots sum to a root, exactly one term fires.
  RootA prod;
  Rational sign;
  if (left.j == right.i) {
    prod = RootA(left.i, right.j);
    sign = Rational(1);
  } else if (right.j == left.i) {
    prod = RootA(right.i, left.j);
    sign = Rational(-1);
  } else {
    throw IntegrityError("theta_image: images of " + alpha.str() +
                         " do not compose to a root");
  }
  if (prod != img)
    throw IntegrityError("theta_image: bracket image of " + alpha.str() +
                         " disagrees with the additive image");
  if (beta) *beta = prod;
  if (coeff) *coeff = cl * cr * sign;
  return true;
}

std::vector<ChainPair> tau_chain_pairs(const BDTriple& t) {
  const auto& g = build_sl(t.n);
  std::vector<ChainPair> out;
  for (const RootA& alpha : g.positive_roots()) {
    RootA cur = alpha;
    Rational acc(1);
    for (int step = 0; ; ++step) {
      if (step > 2 * t.n)
        throw IntegrityError("tau_chain_pairs: runaway orbit at " +
                             alpha.str());
      RootA next;
      Rational c;
      if (!theta_image(t, cur, &next, &c)) break;
      acc *= c;
      out.push_back({alpha, next, acc});
      cur = next;
    }
  }
  return out;
}

Tensor2 assemble_r_with(const BDTriple& t, const CartanTensor& r0, int dir,
                        int sign) {
  if (dir != 0 && dir != 1)
    throw DomainError("assemble_r_with: dir must be 0 or 1");
  if (sign != 1 && sign != -1)
    throw DomainError("assemble_r_with: sign must be +1 or -1");
  auto fails = r0_constraint_failures(t, r0);  // validates the triple too
  if (!fails.empty())
    throw DomainError("assemble_r_with: r0 outside the solution set: " +
                      fails.front());

  const auto& g = build_sl(t.n);
  Tensor2 r = cartan_to_tensor2(r0);
  const RatFun one(Rational(1));
  for (const RootA& alpha : g.positive_roots()) {
    const int pos = g.e_index(alpha.i, alpha.j);
    const int neg = g.e_index(alpha.j, alpha.i);
    r.add(neg, pos, one);
  }
  for (const ChainPair& p : tau_chain_pairs(t)) {
    const int a_pos = g.e_index(p.alpha.i, p.alpha.j);
    const int a_neg = g.e_index(p.alpha.j, p.alpha.i);
    const int b_pos = g.e_index(p.beta.i, p.beta.j);
    const int b_neg = g.e_index(p.beta.j, p.beta.i);
    const RatFun w(p.coeff * Rational(sign));
    const RatFun wneg(p.coeff * Rational(-sign));
    if (dir == 0) {
      r.add(a_neg, b_pos, w);
      r.add(b_pos, a_neg, wneg);
    } else {
      r.add(a_pos, b_neg, w);
      r.add(b_neg, a_pos, wneg);
    }
  }
  return r;
}

Tensor2 assemble_r(const BDTriple& t, const CartanTensor& r0) {
  return assemble_r_with(t, r0, kWedgeDir, kWedgeSign);
}

BDTriple cg_triple(int n) {
  if (n < 2) throw DomainError("cg_triple: n must be at least 2");
  BDTriple t;
  t.n = n;
  for (int i = 1; i <= n - 2; ++i) {
    t.gamma1.push_back(i);
    t.gamma2.push_back(i + 1);
    t.tau[i] = i + 1;
  }
  return t;
}

BDTriple empty_triple(int n) {
  if (n < 2) throw DomainError("empty_triple: n must be at least 2");
  BDTriple t;
  t.n = n;
  return t;
}

Tensor2 dj_rmatrix(int n) {
  return assemble_r(empty_triple(n), cartan_casimir(n).scale(Rational(1, 2)));
}

}  // namespace rmf

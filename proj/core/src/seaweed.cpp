#include "rmf/seaweed.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

std::vector<Rational> flatten(const Matrix<Rational>& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

/// Solves target = sum coeffs[k] * span[k] exactly.  Returns false when the
/// target lies outside the span.
bool in_span(const std::vector<Matrix<Rational>>& span,
             const Matrix<Rational>& target, std::vector<Rational>* coeffs) {
  const int cols = static_cast<int>(span.size());
  const int rows = target.rows() * target.cols();
  Matrix<Rational> aug(rows, cols + 1);
  for (int k = 0; k < cols; ++k) {
    auto f = flatten(span[k]);
    for (int r = 0; r < rows; ++r) aug.at(r, k) = f[r];
  }
  auto ft = flatten(target);
  for (int r = 0; r < rows; ++r) aug.at(r, cols) = ft[r];

  auto pivots = rref(aug);
  for (int p : pivots)
    if (p == cols) return false;
  if (coeffs) {
    coeffs->assign(cols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
      (*coeffs)[pivots[k]] = aug.at(static_cast<int>(k), cols);
  }
  return true;
}

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Linear independence of Laurent matrices over the base rationals: flatten
/// one coordinate per (entry position, loop degree).  Independence over the
/// loop function field would be the wrong notion here — u * E and E are
/// field-proportional yet represent distinct algebra elements.
bool images_independent(const std::vector<Matrix<RatFun>>& img) {
  std::map<std::tuple<int, int, int>, int> cols;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  for (const auto& x : img) {
    std::vector<std::pair<int, Rational>> row;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) {
        const RatFun& f = x.at(i, j);
        if (f.is_zero()) continue;
        int shift = 0;
        for (const auto& [fac, e] : f.den_factors()) {
          int fdeg = 0;
          for (const auto& [mono, c] : fac.terms())
            for (std::size_t v = 0; v < fac.vars().size(); ++v)
              if (fac.vars()[v] == kLoopVar)
                fdeg = std::max(fdeg, static_cast<int>(mono[v]));
          shift += fdeg * e;
        }
        const auto& vars = f.num().vars();
        int upos = -1;
        for (std::size_t v = 0; v < vars.size(); ++v)
          if (vars[v] == kLoopVar) upos = static_cast<int>(v);
        for (const auto& [mono, c] : f.num().terms()) {
          const int e = upos >= 0 ? mono[upos] : 0;
          auto key = std::make_tuple(i, j, e - shift);
          auto [it, inserted] = cols.try_emplace(
              key, static_cast<int>(cols.size()));
          row.push_back({it->second, c});
        }
      }
    rows.push_back(std::move(row));
  }
  Matrix<Rational> flat(static_cast<int>(rows.size()),
                        std::max<int>(1, static_cast<int>(cols.size())));
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, val] : rows[r]) flat.at(r, c) = val;
  return rank(flat) == static_cast<int>(rows.size());
}

}  // namespace

SeaweedAlg subalgebra_from_basis(int n, const std::vector<std::string>& names,
                                 const std::vector<Matrix<Rational>>& basis,
                                 const std::string& label) {
  if (n < 2) throw DomainError("subalgebra_from_basis: n must be at least 2");
  if (names.size() != basis.size())
    throw StructuralError("subalgebra_from_basis: name/basis count mismatch");
  const int d = static_cast<int>(basis.size());
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw StructuralError("subalgebra_from_basis: wrong matrix shape");

  // Linear independence.
  Matrix<Rational> flat(d, n * n);
  for (int k = 0; k < d; ++k) {
    auto f = flatten(basis[k]);
    for (int c = 0; c < n * n; ++c) flat.at(k, c) = f[c];
  }
  if (rank(flat) != d)
    throw StructuralError("subalgebra_from_basis: basis is linearly dependent");

  SeaweedAlg a;
  a.n = n;
  a.label = label;
  a.names = names;
  a.basis = basis;
  a.struct_consts.assign(
      d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto br = commutator(basis[i], basis[j]);
      if (br.is_zero()) continue;
      std::vector<Rational> coeffs;
      if (!in_span(basis, br, &coeffs))
        throw IntegrityError("subalgebra_from_basis: bracket [" + names[i] +
                             ", " + names[j] + "] leaves the span of " +
                             label);
      for (int k = 0; k < d; ++k)
        if (!coeffs[k].is_zero())
          a.struct_consts[i][j].push_back({k, coeffs[k]});
    }
  return a;
}

SeaweedAlg build_seaweed(int n, int i, int j) {
  if (n < 2) throw DomainError("build_seaweed: n must be at least 2");
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw DomainError("build_seaweed: cut positions must lie in 1..n-1");

  const auto& g = build_sl(n);
  std::vector<std::string> names;
  std::vector<Matrix<Rational>> basis;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      if (k == l) continue;
      const bool dropped =
          (k < l) ? (k <= i && i < l) : (l <= j && j < k);
      if (dropped) continue;
      names.push_back("E" + std::to_string(k) + std::to_string(l));
      basis.push_back(g.basis_matrix(g.e_index(k, l)));
    }
  for (int k = 1; k <= n - 1; ++k) {
    names.push_back("h" + std::to_string(k));
    basis.push_back(g.basis_matrix(g.h_index(k)));
  }
  return subalgebra_from_basis(
      n, names, basis,
      "SW(" + std::to_string(n) + ";" + std::to_string(i) + "," +
          std::to_string(j) + ")");
}

std::vector<Rational> p_element(int n) {
  if (n < 2) throw DomainError("p_element: n must be at least 2");
  std::vector<Rational> c;
  for (int k = 1; k <= n - 1; ++k) c.push_back(Rational(n - 2 * k, n));
  return c;
}

SeaweedAlg restricted_seaweed(int n) {
  if (n < 3) throw DomainError("restricted_seaweed: n must be at least 3");
  const auto& g = build_sl(n);
  SeaweedAlg full = build_seaweed(n, 1, n - 1);

  std::vector<std::string> names;
  std::vector<Matrix<Rational>> basis;
  for (int k = 0; k < full.dim(); ++k) {
    if (full.names[k][0] == 'h') continue;  // Cartan handled below
    names.push_back(full.names[k]);
    basis.push_back(full.basis[k]);
  }
  for (int k = 2; k <= n - 2; ++k) {
    names.push_back("h" + std::to_string(k));
    basis.push_back(g.basis_matrix(g.h_index(k)));
  }
  Matrix<Rational> p(n, n);
  auto pc = p_element(n);
  for (int k = 1; k <= n - 1; ++k)
    p += g.basis_matrix(g.h_index(k)).scale(pc[k - 1]);
  names.push_back("p");
  basis.push_back(p);

  return subalgebra_from_basis(n, names, basis,
                               "SW'(" + std::to_string(n) + ")");
}

int algebra_index(const SeaweedAlg& a, int trials, unsigned long seed) {
  if (trials < 1) throw DomainError("algebra_index: trials must be >= 1");
  const int d = a.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);

  int best_rank = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> phi(d);
    for (auto& x : phi) x = Rational(num(rng), den(rng));
    Matrix<Rational> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc(0);
        for (const auto& [k, c] : a.struct_consts[i][j]) acc += c * phi[k];
        m.at(i, j) = acc;
      }
    best_rank = std::max(best_rank, rank(m));
  }
  return d - best_rank;
}

namespace {

EmbeddingMap iota5_base() {
  const auto& g5 = build_sl(5);
  const auto& g4 = build_sl(4);
  EmbeddingMap m;

  auto lift0 = [&](const Matrix<Rational>& x) {
    Matrix<RatFun> out(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.at(i, j) = RatFun(x.at(i, j));
    return out;
  };

  // p -> (3/4) h_1 + (1/2) h_2 + (1/4) h_3 = diag(3/4, -1/4, -1/4, -1/4).
  Matrix<Rational> p5(5, 5);
  auto pc = p_element(5);
  for (int k = 1; k <= 4; ++k)
    p5 += g5.basis_matrix(g5.h_index(k)).scale(pc[k - 1]);
  Matrix<Rational> p_img =
      g4.basis_matrix(g4.h_index(1)).scale(Rational(3, 4)) +
      g4.basis_matrix(g4.h_index(2)).scale(Rational(1, 2)) +
      g4.basis_matrix(g4.h_index(3)).scale(Rational(1, 4));
  m.names.push_back("p");
  m.source.push_back(p5);
  m.image.push_back(lift0(p_img));

  m.names.push_back("e_a4");
  m.source.push_back(g5.basis_matrix(g5.e_index(4, 5)));
  m.image.push_back(loop_realize(4, "e0"));

  m.names.push_back("e_-a1");
  m.source.push_back(g5.basis_matrix(g5.e_index(2, 1)));
  m.image.push_back(loop_realize(4, "f1"));

  m.names.push_back("e_a2");
  m.source.push_back(g5.basis_matrix(g5.e_index(2, 3)));
  m.image.push_back(loop_realize(4, "e2"));

  m.names.push_back("e_a3");
  m.source.push_back(g5.basis_matrix(g5.e_index(3, 4)));
  m.image.push_back(loop_realize(4, "e3"));

  m.names.push_back("h_a2");
  m.source.push_back(g5.basis_matrix(g5.h_index(2)));
  m.image.push_back(loop_realize(4, "h2"));

  m.names.push_back("h_a3");
  m.source.push_back(g5.basis_matrix(g5.h_index(3)));
  m.image.push_back(loop_realize(4, "h3"));

  return m;
}

}  // namespace

EmbeddingMap iota5() { return iota5_base(); }

EmbeddingMap iota5_completed() {
  const auto& g5 = build_sl(5);
  EmbeddingMap m = iota5_base();
  m.names.push_back("e_-a2");
  m.source.push_back(g5.basis_matrix(g5.e_index(3, 2)));
  m.image.push_back(loop_realize(4, "f2"));
  m.names.push_back("e_-a3");
  m.source.push_back(g5.basis_matrix(g5.e_index(4, 3)));
  m.image.push_back(loop_realize(4, "f3"));
  return m;
}

EmbeddingReport verify_embedding(const EmbeddingMap& m) {
  if (m.names.size() != m.source.size() || m.names.size() != m.image.size())
    throw StructuralError("verify_embedding: ragged assignment");
  EmbeddingReport rep;

  std::vector<std::string> names = m.names;
  std::vector<Matrix<Rational>> src = m.source;
  std::vector<Matrix<RatFun>> img;
  for (const auto& x : m.image) img.push_back(x);

  std::set<std::string> seen_failures;
  auto note = [&](const std::string& f) {
    if (seen_failures.insert(f).second) rep.failures.push_back(f);
  };

  // Grow the closure by forced bracket images; re-check every pair whenever
  // the closure gains an element, so the final pass covers all pairs.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = src.size();
    for (std::size_t i = 0; i < count && !grew; ++i)
      for (std::size_t j = 0; j < count && !grew; ++j) {
        auto cs = commutator(src[i], src[j]);
        auto ct = commutator(img[i], img[j]);
        std::vector<Rational> coeffs;
        if (in_span(src, cs, &coeffs)) {
          Matrix<RatFun> expected(4, 4);
          for (std::size_t k = 0; k < src.size(); ++k)
            if (!coeffs[k].is_zero())
              expected += img[k].scale(RatFun(coeffs[k]));
          if (!(ct - expected).is_zero())
            note("bracket (" + names[i] + ", " + names[j] +
                 "): image disagrees with the forced expansion");
        } else {
          names.push_back("[" + names[i] + "," + names[j] + "]");
          src.push_back(cs);
          img.push_back(ct);
          grew = true;
        }
        if (src.size() > 24)
          throw IntegrityError("verify_embedding: closure exceeds sl(5)");
      }
  }
  rep.closure_dim = static_cast<int>(src.size());

  // The closure must stay inside the restricted algebra.
  SeaweedAlg swp = restricted_seaweed(5);
  for (std::size_t k = 0; k < src.size(); ++k)
    if (!in_span(swp.basis, src[k], nullptr))
      throw IntegrityError("verify_embedding: closure element " + names[k] +
                           " leaves the restricted algebra");

  // Injectivity: the closure images must be linearly independent over the
  // base rationals.
  if (!images_independent(img)) note("image set is linearly dependent");

  // Degree audit: all loop degrees must stay in {0, +1}.
  std::set<int> degs;
  for (const auto& x : img)
    if (!x.is_zero())
      for (int d : loop_degrees(x)) degs.insert(d);
  rep.degrees.assign(degs.begin(), degs.end());
  for (int d : degs)
    if (d != 0 && d != 1)
      note("loop degree " + std::to_string(d) + " appears in the image");

  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace rmf

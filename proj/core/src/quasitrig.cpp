#include "rmf/quasitrig.hpp"

#include <algorithm>
#include <sstream>

#include "rmf/errors.hpp"
#include "rmf/fixtures.hpp"

namespace rmf {

namespace {

RatFun rf_z() { return RatFun::variable(Var::z); }
RatFun rf_t() { return RatFun::variable(Var::t); }

void add_unit(Tensor2* r, int i, int j, int k, int l, const RatFun& c) {
  const LieAlgSL& g = build_sl(r->n());
  r->add(g.e_index(i, j), g.e_index(k, l), c);
}

/// The quadratic block of the duplicated display, before antisymmetrization:
/// (e23 + e34) (x) e21 + e24 (x) e31 + e34 (x) e32.
Tensor2 printed_wedge_block() {
  Tensor2 w(4);
  const RatFun one = RatFun::one();
  add_unit(&w, 2, 3, 2, 1, one);
  add_unit(&w, 3, 4, 2, 1, one);
  add_unit(&w, 2, 4, 3, 1, one);
  add_unit(&w, 3, 4, 3, 2, one);
  return w;
}

/// The spectral tail of the display, as printed:
/// (z-t)(e21 (x) e41 + e41 (x) e21 + e31 (x) e31)
///   + z e31 (x) e42 - t e42 (x) e31 + z e41 (x) e32 - t e32 (x) e41.
Tensor2 printed_tail() {
  Tensor2 s(4);
  const RatFun zt = rf_z() - rf_t();
  add_unit(&s, 2, 1, 4, 1, zt);
  add_unit(&s, 4, 1, 2, 1, zt);
  add_unit(&s, 3, 1, 3, 1, zt);
  add_unit(&s, 3, 1, 4, 2, rf_z());
  add_unit(&s, 4, 2, 3, 1, -rf_t());
  add_unit(&s, 4, 1, 3, 2, rf_z());
  add_unit(&s, 3, 2, 4, 1, -rf_t());
  return s;
}

std::string candidate_desc(const FixtureCandidate& c) {
  std::ostringstream os;
  os << "scope=" << c.scope << " lambda=" << c.lambda.str() << " ("
     << (c.inside_sk ? "inside" : "outside") << " SK)";
  if (c.repaired) {
    os << " [repaired: wedge_sign=" << c.wedge_sign;
    if (!c.completion.empty()) os << " completion=" << c.completion;
    os << "]";
  }
  return os.str();
}

}  // namespace

Tensor2 QuasiTrigR::full() const { return polar_part(n) + poly_part; }

Tensor2 polar_part(int n) {
  return casimir(n).scale(rf_t() / (rf_z() - rf_t()));
}

namespace {

FixtureResult compute_fixture_X_sl4() {
  const Tensor2 dj = dj_rmatrix(4);
  const Tensor2 wedge = printed_wedge_block();
  const Tensor2 tail = printed_tail();
  const CartanTensor r0 = fixture_r0_4_hat();
  const Tensor2 polar = polar_part(4);

  const std::vector<Rational> lambdas = {Rational(-1), Rational(-1, 2),
                                         Rational(1, 2), Rational(1)};
  const std::vector<std::string> scopes = {"wedge-only", "wedge-and-cartan",
                                           "entire-remainder"};

  std::vector<FixtureCandidate> candidates;
  std::vector<Tensor2> poly_parts;
  auto record = [&](FixtureCandidate c, const Tensor2& poly) {
    const Tensor3 res = cybe_residual(polar + poly);
    c.residual_zero = res.is_zero();
    c.residual_terms = static_cast<int>(res.term_count());
    candidates.push_back(std::move(c));
    poly_parts.push_back(poly);
  };

  // Stage 1: the documented readings of where the SK bracket closes.
  for (const std::string& scope : scopes) {
    for (const Rational& lam : lambdas) {
      const Tensor2 corr = cartan_to_tensor2(r0.scale(lam));
      Tensor2 poly(4);
      if (scope == "wedge-only") {
        poly = dj + sk(wedge) + corr + tail;
      } else if (scope == "wedge-and-cartan") {
        poly = dj + sk(wedge + corr) + tail;
      } else {
        poly = dj + sk(wedge + corr + tail);
      }
      FixtureCandidate c;
      c.scope = scope;
      c.lambda = lam;
      c.inside_sk = (scope != "wedge-only");
      record(std::move(c), poly);
    }
  }

  bool documented_pass = false;
  for (const FixtureCandidate& c : candidates) documented_pass |= c.residual_zero;

  // Stage 2 (only when the display as printed fails everywhere): sweep the
  // nearest structural repairs.  The quadratic block may be reversed inside
  // SK, and the display may omit completion terms; the spectral pairs it
  // does print all have total root height 4, so the sweep offers the three
  // height-4 lowering pairs that are absent, each as SK(z a (x) b) with
  // coefficient in {-1, 0, +1}.
  if (!documented_pass) {
    struct Completion {
      Tensor2 term;
      std::string name;
    };
    std::vector<Completion> comps;
    auto zpair = [](int i, int j, int k, int l) {
      Tensor2 m(4);
      add_unit(&m, i, j, k, l, rf_z());
      return sk(m);
    };
    comps.push_back({zpair(4, 1, 4, 3), "SK(z e41(x)e43)"});
    comps.push_back({zpair(4, 3, 4, 1), "SK(z e43(x)e41)"});
    comps.push_back({zpair(4, 2, 4, 2), "SK(z e42(x)e42)"});

    for (int sigma : {1, -1}) {
      for (const Rational& lam : lambdas) {
        const Tensor2 corr = cartan_to_tensor2(r0.scale(lam));
        const Tensor2 base =
            dj + sk(wedge.scale(RatFun(Rational(sigma))) + corr) + tail;
        const int m = static_cast<int>(comps.size());
        std::vector<int> mu(m, 0);
        // Odometer over {-1, 0, +1}^m.
        for (int code = 0; code < 27; ++code) {
          int v = code;
          for (int k = 0; k < m; ++k) {
            mu[k] = v % 3 - 1;
            v /= 3;
          }
          bool all_zero = true;
          for (int k = 0; k < m; ++k) all_zero &= (mu[k] == 0);
          if (sigma == 1 && all_zero) continue;  // duplicates stage 1
          Tensor2 poly = base;
          std::string comp_desc;
          for (int k = 0; k < m; ++k) {
            if (mu[k] == 0) continue;
            poly = poly + comps[k].term.scale(RatFun(Rational(mu[k])));
            comp_desc += (mu[k] > 0 ? "+" : "-") + comps[k].name;
          }
          FixtureCandidate c;
          c.scope = "wedge-and-cartan";
          c.lambda = lam;
          c.inside_sk = true;
          c.wedge_sign = sigma;
          c.completion = comp_desc;
          c.repaired = true;
          record(std::move(c), poly);
        }
      }
    }
  }

  std::vector<size_t> winners;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].residual_zero) winners.push_back(i);
  }
  if (winners.size() != 1) {
    std::ostringstream os;
    os << "fixture_X_sl4: " << winners.size()
       << " candidate readings satisfy the Yang-Baxter identity (need exactly "
          "one); residual census:";
    for (const FixtureCandidate& c : candidates) {
      os << "\n  " << candidate_desc(c) << " -> "
         << (c.residual_zero ? "residual 0"
                             : "residual terms " + std::to_string(c.residual_terms));
    }
    throw IntegrityError(os.str());
  }

  FixtureResult out(QuasiTrigR(4, poly_parts[winners[0]]));
  out.candidates = std::move(candidates);
  out.winner = candidate_desc(out.candidates[winners[0]]);
  out.display_repaired = out.candidates[winners[0]].repaired;
  return out;
}

}  // namespace

FixtureResult fixture_X_sl4() {
  static const FixtureResult cached = compute_fixture_X_sl4();
  return cached;
}

Tensor2 classical_twist(const QuasiTrigR& x) {
  Tensor2 s = x.poly_part - dj_rmatrix(x.n);
  for (const auto& [legs, c] : s.terms()) {
    if (!c.is_polynomial()) {
      throw IntegrityError("classical_twist: non-polynomial coefficient at (" +
                           std::to_string(legs.first) + ", " +
                           std::to_string(legs.second) + "): " + c.str());
    }
  }
  return s;
}

Rational q_form(const std::pair<Matrix<Rational>, Matrix<Rational>>& a,
                const std::pair<Matrix<Rational>, Matrix<Rational>>& b) {
  return trace_form(a.first, b.first) - trace_form(a.second, b.second);
}

PairBasis build_W(const Matrix<Rational>& t) {
  if (!t.is_square() || t.rows() < 2) {
    throw DomainError("build_W: T must be square of size >= 2");
  }
  const int n = t.rows();
  if (det(t, Rational(1)).is_zero()) {
    throw DomainError("build_W: T is singular");
  }
  const Matrix<Rational> tinv = inverse(t, Rational(1));
  const LieAlgSL& g = build_sl(n);
  PairBasis w;
  w.n = n;
  for (int i = 0; i < g.dim(); ++i) {
    const Matrix<Rational>& b = g.basis_matrix(i);
    w.basis.emplace_back(t * b * tinv, b);
  }
  return w;
}

PairBasis diagonal_subalgebra(int n) {
  const LieAlgSL& g = build_sl(n);
  PairBasis d;
  d.n = n;
  for (int i = 0; i < g.dim(); ++i) {
    d.basis.emplace_back(g.basis_matrix(i), g.basis_matrix(i));
  }
  return d;
}

namespace {

/// One row per pair (x1, x2), coordinates = entries of x1 then entries of x2.
Matrix<Rational> flatten_pairs(const PairBasis& w) {
  const int n = w.n;
  Matrix<Rational> m(static_cast<int>(w.basis.size()), 2 * n * n);
  for (size_t r = 0; r < w.basis.size(); ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m.at(static_cast<int>(r), i * n + j) = w.basis[r].first.at(i, j);
        m.at(static_cast<int>(r), n * n + i * n + j) = w.basis[r].second.at(i, j);
      }
    }
  }
  return m;
}

}  // namespace

LagrangianReport check_lagrangian(const PairBasis& w) {
  LagrangianReport rep;
  rep.dim = rank(flatten_pairs(w));
  rep.isotropic = true;
  for (size_t i = 0; i < w.basis.size() && rep.isotropic; ++i) {
    for (size_t j = i; j < w.basis.size(); ++j) {
      if (!q_form(w.basis[i], w.basis[j]).is_zero()) {
        rep.isotropic = false;
        break;
      }
    }
  }
  rep.lagrangian = rep.isotropic && rep.dim == w.n * w.n - 1;
  return rep;
}

TransversalReport check_transversal(const PairBasis& w, const PairBasis& l) {
  if (w.n != l.n) throw DomainError("check_transversal: size mismatch");
  const int ambient = 2 * (w.n * w.n - 1);
  const Matrix<Rational> mw = flatten_pairs(w);
  const Matrix<Rational> ml = flatten_pairs(l);
  Matrix<Rational> stacked(mw.rows() + ml.rows(), mw.cols());
  for (int i = 0; i < mw.rows(); ++i) {
    for (int j = 0; j < mw.cols(); ++j) stacked.at(i, j) = mw.at(i, j);
  }
  for (int i = 0; i < ml.rows(); ++i) {
    for (int j = 0; j < ml.cols(); ++j) stacked.at(mw.rows() + i, j) = ml.at(i, j);
  }
  const int rw = rank(mw);
  const int rl = rank(ml);
  TransversalReport rep;
  rep.sum_dim = rank(stacked);
  rep.intersection_dim = rw + rl - rep.sum_dim;
  rep.transversal = rep.intersection_dim == 0 && rep.sum_dim == ambient;
  return rep;
}

}  // namespace rmf

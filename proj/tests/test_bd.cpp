#include "rmf/bd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "rmf/cybe.hpp"
#include "rmf/errors.hpp"
#include "rmf/fixtures.hpp"
#include "rmf/liecore.hpp"

using namespace rmf;

namespace {

BDTriple make_triple(int n, std::vector<int> g1, std::vector<int> g2,
                     std::map<int, int> tau) {
  BDTriple t;
  t.n = n;
  t.gamma1 = std::move(g1);
  t.gamma2 = std::move(g2);
  t.tau = std::move(tau);
  return t;
}

bool solves_cybe(const Tensor2& r) { return cybe_residual(r).is_zero(); }

}  // namespace

TEST_CASE("triple validation accepts the shift and empty data") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(validate_triple(cg_triple(n)).valid);
    CHECK(validate_triple(empty_triple(n)).valid);
  }
  // Disjoint blocks mapped across the diagram, order reversed.
  auto rev = make_triple(5, {1, 2}, {3, 4}, {{1, 4}, {2, 3}});
  CHECK(validate_triple(rev).valid);
  // Disconnected pair onto a disconnected pair.
  auto disc = make_triple(5, {1, 3}, {2, 4}, {{1, 2}, {3, 4}});
  CHECK(validate_triple(disc).valid);
}

TEST_CASE("triple validation rejects cycles and pairing violations") {
  // A swap is a cycle.
  auto swap2 = make_triple(3, {1, 2}, {1, 2}, {{1, 2}, {2, 1}});
  auto rep = validate_triple(swap2);
  CHECK_FALSE(rep.valid);
  bool mentions_orbit = false;
  for (const auto& v : rep.violations)
    mentions_orbit |= v.find("orbit") != std::string::npos;
  CHECK(mentions_orbit);

  // Adjacent pair sent to a non-adjacent pair breaks the pairing.
  auto noniso = make_triple(5, {1, 2}, {1, 3}, {{1, 1}, {2, 3}});
  rep = validate_triple(noniso);
  CHECK_FALSE(rep.valid);
  bool mentions_pairing = false;
  for (const auto& v : rep.violations)
    mentions_pairing |= v.find("pairing") != std::string::npos;
  CHECK(mentions_pairing);

  // A fixed point is a cycle of length one.
  auto fixed = make_triple(4, {2}, {2}, {{2, 2}});
  CHECK_FALSE(validate_triple(fixed).valid);

  // Malformed data is diagnosed, not thrown.
  auto dup = make_triple(4, {1, 1}, {2, 3}, {{1, 2}});
  rep = validate_triple(dup);
  CHECK_FALSE(rep.valid);
  CHECK(!rep.violations.empty());

  auto wrong_domain = make_triple(4, {1, 2}, {2, 3}, {{1, 2}});
  CHECK_FALSE(validate_triple(wrong_domain).valid);

  // Out-of-range indices violate the precondition.
  CHECK_THROWS_AS(validate_triple(make_triple(3, {3}, {1}, {{3, 1}})),
                  DomainError);
  CHECK_THROWS_AS(validate_triple(make_triple(1, {}, {}, {})), DomainError);
}

TEST_CASE("triple enumeration matches hand counts") {
  // Hand enumeration: the empty triple always; singletons a -> b with
  // a != b; for n >= 4 the valid block maps counted directly.
  CHECK(enumerate_triples(2).size() == 1);
  CHECK(enumerate_triples(3).size() == 3);
  CHECK(enumerate_triples(4).size() == 9);
  CHECK(enumerate_triples(5).size() == 33);

  // Every enumerated triple validates; the empty and shift ones are present.
  auto all4 = enumerate_triples(4);
  bool saw_empty = false, saw_cg = false;
  for (const auto& t : all4) {
    CHECK(validate_triple(t).valid);
    if (t.gamma1.empty()) saw_empty = true;
    if (t.gamma1 == cg_triple(4).gamma1 && t.gamma2 == cg_triple(4).gamma2 &&
        t.tau == cg_triple(4).tau)
      saw_cg = true;
  }
  CHECK(saw_empty);
  CHECK(saw_cg);
}

TEST_CASE("frozen Cartan tensors lie in the constraint solution sets") {
  CHECK(r0_constraint_failures(cg_triple(5), fixture_r0_5()).empty());
  CHECK(r0_constraint_failures(cg_triple(4), fixture_r0_4_hat()).empty());

  // Perturbing one entry must be caught.
  CartanTensor bad = fixture_r0_5();
  bad.c.at(0, 0) += Rational(1, 7);
  CHECK(!r0_constraint_failures(cg_triple(5), bad).empty());
}

TEST_CASE("constraint solver reproduces the frozen tensors for shift triples") {
  // The shift-triple systems are rigid: no kernel, and the particular
  // solution must coincide with the frozen fixtures entry by entry.
  auto sol5 = solve_r0(cg_triple(5));
  CHECK(sol5.dimension() == 0);
  CHECK(sol5.particular == fixture_r0_5());

  auto sol4 = solve_r0(cg_triple(4));
  CHECK(sol4.dimension() == 0);
  CHECK(sol4.particular == fixture_r0_4_hat());

  // Hand-solved sl(3) shift system: c = [[1/3, 1/3], [0, 1/3]].
  auto sol3 = solve_r0(cg_triple(3));
  CHECK(sol3.dimension() == 0);
  CHECK(sol3.particular.c.at(0, 0) == Rational(1, 3));
  CHECK(sol3.particular.c.at(0, 1) == Rational(1, 3));
  CHECK(sol3.particular.c.at(1, 0) == Rational(0));
  CHECK(sol3.particular.c.at(1, 1) == Rational(1, 3));
}

TEST_CASE("empty-triple solution space is the antisymmetric family") {
  for (int n = 3; n <= 5; ++n) {
    auto sol = solve_r0(empty_triple(n));
    const int r = n - 1;
    CHECK(sol.dimension() == r * (r - 1) / 2);
    // Particular solution satisfies the symmetric constraint ...
    CHECK(r0_constraint_failures(empty_triple(n), sol.particular).empty());
    // ... and every kernel direction is antisymmetric.
    for (const auto& k : sol.kernel_basis) {
      CHECK((k.c + k.c.transpose()).is_zero());
      CHECK(r0_constraint_failures(empty_triple(n),
                                   sol.particular + k.scale(Rational(5, 7)))
                .empty());
    }
  }
}

TEST_CASE("contractions of the frozen tensors take the expected values") {
  const auto& g5 = build_sl(5);
  auto a1_vals = g5.root_values(RootA::simple(1));
  auto v = fixture_r0_5().contract_second(a1_vals);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == Rational(1, 5));
  CHECK(v[1] == Rational(-3, 5));
  CHECK(v[2] == Rational(-2, 5));
  CHECK(v[3] == Rational(-1, 5));

  const auto& g4 = build_sl(4);
  auto w = fixture_r0_4_hat().contract_second(g4.root_values(RootA::simple(1)));
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Rational(1, 4));
  CHECK(w[1] == Rational(-1, 2));
  CHECK(w[2] == Rational(-1, 4));
}

TEST_CASE("tau chains of the shift triples") {
  // sl(4) shift: four chain pairs, all with coefficient +1.
  auto pairs4 = tau_chain_pairs(cg_triple(4));
  REQUIRE(pairs4.size() == 4);
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got;
  for (const auto& p : pairs4) {
    CHECK(p.coeff == Rational(1));
    got.insert({{p.alpha.i, p.alpha.j}, {p.beta.i, p.beta.j}});
  }
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> want = {
      {{1, 2}, {2, 3}}, {{1, 2}, {3, 4}}, {{2, 3}, {3, 4}}, {{1, 3}, {2, 4}}};
  CHECK(got == want);

  CHECK(tau_chain_pairs(cg_triple(3)).size() == 1);
  CHECK(tau_chain_pairs(cg_triple(5)).size() == 10);
  CHECK(tau_chain_pairs(empty_triple(5)).empty());
}

TEST_CASE("order-reversing tau picks up a bracket sign on composites") {
  // gamma1 = {a1, a2} -> gamma2 = {a3, a4} with a1 -> a4, a2 -> a3.  The
  // composite E_13 maps through [theta E_12, theta E_23] = [E_45, E_34]
  // = -E_35, so its chain coefficient is -1.
  auto rev = make_triple(5, {1, 2}, {3, 4}, {{1, 4}, {2, 3}});
  RootA beta;
  Rational c;
  REQUIRE(theta_image(rev, RootA(1, 3), &beta, &c));
  CHECK(beta == RootA(3, 5));
  CHECK(c == Rational(-1));

  auto pairs = tau_chain_pairs(rev);
  REQUIRE(pairs.size() == 3);
  int negatives = 0;
  for (const auto& p : pairs)
    if (p.coeff == Rational(-1)) ++negatives;
  CHECK(negatives == 1);

  // Simple roots map with coefficient +1 even when the order reverses.
  REQUIRE(theta_image(rev, RootA::simple(1), &beta, &c));
  CHECK(beta == RootA(4, 5));
  CHECK(c == Rational(1));
}

TEST_CASE("wedge orientation is pinned by the Yang-Baxter oracle") {
  // On sl(4) exactly one of the four orientations solves the classical
  // Yang-Baxter equation, and it is the frozen one.
  {
    auto t = cg_triple(4);
    auto r0 = solve_r0(t).particular;
    std::vector<std::pair<int, int>> passers;
    for (int dir : {0, 1})
      for (int sign : {1, -1}) {
        auto r = assemble_r_with(t, r0, dir, sign);
        // Unitarity holds for every orientation: wedges are antisymmetric.
        CHECK(unitarity_residual(r).is_zero());
        if (solves_cybe(r)) passers.push_back({dir, sign});
      }
    REQUIRE(passers.size() == 1);
    CHECK(passers[0].first == kWedgeDir);
    CHECK(passers[0].second == kWedgeSign);
  }

  // On sl(3) the single wedge leaves a sign ambiguity: conjugating by the
  // torus element diag(-1, 1, 1) fixes the Cartan part and the ladder but
  // flips the lone wedge, so both signs of the frozen direction pass while
  // the opposite direction fails for either sign.
  {
    auto t = cg_triple(3);
    auto r0 = solve_r0(t).particular;
    CHECK(solves_cybe(assemble_r_with(t, r0, 0, 1)));
    CHECK(solves_cybe(assemble_r_with(t, r0, 0, -1)));
    CHECK_FALSE(solves_cybe(assemble_r_with(t, r0, 1, 1)));
    CHECK_FALSE(solves_cybe(assemble_r_with(t, r0, 1, -1)));
  }
}

TEST_CASE("assembled r-matrices solve the Yang-Baxter equation exactly") {
  // Exhaustive over sl(3) and sl(4).
  for (int n : {3, 4})
    for (const auto& t : enumerate_triples(n)) {
      auto r = assemble_r(t, solve_r0(t).particular);
      CHECK(solves_cybe(r));
      CHECK(unitarity_residual(r).is_zero());
      CHECK(unitarity_convention(r) == "omega");
    }

  // Spot checks on sl(5): the shift triple, the reversed-block triple, the
  // disconnected triple, and a non-particular member of the empty family.
  auto cg5 = cg_triple(5);
  CHECK(solves_cybe(assemble_r(cg5, solve_r0(cg5).particular)));

  auto rev = make_triple(5, {1, 2}, {3, 4}, {{1, 4}, {2, 3}});
  CHECK(solves_cybe(assemble_r(rev, solve_r0(rev).particular)));

  auto disc = make_triple(5, {1, 3}, {2, 4}, {{1, 2}, {3, 4}});
  CHECK(solves_cybe(assemble_r(disc, solve_r0(disc).particular)));

  auto sol = solve_r0(empty_triple(5));
  std::vector<Rational> coeffs(sol.kernel_basis.size(), Rational(0));
  coeffs[0] = Rational(2, 3);
  coeffs.back() = Rational(-7, 5);
  CHECK(solves_cybe(assemble_r(empty_triple(5), sol.member(coeffs))));
}

TEST_CASE("standard r-matrix of the empty triple") {
  // sl(2) by hand: r = (1/4) h (x) h + E21 (x) E12.
  auto r2 = dj_rmatrix(2);
  const auto& g2 = build_sl(2);
  CHECK(r2.term_count() == 2);
  CHECK(r2.coeff(g2.h_index(1), g2.h_index(1)) == RatFun(Rational(1, 4)));
  CHECK(r2.coeff(g2.e_index(2, 1), g2.e_index(1, 2)) == RatFun(Rational(1)));

  // General n: half the Cartan Casimir plus all lowering (x) raising terms.
  for (int n : {2, 3, 4}) {
    const auto& g = build_sl(n);
    Tensor2 manual = casimir_cartan_part(n).scale(RatFun(Rational(1, 2)));
    for (const RootA& alpha : g.positive_roots())
      manual.add(g.e_index(alpha.j, alpha.i), g.e_index(alpha.i, alpha.j),
                 RatFun(Rational(1)));
    CHECK(dj_rmatrix(n) == manual);
    CHECK(solves_cybe(dj_rmatrix(n)));
    CHECK(unitarity_convention(dj_rmatrix(n)) == "omega");
  }
}

TEST_CASE("shift-triple r-matrix on sl(4): explicit wedge support") {
  auto t = cg_triple(4);
  auto r = assemble_r(t, solve_r0(t).particular);
  const auto& g = build_sl(4);

  auto wedge = [&](int ai, int aj, int bi, int bj) {
    // Coefficient of X_{-alpha} (x) X_beta and its flip partner.
    auto fwd = r.coeff(g.e_index(aj, ai), g.e_index(bi, bj));
    auto bwd = r.coeff(g.e_index(bi, bj), g.e_index(aj, ai));
    CHECK(fwd == RatFun(Rational(1)));
    CHECK(bwd == RatFun(Rational(-1)));
  };
  wedge(1, 2, 2, 3);
  wedge(1, 2, 3, 4);
  wedge(2, 3, 3, 4);
  wedge(1, 3, 2, 4);

  // Lowering (x) raising ladder present with unit coefficient.
  for (const RootA& alpha : g.positive_roots())
    CHECK(r.coeff(g.e_index(alpha.j, alpha.i), g.e_index(alpha.i, alpha.j)) ==
          RatFun(Rational(1)));

  // Cartan block equals the frozen tensor.
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      CHECK(r.coeff(g.h_index(k), g.h_index(l)) ==
            RatFun(fixture_r0_4_hat().c.at(k - 1, l - 1)));
}

TEST_CASE("assembly guards its preconditions") {
  // A symmetric Cartan part violates the root conditions of the shift
  // triple and must be rejected.
  CHECK_THROWS_AS(
      assemble_r(cg_triple(3), cartan_casimir(3).scale(Rational(1, 2))),
      DomainError);
  // Invalid triple.
  auto swap2 = make_triple(3, {1, 2}, {1, 2}, {{1, 2}, {2, 1}});
  CHECK_THROWS_AS(solve_r0(swap2), DomainError);
  CHECK_THROWS_AS(assemble_r_with(cg_triple(3), solve_r0(cg_triple(3)).particular,
                                  2, 1),
                  DomainError);
}

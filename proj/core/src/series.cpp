#include "rmf/series.hpp"

namespace rmf {

TruncSeries<RatFun> expand_at(const MultiPoly& p, Var v, const Rational& base, int order) {
  int pos = var_position(p.vars(), v);
  VarSet rest;
  for (Var w : p.vars())
    if (w != v) rest.push_back(w);
  TruncSeries<RatFun> out(order);
  for (const auto& [mon, c] : p.terms()) {
    int k = pos >= 0 ? mon[pos] : 0;
    MultiPoly m(rest);
    Monomial rm(rest.size(), 0);
    {
      size_t j = 0;
      for (size_t i = 0; i < p.vars().size(); ++i) {
        if (static_cast<int>(i) == pos) continue;
        rm[j++] = mon[i];
      }
    }
    m.add_term(rm, c);
    RatFun mr{m};
    // (base + eps)^k = sum_j C(k,j) base^{k-j} eps^j
    for (int j = 0; j < order && j <= k; ++j) {
      Rational bc = Rational::binomial(k, j) * base.pow(k - j);
      if (bc.is_zero()) continue;
      out.coeff(j) += mr * RatFun(bc);
    }
  }
  return out;
}

TruncSeries<RatFun> expand_at(const RatFun& f, Var v, const Rational& base, int order) {
  TruncSeries<RatFun> num = expand_at(f.num(), v, base, order);
  TruncSeries<RatFun> den = TruncSeries<RatFun>::constant(order, RatFun(Rational(1)));
  for (const auto& [g, e] : f.den_factors()) {
    TruncSeries<RatFun> gs = expand_at(g, v, base, order);
    for (int i = 0; i < e; ++i) den *= gs;
  }
  return num * den.inv();
}

}  // namespace rmf

#include "rmf/fixtures.hpp"

namespace rmf {

namespace {

Matrix<Rational> from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Matrix<Rational> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

CartanTensor fixture_r0_5() {
  const Rational f(1, 5);
  return CartanTensor(
      5, from_rows({{f * 2, f * 3, f * 3, f * 2},
                    {f * 0, f * 3, f * 4, f * 3},
                    {f * -1, f * 0, f * 3, f * 3},
                    {f * -1, f * -1, f * 0, f * 2}}));
}

CartanTensor fixture_r0_4_hat() {
  const Rational e(1, 8);
  return CartanTensor(4, from_rows({{e * 3, e * 4, e * 3},
                                    {e * 0, e * 4, e * 4},
                                    {e * -1, e * 0, e * 3}}));
}

std::vector<Rational> fixture_p5() {
  return {Rational(3, 5), Rational(1, 5), Rational(-1, 5), Rational(-3, 5)};
}

Matrix<Rational> fixture_T() {
  return from_rows({{Rational(0), Rational(1), Rational(0), Rational(0)},
                    {Rational(1), Rational(0), Rational(1), Rational(0)},
                    {Rational(0), Rational(0), Rational(1), Rational(0)},
                    {Rational(0), Rational(1), Rational(0), Rational(1)}});
}

}  // namespace rmf

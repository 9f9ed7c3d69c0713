#include "rmf/rational.hpp"

#include <cctype>
#include <ostream>

namespace rmf {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw DomainError("Rational::parse: empty string");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
      throw DomainError("Rational::parse: bad character in '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw DomainError("Rational::parse: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw DomainError("Rational::parse: zero denominator in '" + text + "'");
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw DomainError("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  Rational r;
  r.v_ = out;
  return invert ? r.inv() : r;
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("Rational::to_long: not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw DomainError("Rational::to_long: out of range");
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::binomial(long n, long k) {
  if (k < 0) return Rational(0);
  // C(n, k) with n possibly negative: product formula n(n-1)...(n-k+1)/k!.
  Rational acc(1);
  for (long i = 0; i < k; ++i) {
    acc *= Rational(n - i);
    acc /= Rational(i + 1);
  }
  return acc;
}

}  // namespace rmf

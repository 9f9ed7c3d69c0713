#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rmf/errors.hpp"

namespace rmf {

// Arbitrary-precision rational number, kept canonical at all times:
// gcd(num, den) = 1 and den > 0.  Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(const mpq_class& q);

  // Parses "p", "p/q", optional leading '-'.  Throws DomainError on junk
  // or zero denominator.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // DomainError on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inv() const;  // DomainError on 0
  Rational abs() const;
  Rational pow(long e) const;  // negative e inverts; DomainError on 0^neg

  // Exact integer value; DomainError if not an integer or out of range.
  long to_long() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  static Rational binomial(long n, long k);  // n may be negative

 private:
  mpq_class v_;
};

}  // namespace rmf

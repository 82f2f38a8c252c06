#pragma once

#include <stirpoly/bigint.hpp>

#include <cassert>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

namespace stirpoly {

// Exact rational scalar. The canonical form is maintained eagerly after
// every operation: denominator positive, numerator and denominator
// coprime, zero stored as 0/1. Equality is therefore structural.
class Rational {
 public:
  Rational() : v_(0) {}
  template <std::integral I>
  Rational(I n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  // Accepts "p" or "p/q" with an optional leading minus and no spaces.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const {
    return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  // "p/q", or "p" when the value is integral.
  std::string str() const { return v_.get_str(); }

 private:
  void init(const BigInt& num, const BigInt& den);

  // Canonical-form invariant, checked in debug builds only.
  void check() const {
#ifndef NDEBUG
    assert(sgn(v_.get_den()) > 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    assert(g == 1);
#endif
  }

  mpq_class v_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stirpoly

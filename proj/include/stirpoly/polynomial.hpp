#pragma once

#include <stirpoly/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace stirpoly {

// Dense univariate polynomial over Rational, coefficients in ascending
// power order (coeffs()[i] multiplies the i-th power). The zero
// polynomial is the empty sequence; a nonzero polynomial always has a
// nonzero leading (last) coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as "none", never -1.
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of the j-th power; 0 beyond the degree, never an error.
  Rational coefficient(std::size_t j) const;
  Rational leading() const;  // requires a nonzero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Rational& r) const;
  Poly mul_by_power(std::size_t e) const;  // multiply by the e-th power of the variable

  Rational eval(const Rational& x) const;  // Horner, exact
  Poly derivative() const;

  bool operator==(const Poly& o) const = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Unique polynomial of degree < points.size() passing exactly through all
// points, by Newton divided differences over Rational. The x values must
// be pairwise distinct and at least one point must be given.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace stirpoly

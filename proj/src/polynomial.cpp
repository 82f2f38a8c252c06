#include <stirpoly/polynomial.hpp>

#include <algorithm>
#include <stdexcept>

namespace stirpoly {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
  return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational Poly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("Poly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coefficient(i) + o.coefficient(i);
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly{};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::scale(const Rational& r) const {
  if (r.is_zero()) return Poly{};
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c * r);
  return Poly(std::move(v));
}

Poly Poly::mul_by_power(std::size_t e) const {
  if (is_zero()) return Poly{};
  std::vector<Rational> v(coeffs_.size() + e);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(e));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t k = points.size();
  if (k == 0) throw std::invalid_argument("interpolate: at least one point required");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicate x value " + points[i].first.str());

  // Divided differences in place: after pass j, dd[i] = f[x_{i-j} .. x_i].
  std::vector<Rational> dd;
  dd.reserve(k);
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);

  // Expand the Newton form from the innermost term outward.
  Poly result = Poly::constant(dd[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    const Poly factor(std::vector<Rational>{-points[i].first, Rational(1)});
    result = result * factor + Poly::constant(dd[i]);
  }
  return result;
}

}  // namespace stirpoly

#include <stirpoly/bernoulli.hpp>

#include <stirpoly/bigint.hpp>

#include <stdexcept>

namespace stirpoly {

void BernoulliCache::extend_numbers_locked(unsigned n) const {
  if (numbers_.empty()) numbers_.emplace_back(1);
  while (numbers_.size() <= n) {
    const unsigned i = static_cast<unsigned>(numbers_.size());
    // B_i = -1/(i+1) * sum_{k=0..i-1} C(i+1, k) B_k
    Rational acc = 0;
    for (unsigned k = 0; k < i; ++k) acc += Rational(binomial(i + 1, k)) * numbers_[k];
    numbers_.push_back(-(acc / Rational(static_cast<long>(i) + 1)));
  }
}

Rational BernoulliCache::number(unsigned n) const {
  std::scoped_lock lock(mu_);
  extend_numbers_locked(n);
  return numbers_[n];
}

Poly BernoulliCache::polynomial(unsigned m) const {
  std::scoped_lock lock(mu_);
  extend_numbers_locked(m);
  while (polys_.size() <= m) {
    const unsigned d = static_cast<unsigned>(polys_.size());
    std::vector<Rational> coeffs(d + 1);
    for (unsigned k = 0; k <= d; ++k) coeffs[d - k] = Rational(binomial(d, k)) * numbers_[k];
    polys_.emplace_back(std::move(coeffs));
  }
  return polys_[m];
}

Poly bernoulli_odd_via_recursion(const BernoulliCache& cache, unsigned m) {
  if (m < 1) throw std::invalid_argument("bernoulli_odd_via_recursion: m must be >= 1");
  Poly acc = cache.polynomial(2 * m).mul_by_power(1).scale(Rational(2 * m + 1));
  for (unsigned k = 1; k <= m; ++k) {
    const Rational coef(power(BigInt(-2), k) * factorial(m) * (2 * m - k + 1),
                        factorial(k + 1) * factorial(m - k));
    acc = acc + cache.polynomial(2 * m - k).mul_by_power(k + 1).scale(coef);
  }
  const Rational inhomogeneous = Rational(1, 2) * Rational(m % 2 == 0 ? -1 : 1);
  return acc + Poly::monomial(inhomogeneous, 2 * m);
}

}  // namespace stirpoly

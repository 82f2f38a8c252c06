#pragma once

#include <stirpoly/polynomial.hpp>

#include <mutex>
#include <vector>

namespace stirpoly {

// Memoized Bernoulli numbers B_n and Bernoulli polynomials B_m(x).
//
// The convention is fixed to B_1 = -1/2. This is the unique convention
// under which B_m(0) = B_m, and the consumers in the pk module depend on
// it; the +1/2 convention would silently corrupt the coefficient-based
// recursion checks.
//
// Numbers come from the defining recurrence
//   sum_{k=0..n} C(n+1, k) B_k = 0,  B_0 = 1,
// polynomials from the expansion B_m(x) = sum_{k=0..m} C(m,k) B_k x^{m-k}.
//
// The whole cache is guarded by one mutex: extension is single-writer and
// reads of already-computed entries are safe from any thread.
class BernoulliCache {
 public:
  Rational number(unsigned n) const;
  Poly polynomial(unsigned m) const;

 private:
  void extend_numbers_locked(unsigned n) const;

  mutable std::mutex mu_;
  mutable std::vector<Rational> numbers_;
  mutable std::vector<Poly> polys_;
};

// Odd-index Bernoulli polynomial B_{2m+1}(x) assembled from the lower
// polynomials through the inhomogeneous recursion
//   B_{2m+1}(x) = (2m+1) x B_{2m}(x)
//              + sum_{k=1..m} (-2)^k m!(2m-k+1)/((k+1)!(m-k)!) x^{k+1} B_{2m-k}(x)
//              + (1/2)(-1)^{m+1} x^{2m},
// which must agree exactly with cache.polynomial(2m+1). Requires m >= 1.
Poly bernoulli_odd_via_recursion(const BernoulliCache& cache, unsigned m);

}  // namespace stirpoly

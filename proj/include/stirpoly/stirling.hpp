#pragma once

#include <stirpoly/bigint.hpp>

#include <vector>

namespace stirpoly {

// Triangle of unsigned Stirling numbers of the first kind c(n, m) for
// 0 <= m <= n <= max_n: the number of permutations of n symbols with
// exactly m cycles. Built once by the recurrence
//   c(n+1, m) = c(n, m-1) + n * c(n, m)
// and immutable afterwards, so concurrent readers are safe.
//
// T_{n,k} is the reindexed triangle c(n, n-k+1) (the alternating sign of
// the signed Stirling numbers cancels exactly), 1-indexed in both n and k
// to match its usual tabular layout. Row sums of T are factorials.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_n);  // max_n >= 1

  unsigned max_n() const { return max_n_; }

  const BigInt& unsigned_stirling(unsigned n, unsigned m) const;
  BigInt signed_stirling(unsigned n, unsigned m) const;  // (-1)^{n-m} c(n,m)

  // T_{n,k}; returns 0 when k > n. 1 <= n <= max_n, k >= 1.
  BigInt t_number(unsigned n, unsigned k) const;

  // Sum over k of T_{n,k}; equal to n! (verified by the test suite, not
  // assumed here).
  BigInt row_sum(unsigned n) const;

 private:
  unsigned max_n_;
  std::vector<std::vector<BigInt>> c_;  // c_[n][m]
};

}  // namespace stirpoly

#include <stirpoly/stirling.hpp>

#include <stdexcept>
#include <string>

namespace stirpoly {

namespace {

[[noreturn]] void out_of_range(const char* what, unsigned value, unsigned max_n) {
  throw std::out_of_range(std::string("StirlingTable: ") + what + " = " + std::to_string(value) +
                          " outside table built to max_n = " + std::to_string(max_n));
}

}  // namespace

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("StirlingTable: max_n must be >= 1");
  c_.resize(max_n + 1);
  c_[0] = {BigInt(1)};
  for (unsigned n = 0; n < max_n; ++n) {
    const auto& prev = c_[n];
    auto& next = c_[n + 1];
    next.assign(n + 2, BigInt(0));
    for (unsigned m = 1; m <= n + 1; ++m) {
      BigInt v = prev[m - 1];
      if (m <= n) v += prev[m] * n;
      next[m] = v;
    }
  }
}

const BigInt& StirlingTable::unsigned_stirling(unsigned n, unsigned m) const {
  if (n > max_n_) out_of_range("n", n, max_n_);
  if (m > n) out_of_range("m", m, max_n_);
  return c_[n][m];
}

BigInt StirlingTable::signed_stirling(unsigned n, unsigned m) const {
  const BigInt& u = unsigned_stirling(n, m);
  return (n - m) % 2 == 0 ? u : BigInt(-u);
}

BigInt StirlingTable::t_number(unsigned n, unsigned k) const {
  if (n < 1 || n > max_n_) out_of_range("n", n, max_n_);
  if (k < 1) throw std::out_of_range("StirlingTable: k must be >= 1");
  if (k > n) return 0;
  // T_{n,k} = (-1)^{k-1} S_n^{(n-k+1)}; the sign cancels the signed
  // Stirling sign exactly, leaving the unsigned entry.
  return c_[n][n - k + 1];
}

BigInt StirlingTable::row_sum(unsigned n) const {
  if (n < 1 || n > max_n_) out_of_range("n", n, max_n_);
  BigInt s = 0;
  for (unsigned m = 1; m <= n; ++m) s += c_[n][m];
  return s;
}

}  // namespace stirpoly

#pragma once

#include <stirpoly/bernoulli.hpp>
#include <stirpoly/polynomial.hpp>
#include <stirpoly/stirling.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stirpoly {

// An exact cross-method disagreement or a non-integral reconstruction:
// either one signals a broken derivation, never a rounding issue.
class consistency_error : public std::runtime_error {
 public:
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

enum class PkMethod {
  interp,           // column interpolation only (the oracle path)
  recursion,        // even indices by the even-index recursion, odd by the coefficient recursion
  cross_check_all,  // derive by every applicable method and require exact agreement
};

enum class PkProvenance { base, interpolated, even_recursion, coeff_recursion };

// The family P_0 .. P_K in the variable n, with one provenance tag per
// index recording which method produced it. Every P_k is monic of degree
// k, and P_k(0) = 0 for even k >= 2.
struct PkSequence {
  std::vector<Poly> polys;
  std::vector<PkProvenance> provenance;

  unsigned max_k() const { return static_cast<unsigned>(polys.size()) - 1; }
  const Poly& at(unsigned k) const;

  bool operator==(const PkSequence& o) const = default;
};

// Sign convention for the linear Bernoulli term of the coefficient
// recursion (pk_next_via_bernoulli_coeffs). +1 keeps the term as the
// recursion is usually stated; -1 flips it. Only the flipped variant
// reproduces the interpolated polynomials at odd m (even m are
// insensitive because the odd Bernoulli numbers vanish); the `verify`
// eq11 suite demonstrates this and records the winner.
inline constexpr int kCoeffSignAsPrinted = +1;
inline constexpr int kCoeffSignFlipped = -1;
inline constexpr int kCoeffSignResolved = kCoeffSignFlipped;

// P_j recovered from column j+2 of the T triangle: the column entries are
//   T_{n, j+2} = n(n-1)...(n-j-1) / (2^{j+1} (j+1)!) * P_j(n),
// so the j+1 exact sample values at n = first_node .. first_node+j
// determine P_j by interpolation. first_node defaults to j+2 (the first
// row with a nonzero falling factorial); any larger start must yield the
// identical polynomial. Requires first_node + j <= t.max_n(). A non-monic
// or wrong-degree result throws consistency_error.
Poly pk_from_stirling(unsigned j, const StirlingTable& t);
Poly pk_from_stirling_at(unsigned j, const StirlingTable& t, unsigned first_node);

// Even-index recursion:
//   P_{2m}(n) = (2m+1) n P_{2m-1}(n)
//             + sum_{k=1..m} (-2)^k m!(2m-k+1)/((k+1)!(m-k)!) n^{k+1} P_{2m-k-1}(n).
// Requires m >= 1 and seq to contain P_{m-1} .. P_{2m-1}.
Poly pk_even_via_recursion(unsigned m, const PkSequence& seq);

// Coefficient recursion: the next polynomial from Bernoulli-polynomial
// coefficients,
//   P_{m+1}(n) = n P_m(n)
//              - n/(m+2) * sum_{k=1..floor(m/2)} 4^k P_{m+1-2k}(n) * [x^{m+2-2k}] B_{m+2}(x)
//              - 2^m * ( 4/(m+2) B_{m+2} - sign * 2 n B_{m+1} ).
// Undefined at m = 0 (no sign convention recovers P_1 from P_0 there);
// requires m >= 1, sign in {+1,-1}, and seq to contain P_0 .. P_m.
Poly pk_next_via_bernoulli_coeffs(unsigned m, const PkSequence& seq,
                                  const BernoulliCache& cache,
                                  int sign = kCoeffSignResolved);

// True iff P_{2m-1}(0) = -(1/(2m)) 4^m B_{2m} exactly.
bool check_odd_constant_term(unsigned m, const PkSequence& seq, const BernoulliCache& cache);

// T_{n,k} rebuilt from the polynomial family:
//   k = 1          -> 1,
//   k >= 2         -> n(n-1)...(n-k+1) / (2^{k-1} (k-1)!) * P_{k-2}(n).
// The exact rational result must be an integer; anything else throws
// consistency_error.
BigInt reconstruct_t(unsigned n, unsigned k, const PkSequence& seq);

// Interpolate P_0 .. P_max_k against a shared table. The parallel variant
// distributes the independent per-index interpolations across OpenMP
// threads and must produce results identical to the serial reference.
// Requires t.max_n() >= 2*max_k + 2.
std::vector<Poly> interpolate_pk_range(const StirlingTable& t, unsigned max_k);
std::vector<Poly> interpolate_pk_range_serial(const StirlingTable& t, unsigned max_k);

// Build P_0 .. P_max_k by the requested method (the interpolation path
// sizes its table as max_n = 2*max_k + 2). In cross_check_all mode every
// index derivable by more than one method is required to agree exactly
// across methods; a mismatch throws consistency_error naming the index,
// the method pair, and the first differing coefficient.
PkSequence build_pk_sequence(unsigned max_k, PkMethod method, int sign = kCoeffSignResolved);

}  // namespace stirpoly

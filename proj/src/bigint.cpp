#include <stirpoly/bigint.hpp>

namespace stirpoly {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt falling_factorial(const BigInt& start, unsigned long count) {
  BigInt r = 1;
  BigInt f = start;
  for (unsigned long i = 0; i < count; ++i) {
    r *= f;
    f -= 1;
  }
  return r;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace stirpoly

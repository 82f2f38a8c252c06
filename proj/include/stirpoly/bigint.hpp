#pragma once

#include <gmpxx.h>

#include <string>

namespace stirpoly {

// Arbitrary-precision signed integer. GMP supplies the representation;
// everything downstream treats values as immutable exact integers.
using BigInt = mpz_class;

BigInt factorial(unsigned long n);

// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// Product of `count` consecutive descending factors starting at `start`:
// start * (start-1) * ... * (start-count+1). The empty product is 1.
// The factor COUNT is explicit; callers never pass an end index.
BigInt falling_factorial(const BigInt& start, unsigned long count);

BigInt power(const BigInt& base, unsigned long exponent);

std::string to_string(const BigInt& value);

}  // namespace stirpoly

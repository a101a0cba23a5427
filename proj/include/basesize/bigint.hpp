#pragma once

#include <gmpxx.h>

#include <string>

namespace basesize {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);

/// C(a, b) with C(a, b) = 0 for b > a and C(0, 0) = 1.
BigInt binomial(unsigned long a, unsigned long b);

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(const std::string& s);

/// Exact quotient; throws ConsistencyError naming `what` when `den` does not
/// divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

}  // namespace basesize

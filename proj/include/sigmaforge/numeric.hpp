#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace sigmaforge {

using integer = mpz_class;
using rational = mpq_class;

// Sentinel for the p-adic valuation of zero.
inline constexpr long ord_infinity = std::numeric_limits<long>::max();

bool is_prime(unsigned long p);

// p-adic valuation. Throws std::domain_error if p is not prime.
long ord_p(const integer& n, unsigned long p);
long ord_p(const rational& r, unsigned long p);

integer factorial(unsigned long n);
integer binomial(unsigned long n, unsigned long k);
// Falling factorial (n)_k = n(n-1)...(n-k+1).
integer falling_factorial(unsigned long n, unsigned long k);

// Canonical fraction n/d. The raw two-argument mpq_class constructor does not
// reduce, so use this instead.
rational frac(long num, long den);
rational frac(const integer& num, const integer& den);

// Exact parse of "num" or "num/den" in base 10. Throws std::invalid_argument.
rational parse_rational(const std::string& s);

// Canonical text form: "num" or "num/den".
std::string to_string(const rational& r);

// Least non-negative representative of a^{-1} mod m (m > 1, gcd(a,m) = 1).
integer inverse_mod(const integer& a, const integer& m);

}  // namespace sigmaforge

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypint {

using BigInt = mpz_class;
// GMP keeps mpq_class results canonical (lowest terms, positive denominator)
// for every arithmetic operation; construct through make_rational() when
// starting from a raw numerator/denominator pair.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

// Memoized n!. The reference stays valid for the lifetime of the program.
const BigInt& factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// 2^e for any integer e, as an exact rational.
BigRational pow2(long e);
BigRational pow_int(const BigRational& base, unsigned e);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// "p/q" or "p" when q == 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
BigRational parse_rational(std::string_view text);

}  // namespace hypint

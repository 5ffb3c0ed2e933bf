#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galring {

// Arbitrary-precision integers and rationals. gmpxx keeps mpq_class results
// canonical (coprime, positive denominator) for all arithmetic operators.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "n" or "n/d" (optional sign). Throws Error{Parse} or
// Error{DivisionByZero}.
BigRational parse_rational(std::string_view text);

// "-3/2", "7", "0".
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

BigRational pow(const BigRational& base, long exponent);

}  // namespace galring

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nctorus {

/// Arbitrary-precision integer used for every exact quantity in the library.
using BigInt = mpz_class;

int sign(const BigInt& x);
BigInt abs(const BigInt& x);
BigInt gcd(const BigInt& x, const BigInt& y);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// Quotient rounded toward -infinity; divisor must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);
bool divides(const BigInt& d, const BigInt& n);

std::size_t bit_length(const BigInt& x);

/// Accepts an optional sign followed by decimal digits; throws std::invalid_argument otherwise.
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& x);

bool fits_int64(const BigInt& x);
/// Throws std::overflow_error when x does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace nctorus

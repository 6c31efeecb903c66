#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "polydisc/int128.hpp"

namespace polydisc {

// Exact arbitrary-precision integer.  GMP does the heavy lifting; the census
// hot path runs on I128 and promotes to BigInt only on overflow.
using BigInt = mpz_class;

BigInt bigint_from_i128(I128 x);
std::optional<I128> i128_from_bigint(const BigInt& x);

// Parses a decimal integer string (optionally signed); throws
// std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& s);

inline int sign(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }
inline BigInt abs(const BigInt& a) { return ::abs(a); }

} // namespace polydisc

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symdyn {

using BigInt = mpz_class;
using Rational = mpq_class;

// Positions and run counts are arbitrary precision throughout.
using Position = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Throws Error(Parse) on anything but an optionally signed decimal literal.
BigInt parse_decimal(std::string_view text);

// Throws Error(OutOfRange) if v does not fit.
std::uint64_t to_u64(const BigInt& v);

inline BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

inline bool fits_u64(const BigInt& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

BigInt pow_u(unsigned long base, unsigned long exponent);

// "p/q" (or "p") with an optional sign; canonicalized.
Rational parse_rational(std::string_view text);
std::string to_fraction(const Rational& q);

}  // namespace symdyn

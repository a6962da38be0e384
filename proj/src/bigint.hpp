#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace uif {

// Every bound and inequality in the library is evaluated over
// arbitrary-precision integers and rationals; floating point appears only in
// display helpers.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt int_pow(const BigInt& base, std::uint64_t exp);

// Smallest r with r*r >= k.
std::uint32_t ceil_sqrt(std::uint64_t k);

// Canonical rational from an integer pair, den != 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

// "num/den" in lowest terms ("3" stays "3/1" -- callers that want a bare
// integer use BigInt::get_str directly).
std::string rat_str(const BigRat& q);

// Accepts "3", "-7", "1/12", "-3/4" and exact decimals like "0.25".
std::optional<BigRat> parse_rat(std::string_view s);

}  // namespace uif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dedekind {

/// Arbitrary-precision signed integer used for every quantity in the library.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument on
/// anything else (including empty input, embedded spaces or a leading '+').
BigInt parse_bigint(std::string_view text);

std::optional<std::int64_t> to_int64(const BigInt& value);
std::optional<std::uint64_t> to_uint64(const BigInt& value);

BigInt from_uint64(std::uint64_t value);
BigInt from_int64(std::int64_t value);

/// Floor-mod: result in [0, modulus) for modulus > 0.
BigInt floor_mod(const BigInt& value, const BigInt& modulus);

}  // namespace dedekind

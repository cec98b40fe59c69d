#include "dedekind/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace dedekind {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

std::optional<std::int64_t> to_int64(const BigInt& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

std::optional<std::uint64_t> to_uint64(const BigInt& value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  if (!value.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(value.get_ui());
}

BigInt from_uint64(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

BigInt from_int64(std::int64_t value) { return BigInt(static_cast<long>(value)); }

BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace dedekind

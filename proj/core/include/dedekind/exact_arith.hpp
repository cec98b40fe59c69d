#pragma once

#include <span>

#include "dedekind/bigint.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// A residue r mod m with 0 <= r < m.
struct ResidueClass {
  BigInt residue;
  BigInt modulus;

  /// Reduces `value` into [0, modulus). Throws std::invalid_argument for modulus < 1.
  static ResidueClass of(const BigInt& value, const BigInt& modulus);

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Non-negative gcd; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

inline bool coprime(const BigInt& a, const BigInt& b) { return gcd(a, b) == 1; }

/// The inverse m* of m mod n with 0 <= m* < n, by the extended Euclidean
/// algorithm. Negative m is reduced first; mod_inverse(m, 1) == 0.
/// Throws NotInvertible when gcd(m, n) != 1 and std::invalid_argument for n < 1.
BigInt mod_inverse(const BigInt& m, const BigInt& n);

/// The unique class mod the product of all moduli that agrees with every part.
/// Throws std::invalid_argument on an empty list and NonCoprimeModuli when two
/// moduli share a factor.
ResidueClass crt_combine(std::span<const ResidueClass> parts);

}  // namespace dedekind

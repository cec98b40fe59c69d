#include "dedekind/exact_arith.hpp"

#include <stdexcept>

namespace dedekind {

ResidueClass ResidueClass::of(const BigInt& value, const BigInt& modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  return ResidueClass{floor_mod(value, modulus), modulus};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt mod_inverse(const BigInt& m, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return 0;

  // Invariant: old_s * m == old_r and s * m == r (mod n).
  BigInt old_r = floor_mod(m, n);
  BigInt r = n;
  BigInt old_s = 1;
  BigInt s = 0;
  BigInt q, tmp;
  while (r != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw NotInvertible(m, n);
  return floor_mod(old_s, n);
}

ResidueClass crt_combine(std::span<const ResidueClass> parts) {
  if (parts.empty()) throw std::invalid_argument("crt_combine needs at least one residue class");

  ResidueClass acc = ResidueClass::of(parts.front().residue, parts.front().modulus);
  for (const auto& part : parts.subspan(1)) {
    const ResidueClass next = ResidueClass::of(part.residue, part.modulus);
    if (!coprime(acc.modulus, next.modulus)) throw NonCoprimeModuli(acc.modulus, next.modulus);
    // x = acc.residue + acc.modulus * h with h == (next - acc) / acc.modulus mod next.modulus
    const BigInt h = floor_mod((next.residue - acc.residue) * mod_inverse(acc.modulus, next.modulus),
                               next.modulus);
    acc.residue += acc.modulus * h;
    acc.modulus *= next.modulus;
  }
  return acc;
}

}  // namespace dedekind

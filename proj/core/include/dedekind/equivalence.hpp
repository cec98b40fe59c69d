#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Distinct primes p_1 < ... < p_t whose product is n.
struct SquarefreeFactorization {
  std::vector<BigInt> primes;
  BigInt n;
};

/// (m1 m2 - 1)(m1 - m2) == 0 mod n. Both arguments must be units mod n.
bool congruence_condition(const BigInt& m1, const BigInt& m2, const BigInt& n);

/// Whether S(m1/n) and S(m2/n) differ by an integer, decided by comparing the
/// residues (m + m*) mod n.
bool same_fractional_part(const BigInt& m1, const BigInt& m2, const BigInt& n);

/// All units m2 in [0, n) with (m1 m2 - 1)(m1 - m2) == 0 mod n, ascending.
/// Linear scan valid for any n; `jobs` > 1 splits the range across threads and
/// yields the same list.
std::vector<BigInt> enumerate_bruteforce(const BigInt& m1, const BigInt& n,
                                         unsigned jobs = 1);

/// Trial division by 2, 3 and 6k +- 1. Throws NotSquarefree carrying the first
/// repeated prime, std::invalid_argument for n < 1 and std::out_of_range for n
/// beyond 64 bits.
SquarefreeFactorization factor_squarefree(const BigInt& n);

/// {m1 mod p, m1* mod p} for a prime p, ascending. One element exactly when
/// m1 == +-1 mod p.
std::vector<BigInt> local_solutions(const BigInt& m1, const BigInt& p);

/// The class of m1 built from one local solution per prime via CRT, ascending.
std::vector<BigInt> enumerate_crt(const BigInt& m1, const SquarefreeFactorization& fact);

struct ClassCount {
  std::uint64_t count;  // 2^s
  unsigned s_exponent;  // primes with m1 != +-1 mod p
};

ClassCount count_class(const BigInt& m1, const SquarefreeFactorization& fact);

struct OffsetGroup {
  BigInt offset;
  std::vector<BigInt> members;

  friend bool operator==(const OffsetGroup&, const OffsetGroup&) = default;
};

/// The class of m1 laid out as base + integer offsets.
struct EquivalenceReport {
  BigInt n;
  BigInt m1;
  Rational base_fraction;          // in [0, 1)
  std::vector<OffsetGroup> groups;  // descending offset, members ascending
  std::size_t count = 0;
  std::optional<unsigned> s_exponent;  // only for square-free n
  bool self_member = false;

  /// Every member in ascending order.
  std::vector<BigInt> members() const;
};

/// Enumerates via CRT when n is square-free, by linear scan otherwise, and
/// evaluates every member with the continued-fraction formula.
EquivalenceReport build_report(const BigInt& m1, const BigInt& n, unsigned jobs = 1);

struct FractionalClass {
  BigInt residue;
  std::vector<BigInt> members;

  friend bool operator==(const FractionalClass&, const FractionalClass&) = default;
};

/// Partitions the units mod n by (m + m*) mod n. Classes ascend by residue.
std::vector<FractionalClass> classify_all(const BigInt& n, unsigned jobs = 1);

}  // namespace dedekind

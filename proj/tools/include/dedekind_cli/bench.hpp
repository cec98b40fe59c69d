#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <dedekind/bigint.hpp>
#include <dedekind/rational.hpp>

namespace dedekind::cli {

struct BenchRow {
  BigInt n;
  BigInt m;
  std::optional<double> naive_us;  // empty when n exceeds the naive cap
  double bhk_us;
  Rational value;
  std::optional<bool> agree;  // naive == bhk, when the naive path ran
  bool fraction_ok;           // value - ((m + m*) mod n)/n is an integer
};

/// Times both evaluators for each modulus with a fixed m. Throws NotCoprime
/// when gcd(m, n) != 1 for some n.
std::vector<BenchRow> run_bench(const std::vector<BigInt>& moduli, const BigInt& m,
                                std::size_t repetitions, const BigInt& naive_cap);

}  // namespace dedekind::cli

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// ((x)): 0 at integers, x - floor(x) - 1/2 elsewhere.
Rational sawtooth(const Rational& x);

/// Expansion m/n = [a_0; a_1, ..., a_k] with its convergents s_j / t_j.
///
/// Produced by plain Euclidean division on (m mod n)/n, so a_0 == 0 and the
/// last convergent is exactly m/n. For n == 1 the expansion is [0] (k == 0).
struct ContinuedFraction {
  std::vector<BigInt> quotients;     // a_0 .. a_k
  std::vector<BigInt> numerators;    // s_0 .. s_k
  std::vector<BigInt> denominators;  // t_0 .. t_k

  /// k, the index of the last partial quotient.
  std::size_t length() const { return quotients.size() - 1; }
};

enum class Method { Naive, Bhk };

std::string_view to_string(Method method);

/// S(m/n) = 12 s(m/n) together with the residue (m + m*) mod n that fixes its
/// fractional part.
struct DedekindEvaluation {
  BigInt m;  // reduced into [0, n)
  BigInt n;
  Rational value;
  BigInt fractional_residue;
  Method method;
};

/// Checks n >= 1 and gcd(m, n) == 1 and returns m mod n.
/// Throws std::invalid_argument for n < 1 and NotCoprime otherwise.
BigInt reduce_unit(const BigInt& m, const BigInt& n);

ContinuedFraction cf_expand(const BigInt& m, const BigInt& n);

/// Definitional O(n) evaluation: 12 * sum_{k=1}^{n} ((k/n)) ((mk/n)) in exact
/// rationals.
DedekindEvaluation dedekind_sum_naive(const BigInt& m, const BigInt& n);

/// O(log n) evaluation from the continued fraction of m/n:
///
///   S = sum_{j=1}^{k} (-1)^{j-1} a_j + (s_k + t_{k-1})/t_k - 3   (k odd)
///   S = sum_{j=1}^{k} (-1)^{j-1} a_j + (s_k - t_{k-1})/t_k       (k even)
///
/// and S = 0 when k == 0.
DedekindEvaluation dedekind_sum_bhk(const BigInt& m, const BigInt& n);

DedekindEvaluation dedekind_sum(const BigInt& m, const BigInt& n, Method method);

/// (m + m*) mod n; S(m/n) - result/n is always an integer.
BigInt fractional_residue(const BigInt& m, const BigInt& n);

}  // namespace dedekind

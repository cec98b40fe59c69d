#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <dedekind/dedekind_sum.hpp>
#include <dedekind/equivalence.hpp>
#include <dedekind/errors.hpp>
#include <dedekind/exact_arith.hpp>

#include "oracles.hpp"

using dedekind::BigInt;
using dedekind::Rational;

namespace {

const std::vector<BigInt> kPublishedClass{17,   563,  992,  2558, 2987,  3533,  6023,  6107,
                                          6452, 6998, 8993, 9572, 11567, 12113, 12458, 12542};

std::vector<long> units(long n) {
  std::vector<long> out;
  for (long m = 0; m < n; ++m)
    if (std::gcd(m, n) == 1) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("congruence condition") {
  CHECK(dedekind::congruence_condition(17, 3533, 15015));
  CHECK(dedekind::congruence_condition(2, 3, 5));
  CHECK_FALSE(dedekind::congruence_condition(2, 3, 7));
  for (long m : units(30)) CHECK(dedekind::congruence_condition(m, m, 30));
  CHECK_THROWS_AS(dedekind::congruence_condition(2, 4, 6), dedekind::NotCoprime);
  CHECK_THROWS_AS(dedekind::congruence_condition(3, 5, 6), dedekind::NotCoprime);
}

TEST_CASE("same fractional part") {
  CHECK(dedekind::same_fractional_part(17, 992, 15015));
  CHECK(dedekind::same_fractional_part(1, 1, 7));
  CHECK_FALSE(dedekind::same_fractional_part(2, 3, 7));
  CHECK_THROWS_AS(dedekind::same_fractional_part(1, 7, 14), dedekind::NotCoprime);
}

TEST_CASE("same fractional part is an equivalence relation (n <= 120)") {
  for (long n = 1; n <= 120; ++n) {
    const auto u = units(n);
    std::vector<BigInt> residue;
    for (long m : u) residue.push_back(dedekind::fractional_residue(m, n));
    for (std::size_t i = 0; i < u.size(); ++i) {
      REQUIRE(dedekind::same_fractional_part(u[i], u[i], n));
      for (std::size_t j = 0; j < u.size(); ++j) {
        const bool ij = dedekind::same_fractional_part(u[i], u[j], n);
        REQUIRE(ij == dedekind::same_fractional_part(u[j], u[i], n));
        REQUIRE(ij == (residue[i] == residue[j]));
        REQUIRE(ij == dedekind::congruence_condition(u[i], u[j], n));
      }
    }
    // transitivity follows from the residue characterization; spot-check triples
    for (std::size_t i = 0; i < u.size(); i += 3)
      for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t k = 0; k < u.size(); k += 5)
          if (dedekind::same_fractional_part(u[i], u[j], n) &&
              dedekind::same_fractional_part(u[j], u[k], n))
            REQUIRE(dedekind::same_fractional_part(u[i], u[k], n));
  }
}

TEST_CASE("linear scan") {
  CHECK(dedekind::enumerate_bruteforce(1, 6) == std::vector<BigInt>{1});
  CHECK(dedekind::enumerate_bruteforce(2, 15) == std::vector<BigInt>{2, 8});
  CHECK(dedekind::enumerate_bruteforce(17, 15015) == kPublishedClass);
  CHECK(dedekind::enumerate_bruteforce(0, 1) == std::vector<BigInt>{0});
  CHECK_THROWS_AS(dedekind::enumerate_bruteforce(5, 15), dedekind::NotCoprime);
}

TEST_CASE("linear scan is independent of the number of jobs") {
  for (long n : {1L, 2L, 12L, 97L, 360L, 15015L, 65536L}) {
    for (long m : {1L, 5L, 17L, 7L}) {
      if (std::gcd(m, n) != 1) continue;
      const auto serial = dedekind::enumerate_bruteforce(m, n, 1);
      for (unsigned jobs : {2u, 3u, 8u}) REQUIRE(dedekind::enumerate_bruteforce(m, n, jobs) == serial);
    }
    const auto serial = dedekind::classify_all(n, 1);
    CHECK(dedekind::classify_all(n, 4) == serial);
  }
}

TEST_CASE("square-free factorization") {
  const auto f = dedekind::factor_squarefree(15015);
  CHECK(f.primes == std::vector<BigInt>{3, 5, 7, 11, 13});
  CHECK(f.n == 15015);
  CHECK(dedekind::factor_squarefree(1).primes.empty());
  CHECK(dedekind::factor_squarefree(2).primes == std::vector<BigInt>{2});
  CHECK(dedekind::factor_squarefree(BigInt("1000000000000000037")).primes.size() >= 1);

  try {
    dedekind::factor_squarefree(12);
    FAIL("expected NotSquarefree");
  } catch (const dedekind::NotSquarefree& e) {
    CHECK(e.prime() == 2);
  }
  CHECK_THROWS_AS(dedekind::factor_squarefree(49 * 3), dedekind::NotSquarefree);
  CHECK_THROWS_AS(dedekind::factor_squarefree(0), std::invalid_argument);
  CHECK_THROWS_AS(dedekind::factor_squarefree(BigInt("100000000000000000000000")), std::out_of_range);
}

TEST_CASE("factorization agrees with trial-division oracle (n <= 5000)") {
  for (long n = 1; n <= 5000; ++n) {
    const auto [primes, squarefree] = oracle::prime_divisors(n);
    if (!squarefree) {
      REQUIRE_THROWS_AS(dedekind::factor_squarefree(n), dedekind::NotSquarefree);
      continue;
    }
    const auto f = dedekind::factor_squarefree(n);
    REQUIRE(f.primes.size() == primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) REQUIRE(f.primes[i] == primes[i]);
  }
}

TEST_CASE("local solutions") {
  CHECK(dedekind::local_solutions(17, 3) == std::vector<BigInt>{2});
  CHECK(dedekind::local_solutions(17, 5) == std::vector<BigInt>{2, 3});
  CHECK(dedekind::local_solutions(1, 7) == std::vector<BigInt>{1});
  CHECK_THROWS_AS(dedekind::local_solutions(10, 5), dedekind::NotCoprime);
}

TEST_CASE("local solution count follows the +-1 case split (p <= 97)") {
  for (long p = 2; p <= 97; ++p) {
    if (oracle::prime_divisors(p).first != std::vector<long>{p}) continue;
    for (long m = 1; m < p; ++m) {
      const bool plus_minus_one = m == 1 || m == p - 1;
      const auto sols = dedekind::local_solutions(m, p);
      REQUIRE((sols.size() == 1) == plus_minus_one);
      // matches a direct scan of (m x - 1)(m - x) == 0 mod p
      std::vector<BigInt> scan;
      for (long x = 1; x < p; ++x)
        if (((m * x - 1) % p) * ((m - x + p) % p) % p == 0) scan.push_back(x);
      REQUIRE(sols == scan);
    }
  }
}

TEST_CASE("tiny primes contribute nothing to the exponent") {
  for (long n : {2L, 3L, 6L}) {
    const auto f = dedekind::factor_squarefree(n);
    for (long m : units(n)) CHECK(dedekind::count_class(m, f).s_exponent == 0);
  }
}

TEST_CASE("CRT enumeration") {
  const auto f = dedekind::factor_squarefree(15015);
  CHECK(dedekind::enumerate_crt(17, f) == kPublishedClass);
  const auto f15 = dedekind::factor_squarefree(15);
  CHECK(dedekind::enumerate_crt(1, f15) == std::vector<BigInt>{1});
  CHECK(dedekind::enumerate_crt(2, f15) == std::vector<BigInt>{2, 8});
  CHECK(dedekind::enumerate_crt(0, dedekind::factor_squarefree(1)) == std::vector<BigInt>{0});
  CHECK_THROWS_AS(dedekind::enumerate_crt(3, f15), dedekind::NotCoprime);
}

TEST_CASE("class count") {
  const auto f = dedekind::factor_squarefree(15015);
  const auto c = dedekind::count_class(17, f);
  CHECK(c.count == 16);
  CHECK(c.s_exponent == 4);
  const auto one = dedekind::count_class(1, f);
  CHECK(one.count == 1);
  CHECK(one.s_exponent == 0);
  const auto two = dedekind::count_class(2, dedekind::factor_squarefree(15));
  CHECK(two.count == 2);
  CHECK(two.s_exponent == 1);
}

TEST_CASE("CRT and linear scan agree; size is 2^s (square-free n <= 400)") {
  for (long n = 1; n <= 400; ++n) {
    const auto [primes, squarefree] = oracle::prime_divisors(n);
    if (!squarefree) continue;
    const auto f = dedekind::factor_squarefree(n);
    for (long m : units(n)) {
      const auto crt = dedekind::enumerate_crt(m, f);
      REQUIRE(crt == dedekind::enumerate_bruteforce(m, n));
      REQUIRE(crt.size() == dedekind::count_class(m, f).count);
    }
  }
}

TEST_CASE("inverse belongs to the class (n <= 500)") {
  for (long n = 1; n <= 500; ++n)
    for (long m : units(n)) {
      const BigInt inv = dedekind::mod_inverse(m, n);
      REQUIRE(dedekind::congruence_condition(m, inv, n));
      REQUIRE(dedekind::same_fractional_part(m, inv, n));
    }
}

TEST_CASE("report for the published example") {
  const auto r = dedekind::build_report(17, 15015);
  CHECK(r.base_fraction == Rational(BigInt(710), BigInt(3003)));
  CHECK(r.count == 16);
  REQUIRE(r.s_exponent.has_value());
  CHECK(*r.s_exponent == 4);
  CHECK(r.self_member);
  const std::vector<dedekind::OffsetGroup> expected{
      {880, {17, 3533}},
      {40, {6023, 12542}},
      {16, {992, 2558, 6452, 12113}},
      {-8, {563, 2987, 6107, 6998, 11567, 12458}},
      {-32, {8993, 9572}},
  };
  CHECK(r.groups == expected);
  CHECK(r.members() == kPublishedClass);
}

TEST_CASE("small reports") {
  const auto r = dedekind::build_report(1, 2);
  CHECK(r.base_fraction == Rational());
  CHECK(r.groups == std::vector<dedekind::OffsetGroup>{{0, {1}}});

  const auto r5 = dedekind::build_report(2, 5);
  CHECK(r5.base_fraction == Rational());
  CHECK(r5.groups == std::vector<dedekind::OffsetGroup>{{0, {2, 3}}});
  CHECK(dedekind::dedekind_sum_naive(2, 5).value == Rational());
  CHECK(dedekind::dedekind_sum_naive(3, 5).value == Rational());

  // non-square-free modulus: linear scan, no exponent
  const auto r12 = dedekind::build_report(5, 12);
  CHECK_FALSE(r12.s_exponent.has_value());
  CHECK(r12.members() == dedekind::enumerate_bruteforce(5, 12));
  CHECK(r12.self_member);

  const auto r1 = dedekind::build_report(0, 1);
  CHECK(r1.members() == std::vector<BigInt>{0});
}

TEST_CASE("report invariants (n <= 150)") {
  for (long n = 1; n <= 150; ++n)
    for (long m : units(n)) {
      const auto r = dedekind::build_report(m, n);
      REQUIRE(r.base_fraction >= Rational());
      REQUIRE(r.base_fraction < Rational(1));
      REQUIRE(r.self_member);
      std::size_t total = 0;
      for (std::size_t g = 0; g < r.groups.size(); ++g) {
        if (g > 0) REQUIRE(r.groups[g - 1].offset > r.groups[g].offset);
        REQUIRE(std::is_sorted(r.groups[g].members.begin(), r.groups[g].members.end()));
        for (const auto& member : r.groups[g].members) {
          REQUIRE(dedekind::gcd(member, n) == 1);
          REQUIRE(dedekind::dedekind_sum_naive(member, n).value ==
                  r.base_fraction + Rational(r.groups[g].offset));
        }
        total += r.groups[g].members.size();
      }
      REQUIRE(total == r.count);
      if (r.s_exponent) REQUIRE(r.count == (std::size_t{1} << *r.s_exponent));
    }
}

TEST_CASE("classification") {
  const auto c5 = dedekind::classify_all(5);
  const std::vector<dedekind::FractionalClass> expected{{0, {2, 3}}, {2, {1}}, {3, {4}}};
  CHECK(c5 == expected);
  CHECK(dedekind::classify_all(1) == std::vector<dedekind::FractionalClass>{{0, {0}}});

  const auto big = dedekind::classify_all(15015);
  const auto it = std::find_if(big.begin(), big.end(), [](const auto& c) { return c.residue == 3550; });
  REQUIRE(it != big.end());
  CHECK(it->members == kPublishedClass);
  CHECK_THROWS_AS(dedekind::classify_all(0), std::invalid_argument);
}

TEST_CASE("classes partition the units and are closed under inverse (n <= 500)") {
  for (long n = 1; n <= 500; ++n) {
    const auto classes = dedekind::classify_all(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i > 0) REQUIRE(classes[i - 1].residue < classes[i].residue);
      total += classes[i].members.size();
      for (const auto& m : classes[i].members) {
        REQUIRE(dedekind::fractional_residue(m, n) == classes[i].residue);
        REQUIRE(std::binary_search(classes[i].members.begin(), classes[i].members.end(),
                                   dedekind::mod_inverse(m, n)));
      }
    }
    REQUIRE(static_cast<std::int64_t>(total) == oracle::totient(n));
  }
}

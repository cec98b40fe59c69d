#include "dedekind_cli/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <dedekind/dedekind_sum.hpp>
#include <dedekind/equivalence.hpp>
#include <dedekind/exact_arith.hpp>

#include "dedekind_cli/reference_table.hpp"

namespace dedekind::cli {
namespace {

// A check returns an empty string on success, otherwise a counterexample.
using Check = std::function<std::string()>;

std::string pair_text(long m, long n) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::string oracle_equivalence() {
  for (long n = 1; n <= 60; ++n)
    for (long m = 0; m < n; ++m) {
      if (!coprime(m, n)) continue;
      if (dedekind_sum_bhk(m, n).value != dedekind_sum_naive(m, n).value) return pair_text(m, n);
    }
  return {};
}

std::string three_way_agreement() {
  for (long n = 1; n <= 40; ++n) {
    std::vector<long> units;
    std::vector<Rational> sums;
    for (long m = 0; m < n; ++m)
      if (coprime(m, n)) {
        units.push_back(m);
        sums.push_back(dedekind_sum_naive(m, n).value);
      }
    for (std::size_t i = 0; i < units.size(); ++i)
      for (std::size_t j = 0; j < units.size(); ++j) {
        const bool a = congruence_condition(units[i], units[j], n);
        const bool b = same_fractional_part(units[i], units[j], n);
        const bool c = (sums[i] - sums[j]).is_integer();
        if (a != b || b != c)
          return "m1=" + std::to_string(units[i]) + " m2=" + std::to_string(units[j]) +
                 " n=" + std::to_string(n);
      }
  }
  return {};
}

std::string crt_matches_scan() {
  for (long n = 1; n <= 200; ++n) {
    SquarefreeFactorization fact;
    try {
      fact = factor_squarefree(n);
    } catch (const NotSquarefree&) {
      continue;
    }
    for (long m = 0; m < n; ++m) {
      if (!coprime(m, n)) continue;
      const auto crt = enumerate_crt(m, fact);
      if (crt != enumerate_bruteforce(m, n)) return pair_text(m, n);
      if (crt.size() != count_class(m, fact).count) return pair_text(m, n) + " (count)";
    }
  }
  return {};
}

std::string reciprocity() {
  for (long m = 1; m <= 30; ++m)
    for (long n = 1; n <= 30; ++n) {
      if (!coprime(m, n)) continue;
      const Rational lhs = dedekind_sum_bhk(m, n).value + dedekind_sum_bhk(n, m).value;
      const Rational rhs = Rational(BigInt(m * m + n * n + 1), BigInt(m * n)) - Rational(3);
      if (lhs != rhs) return pair_text(m, n);
    }
  return {};
}

std::string closed_form_unit() {
  for (long n = 1; n <= 200; ++n)
    if (dedekind_sum_bhk(1, n).value != Rational(BigInt((n - 1) * (n - 2)), BigInt(n)))
      return "n=" + std::to_string(n);
  return {};
}

std::string symmetries() {
  for (long n = 1; n <= 60; ++n)
    for (long m = 0; m < n; ++m) {
      if (!coprime(m, n)) continue;
      const Rational s = dedekind_sum_naive(m, n).value;
      if (dedekind_sum_naive(mod_inverse(m, n), n).value != s) return pair_text(m, n) + " (inverse)";
      if (dedekind_sum_naive(n - m, n).value != -s) return pair_text(m, n) + " (negation)";
    }
  return {};
}

std::string determinant_identity() {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<long> dist(1, 1'000'000'000L);
  for (int trial = 0; trial < 500; ++trial) {
    const long n = dist(rng);
    const long m = dist(rng) % n;
    if (!coprime(m, n)) continue;
    const auto cf = cf_expand(m, n);
    for (std::size_t j = 1; j <= cf.length(); ++j) {
      const BigInt det = cf.numerators[j] * cf.denominators[j - 1] - cf.denominators[j] * cf.numerators[j - 1];
      if (det != (j % 2 == 1 ? 1 : -1)) return pair_text(m, n);
    }
  }
  return {};
}

std::string local_case_split() {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L})
    for (long m = 1; m < p; ++m) {
      const bool plus_minus_one = m == 1 || m == p - 1;
      if ((local_solutions(m, p).size() == 1) != plus_minus_one) return pair_text(m, p);
    }
  return {};
}

std::string classification_partition() {
  for (long n = 1; n <= 100; ++n) {
    long phi = 0;
    for (long m = 0; m < n; ++m) phi += coprime(m, n) ? 1 : 0;
    long total = 0;
    for (const auto& c : classify_all(n)) {
      total += static_cast<long>(c.members.size());
      for (const auto& u : c.members)
        if (!std::binary_search(c.members.begin(), c.members.end(), mod_inverse(u, n)))
          return "n=" + std::to_string(n) + " inverse missing";
    }
    if (total != phi) return "n=" + std::to_string(n) + " sizes";
  }
  return {};
}

std::string published_example() {
  const auto& table = published_table();
  const auto diff = diff_against(build_report(table.m1, table.n), table);
  return diff.empty() ? std::string{} : diff.front();
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"continued-fraction formula matches definition (n <= 60)", oracle_equivalence},
      {"condition, residues and integrality agree (n <= 40)", three_way_agreement},
      {"CRT enumeration matches linear scan (square-free n <= 200)", crt_matches_scan},
      {"reciprocity law (m, n <= 30)", reciprocity},
      {"S(1/n) = (n-1)(n-2)/n (n <= 200)", closed_form_unit},
      {"inverse symmetry and negation (n <= 60)", symmetries},
      {"convergent determinant identity (500 random pairs)", determinant_identity},
      {"local solution count is 1 iff m = +-1 mod p (p <= 31)", local_case_split},
      {"classes partition the units and are closed under inverse (n <= 100)", classification_partition},
      {"class of 17 mod 15015 matches published table", published_example},
  };

  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    results.push_back({name, failure.empty(), failure});
  }
  return results;
}

}  // namespace dedekind::cli

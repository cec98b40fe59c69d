#include "dedekind/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dedekind/dedekind_sum.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/exact_arith.hpp"

namespace dedekind {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 scan_bound(const BigInt& n) {
  const auto bound = to_uint64(n);
  if (!bound) throw std::out_of_range("modulus " + to_string(n) + " is too large to scan");
  return *bound;
}

// Runs body(lo, hi) over `jobs` contiguous slices of [0, total) and returns the
// per-slice results in slice order.
template <class Body>
auto run_sliced(u64 total, unsigned jobs, Body body) {
  using Result = decltype(body(u64{0}, u64{0}));
  const u64 slices = std::clamp<u64>(jobs, 1, std::max<u64>(total, 1));
  std::vector<Result> results(slices);
  if (slices == 1) {
    results[0] = body(0, total);
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(slices);
  for (u64 i = 0; i < slices; ++i) {
    const u64 lo = static_cast<u64>(static_cast<u128>(total) * i / slices);
    const u64 hi = static_cast<u64>(static_cast<u128>(total) * (i + 1) / slices);
    workers.emplace_back([&results, &body, i, lo, hi] { results[i] = body(lo, hi); });
  }
  for (auto& w : workers) w.join();
  return results;
}

bool is_plus_minus_one(const BigInt& residue, const BigInt& p) {
  return residue == 1 || residue == p - 1;
}

}  // namespace

bool congruence_condition(const BigInt& m1, const BigInt& m2, const BigInt& n) {
  const BigInt a = reduce_unit(m1, n);
  const BigInt b = reduce_unit(m2, n);
  return floor_mod(BigInt((a * b - 1) * (a - b)), n) == 0;
}

bool same_fractional_part(const BigInt& m1, const BigInt& m2, const BigInt& n) {
  return fractional_residue(m1, n) == fractional_residue(m2, n);
}

std::vector<BigInt> enumerate_bruteforce(const BigInt& m1, const BigInt& n, unsigned jobs) {
  const BigInt reduced = reduce_unit(m1, n);
  const u64 modulus = scan_bound(n);
  const u64 a = *to_uint64(reduced);

  auto slices = run_sliced(modulus, jobs, [a, modulus](u64 lo, u64 hi) {
    std::vector<u64> found;
    for (u64 x = lo; x < hi; ++x) {
      const u64 ax = static_cast<u64>(static_cast<u128>(a) * x % modulus);
      const u64 first = ax == 0 ? modulus - 1 : ax - 1;  // a x - 1
      const u64 second = a >= x ? a - x : a + (modulus - x);  // a - x
      if (static_cast<u128>(first) * second % modulus != 0) continue;
      if (std::gcd(x, modulus) != 1) continue;
      found.push_back(x);
    }
    return found;
  });

  std::vector<BigInt> members;
  for (const auto& slice : slices)
    for (u64 x : slice) members.push_back(from_uint64(x));
  return members;
}

SquarefreeFactorization factor_squarefree(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + to_string(n));
  const auto value = to_uint64(n);
  if (!value) throw std::out_of_range(to_string(n) + " is too large to factor");

  SquarefreeFactorization fact{{}, n};
  u64 rest = *value;
  auto take = [&](u64 p) {
    if (rest % p != 0) return;
    rest /= p;
    if (rest % p == 0) throw NotSquarefree(n, from_uint64(p));
    fact.primes.push_back(from_uint64(p));
  };
  take(2);
  take(3);
  for (u64 p = 5; static_cast<u128>(p) * p <= rest; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) fact.primes.push_back(from_uint64(rest));
  return fact;
}

std::vector<BigInt> local_solutions(const BigInt& m1, const BigInt& p) {
  if (p < 2) throw std::invalid_argument("p must be a prime, got " + to_string(p));
  if (floor_mod(m1, p) == 0) throw NotCoprime(m1, p);
  const BigInt r = floor_mod(m1, p);
  const BigInt inv = mod_inverse(r, p);
  if (r == inv) return {r};
  return r < inv ? std::vector<BigInt>{r, inv} : std::vector<BigInt>{inv, r};
}

std::vector<BigInt> enumerate_crt(const BigInt& m1, const SquarefreeFactorization& fact) {
  const BigInt reduced = reduce_unit(m1, fact.n);
  if (fact.primes.empty()) return {reduced};

  std::vector<std::vector<BigInt>> locals;
  locals.reserve(fact.primes.size());
  for (const auto& p : fact.primes) locals.push_back(local_solutions(reduced, p));

  std::vector<BigInt> members;
  std::vector<std::size_t> choice(locals.size(), 0);
  std::vector<ResidueClass> parts(locals.size());
  while (true) {
    for (std::size_t j = 0; j < locals.size(); ++j)
      parts[j] = ResidueClass{locals[j][choice[j]], fact.primes[j]};
    members.push_back(crt_combine(parts).residue);

    // odometer over the local choices
    std::size_t j = 0;
    while (j < locals.size() && ++choice[j] == locals[j].size()) choice[j++] = 0;
    if (j == locals.size()) break;
  }
  std::sort(members.begin(), members.end());
  return members;
}

ClassCount count_class(const BigInt& m1, const SquarefreeFactorization& fact) {
  const BigInt reduced = reduce_unit(m1, fact.n);
  unsigned s = 0;
  for (const auto& p : fact.primes)
    if (!is_plus_minus_one(floor_mod(reduced, p), p)) ++s;
  return ClassCount{std::uint64_t{1} << s, s};
}

std::vector<BigInt> EquivalenceReport::members() const {
  std::vector<BigInt> all;
  for (const auto& g : groups) all.insert(all.end(), g.members.begin(), g.members.end());
  std::sort(all.begin(), all.end());
  return all;
}

EquivalenceReport build_report(const BigInt& m1, const BigInt& n, unsigned jobs) {
  const BigInt reduced = reduce_unit(m1, n);

  EquivalenceReport report;
  report.n = n;
  report.m1 = reduced;

  std::vector<BigInt> members;
  std::optional<SquarefreeFactorization> fact;
  try {
    fact = factor_squarefree(n);
  } catch (const NotSquarefree&) {
  }
  if (fact) {
    members = enumerate_crt(reduced, *fact);
    report.s_exponent = count_class(reduced, *fact).s_exponent;
  } else {
    members = enumerate_bruteforce(reduced, n, jobs);
  }

  report.base_fraction = Rational(fractional_residue(reduced, n), n);
  std::map<BigInt, std::vector<BigInt>, std::greater<>> by_offset;
  for (const auto& member : members) {
    const Rational offset = dedekind_sum_bhk(member, n).value - report.base_fraction;
    if (!offset.is_integer())
      throw std::logic_error("member " + to_string(member) + " has a different fractional part");
    by_offset[offset.numerator()].push_back(member);
  }
  for (auto& [offset, group] : by_offset) report.groups.push_back({offset, std::move(group)});

  report.count = members.size();
  report.self_member = std::binary_search(members.begin(), members.end(), reduced);
  return report;
}

std::vector<FractionalClass> classify_all(const BigInt& n, unsigned jobs) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + to_string(n));
  const u64 modulus = scan_bound(n);

  auto slices = run_sliced(modulus, jobs, [&n, modulus](u64 lo, u64 hi) {
    std::vector<std::pair<BigInt, BigInt>> tagged;  // (residue, unit)
    for (u64 x = lo; x < hi; ++x) {
      if (std::gcd(x, modulus) != 1) continue;
      const BigInt unit = from_uint64(x);
      tagged.emplace_back(fractional_residue(unit, n), unit);
    }
    return tagged;
  });

  std::map<BigInt, std::vector<BigInt>> by_residue;
  for (auto& slice : slices)
    for (auto& [residue, unit] : slice) by_residue[residue].push_back(std::move(unit));

  std::vector<FractionalClass> classes;
  classes.reserve(by_residue.size());
  for (auto& [residue, members] : by_residue) classes.push_back({residue, std::move(members)});
  return classes;
}

}  // namespace dedekind

#include "dedekind_cli/bench.hpp"

#include <chrono>

#include <dedekind/dedekind_sum.hpp>
#include <dedekind/exact_arith.hpp>

namespace dedekind::cli {
namespace {

template <class F>
double mean_microseconds(std::size_t repetitions, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < repetitions; ++i) f();
  const std::chrono::duration<double, std::micro> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count() / static_cast<double>(repetitions);
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BigInt>& moduli, const BigInt& m,
                                std::size_t repetitions, const BigInt& naive_cap) {
  if (repetitions == 0) repetitions = 1;
  for (const auto& n : moduli) reduce_unit(m, n);

  std::vector<BenchRow> rows;
  for (const auto& n : moduli) {
    BenchRow row;
    row.n = n;
    row.m = floor_mod(m, n);

    DedekindEvaluation bhk = dedekind_sum_bhk(m, n);
    row.bhk_us = mean_microseconds(repetitions, [&] { bhk = dedekind_sum_bhk(m, n); });
    row.value = bhk.value;

    if (n <= naive_cap) {
      DedekindEvaluation naive = dedekind_sum_naive(m, n);
      row.naive_us = mean_microseconds(repetitions, [&] { naive = dedekind_sum_naive(m, n); });
      row.agree = naive.value == bhk.value;
    }

    const BigInt reduced = floor_mod(m, n);
    const BigInt residue = floor_mod(reduced + mod_inverse(reduced, n), n);
    row.fraction_ok = (bhk.value - Rational(residue, n)).is_integer();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dedekind::cli

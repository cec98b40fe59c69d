#include "dedekind/dedekind_sum.hpp"

#include <stdexcept>

#include "dedekind/errors.hpp"
#include "dedekind/exact_arith.hpp"

namespace dedekind {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational();
  // x - floor(x) - 1/2 = (2 (p - floor(x) q) - q) / (2 q)
  const BigInt& q = x.denominator();
  const BigInt fractional_numerator = x.numerator() - x.floor() * q;
  return Rational(BigInt(2 * fractional_numerator - q), BigInt(2 * q));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Naive: return "naive";
    case Method::Bhk: return "bhk";
  }
  return "unknown";
}

BigInt reduce_unit(const BigInt& m, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + to_string(n));
  if (!coprime(m, n)) throw NotCoprime(m, n);
  return floor_mod(m, n);
}

ContinuedFraction cf_expand(const BigInt& m, const BigInt& n) {
  const BigInt reduced = reduce_unit(m, n);

  ContinuedFraction cf;
  // s_{-2} = 0, s_{-1} = 1, t_{-2} = 1, t_{-1} = 0
  BigInt s_prev2 = 0, s_prev = 1;
  BigInt t_prev2 = 1, t_prev = 0;
  BigInt num = reduced, den = n, q, rem;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt s = q * s_prev + s_prev2;
    BigInt t = q * t_prev + t_prev2;
    cf.quotients.push_back(q);
    cf.numerators.push_back(s);
    cf.denominators.push_back(t);
    s_prev2 = std::move(s_prev);
    s_prev = std::move(s);
    t_prev2 = std::move(t_prev);
    t_prev = std::move(t);
    if (rem == 0) break;
    num = std::move(den);
    den = std::move(rem);
  }
  return cf;
}

DedekindEvaluation dedekind_sum_naive(const BigInt& m, const BigInt& n) {
  const BigInt reduced = reduce_unit(m, n);

  Rational sum;
  BigInt mk = 0;  // m * k mod n, advanced incrementally
  for (BigInt k = 1; k <= n; ++k) {
    mk += reduced;
    if (mk >= n) mk -= n;
    sum += sawtooth(Rational(k, n)) * sawtooth(Rational(mk, n));
  }
  sum *= Rational(12);
  return DedekindEvaluation{reduced, n, std::move(sum), fractional_residue(reduced, n),
                            Method::Naive};
}

DedekindEvaluation dedekind_sum_bhk(const BigInt& m, const BigInt& n) {
  const BigInt reduced = reduce_unit(m, n);
  const ContinuedFraction cf = cf_expand(reduced, n);
  const std::size_t k = cf.length();

  Rational value;
  if (k >= 1) {
    BigInt alternating = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (j % 2 == 1)
        alternating += cf.quotients[j];
      else
        alternating -= cf.quotients[j];
    }
    const BigInt& s_k = cf.numerators[k];
    const BigInt& t_k = cf.denominators[k];
    const BigInt& t_before = cf.denominators[k - 1];
    if (k % 2 == 1)
      value = Rational(BigInt(alternating - 3)) + Rational(BigInt(s_k + t_before), t_k);
    else
      value = Rational(alternating) + Rational(BigInt(s_k - t_before), t_k);
  }
  return DedekindEvaluation{reduced, n, std::move(value), fractional_residue(reduced, n),
                            Method::Bhk};
}

DedekindEvaluation dedekind_sum(const BigInt& m, const BigInt& n, Method method) {
  return method == Method::Naive ? dedekind_sum_naive(m, n) : dedekind_sum_bhk(m, n);
}

BigInt fractional_residue(const BigInt& m, const BigInt& n) {
  const BigInt reduced = reduce_unit(m, n);
  return floor_mod(reduced + mod_inverse(reduced, n), n);
}

}  // namespace dedekind

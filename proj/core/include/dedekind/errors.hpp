#pragma once

#include <stdexcept>
#include <string>

#include "dedekind/bigint.hpp"

namespace dedekind {

class ZeroDenominator : public std::domain_error {
 public:
  ZeroDenominator() : std::domain_error("rational with zero denominator") {}
};

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(const BigInt& m, const BigInt& n)
      : std::domain_error(to_string(m) + " is not invertible mod " + to_string(n)) {}
};

class NotCoprime : public std::domain_error {
 public:
  NotCoprime(const BigInt& m, const BigInt& n)
      : std::domain_error("gcd(" + to_string(m) + ", " + to_string(n) + ") != 1") {}
};

/// Raised by crt_combine when two moduli share a factor.
class NonCoprimeModuli : public std::domain_error {
 public:
  NonCoprimeModuli(const BigInt& a, const BigInt& b)
      : std::domain_error("moduli " + to_string(a) + " and " + to_string(b) +
                          " are not coprime") {}
};

class NotSquarefree : public std::domain_error {
 public:
  NotSquarefree(const BigInt& n, const BigInt& prime)
      : std::domain_error(to_string(n) + " is divisible by " + to_string(prime) + "^2"),
        prime_(prime) {}

  const BigInt& prime() const noexcept { return prime_; }

 private:
  BigInt prime_;
};

}  // namespace dedekind

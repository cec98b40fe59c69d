#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "dedekind/bigint.hpp"

namespace dedekind {

/// Exact fraction kept in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT(implicit)
  Rational(long numerator) : num_(numerator), den_(1) {}               // NOLINT(implicit)
  /// Throws ZeroDenominator when denominator == 0.
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  BigInt floor() const;

  /// "p/q" in lowest terms, integers as "p/1".
  std::string to_string() const;
  /// Like to_string() but integers render as "p".
  std::string to_display_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt numerator, BigInt denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  void normalize();

  BigInt num_;
  BigInt den_;
};

inline bool is_integer(const Rational& x) { return x.is_integer(); }

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input and
/// ZeroDenominator for q == 0.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace dedekind

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace hmod {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of literals

  template <std::unsigned_integral I>
  Rational(I n) : value_(static_cast<unsigned long>(n)) {}  // NOLINT

  /// n/d; throws DomainError when d == 0.
  Rational(long n, long d);

  explicit Rational(mpq_class v);

  /// 2^e for any integer e.
  static Rational pow2(long e);

  /// Accepts "n", "-n", "n/d" in base 10. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  /// Canonical external form, always "num/den" (e.g. "1/1", "-3/4").
  std::string str() const;

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Largest integer <= x and smallest integer >= x.
mpz_class floor(const Rational& x);
mpz_class ceil(const Rational& x);

/// Exact square root when x is the square of a rational.
bool exact_sqrt(const Rational& x, Rational& root);

/// Decimal rendering with `digits` fractional digits, rounded toward -inf
/// (`round_up == false`) or +inf. Used for outward interval printing.
std::string to_decimal(const Rational& x, unsigned digits, bool round_up);

}  // namespace hmod

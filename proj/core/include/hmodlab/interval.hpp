// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/rational.hpp"

#include <string>

namespace hmod {

/// Default number of fractional bits kept in interval endpoints.
inline constexpr unsigned kDefaultPrecision = 128;

/// Closed interval [lo, hi] with rational endpoints. Every operation that
/// can leave the dyadic grid rounds its result outward to `prec`
/// fractional bits, so the enclosure stays sound and reproducible.
class Interval {
 public:
  Interval() = default;
  Interval(Rational lo, Rational hi);  // throws DomainError if lo > hi

  static Interval point(const Rational& x) { return Interval(x, x); }
  static Interval unit() { return Interval(Rational(0), Rational(1)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  /// sup |x| over the interval.
  Rational magnitude() const;
  /// inf |x| over the interval (0 if the interval straddles zero).
  Rational mignitude() const;

  /// Outward rounding to a dyadic grid of `prec` fractional bits.
  Interval rounded(unsigned prec = kDefaultPrecision) const;

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

  friend bool operator==(const Interval&, const Interval&) = default;

  /// "[lo, hi]" with rationals in num/den form.
  std::string str() const;

 private:
  Rational lo_;
  Rational hi_;
};

/// Product of two intervals, rounded outward.
Interval mul(const Interval& a, const Interval& b, unsigned prec = kDefaultPrecision);

/// c * I, rounded outward.
Interval scale(const Interval& a, const Rational& c, unsigned prec = kDefaultPrecision);

/// Square root of an interval with lo >= 0 (negative lower parts clamp to 0
/// only when `clamp` is set; otherwise DomainError). Rounded outward.
Interval sqrt(const Interval& a, unsigned prec = kDefaultPrecision, bool clamp = false);

/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

/// Interval of absolute values {|x| : x in a}.
Interval abs(const Interval& a);

/// Dyadic floor/ceil of x at `prec` fractional bits.
Rational round_down(const Rational& x, unsigned prec);
Rational round_up(const Rational& x, unsigned prec);

}  // namespace hmod

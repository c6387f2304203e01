// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/rational.hpp"

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace hmod {

struct Breakpoint {
  Rational t;
  Rational v;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on [0,1] with rational breakpoints.
///
/// The representation is always canonical: abscissae strictly increase from
/// 0 to 1 and no interior breakpoint is collinear with its neighbours. Two
/// PwlFuncs are therefore equal as functions iff they are structurally equal.
class PwlFunc {
 public:
  /// The zero function.
  PwlFunc();

  /// Validates abscissae (strictly increasing, first 0, last 1) and removes
  /// collinear interior points. Throws DomainError on invalid input.
  static PwlFunc from_points(std::vector<Breakpoint> points);

  static PwlFunc constant(const Rational& c);
  /// t -> slope * t + intercept
  static PwlFunc affine(const Rational& slope, const Rational& intercept);
  /// t -> t
  static PwlFunc identity() { return affine(Rational(1), Rational(0)); }

  /// Exact value at t. Throws DomainError when t is outside [0,1].
  Rational operator()(const Rational& t) const;

  std::span<const Breakpoint> breakpoints() const { return points_; }
  std::size_t size() const { return points_.size(); }

  bool is_zero() const;
  bool is_constant() const { return points_.size() == 2 && points_[0].v == points_[1].v; }
  bool is_nonnegative() const;

  /// Exact (min, max) of the function over [a, b] subset of [0,1].
  std::pair<Rational, Rational> range(const Rational& a, const Rational& b) const;

  PwlFunc scaled(const Rational& c) const;

  friend bool operator==(const PwlFunc&, const PwlFunc&) = default;
  /// Total structural order (any fixed order works for canonical maps).
  friend std::strong_ordering operator<=>(const PwlFunc& a, const PwlFunc& b);

 private:
  explicit PwlFunc(std::vector<Breakpoint> canonical) : points_(std::move(canonical)) {}

  std::vector<Breakpoint> points_;
};

/// Removes interior breakpoints collinear with their neighbours. The input
/// must already have valid abscissae.
std::vector<Breakpoint> canonical_points(std::vector<Breakpoint> points);

using PwlTerm = std::pair<Rational, PwlFunc>;

/// Exact sum of c_i * f_i in canonical form.
PwlFunc pwl_lincomb(std::span<const PwlTerm> terms);

inline PwlFunc operator+(const PwlFunc& f, const PwlFunc& g) {
  const PwlTerm terms[] = {{Rational(1), f}, {Rational(1), g}};
  return pwl_lincomb(terms);
}
inline PwlFunc operator-(const PwlFunc& f, const PwlFunc& g) {
  const PwlTerm terms[] = {{Rational(1), f}, {Rational(-1), g}};
  return pwl_lincomb(terms);
}

enum class Extremum { Min, Max };

/// Pointwise min or max. Crossing abscissae become breakpoints.
PwlFunc pwl_meet_join(const PwlFunc& f, const PwlFunc& g, Extremum mode);

/// max_t |f(t)|; attained at a breakpoint.
Rational pwl_sup_norm(const PwlFunc& f);

/// f_{q,m}(t) = max(0, min(1, m (q - t))), with f_{q,0} = 0.
/// Requires 0 < q <= 1 and m >= 0, else ParameterError.
PwlFunc make_f(const Rational& q, long m);

/// The radicand f_{q,m} - f_{q,m-1} of psi_{q,m}; requires m >= 1.
PwlFunc psi_sq(const Rational& q, long m);

/// t -> |t - c| for c in [0,1]; vanishes only at c.
PwlFunc make_hat(const Rational& c);

/// Sorted union of the abscissae of several functions.
std::vector<Rational> merged_abscissae(std::span<const PwlFunc* const> fs);

}  // namespace hmod

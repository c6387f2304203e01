// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/errors.hpp"
#include "hmodlab/func_lin.hpp"
#include "hmodlab/interval.hpp"

#include <cstdint>
#include <optional>

namespace hmod {

struct EnclosureOptions {
  Rational tol = Rational::pow2(-30);
  std::uint64_t budget = 1'000'000;  // subinterval evaluations
  unsigned precision = kDefaultPrecision;
};

/// Raised when a branch-and-bound run hits its evaluation budget before the
/// enclosure is narrow enough. Carries the best (sound) enclosure so far.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, Interval best) : Error(what), best_(std::move(best)) {}
  const Interval& best() const { return best_; }

 private:
  Interval best_;
};

/// Sound enclosure of {x(t) : t in domain}. Throws DomainError unless
/// domain is a subset of [0,1].
Interval eval_interval(const FuncLin& x, const Interval& domain, unsigned prec = kDefaultPrecision);

inline Interval eval_point(const FuncLin& x, const Rational& t, unsigned prec = kDefaultPrecision) {
  return eval_interval(x, Interval::point(t), prec);
}

/// Enclosure [lo, hi] of sup_{t in [0,1]} |x(t)| with hi - lo <= tol.
///
/// Best-first bisection: the box with the largest upper bound is split, the
/// midpoint value raises the global lower bound, and boxes whose upper bound
/// cannot beat the lower bound are pruned. Purely piecewise-linear inputs
/// take an exact path. Throws BudgetExhausted.
Interval sup_norm_enclosure(const FuncLin& x, const EnclosureOptions& opts = {});

struct ZeroVerdict {
  enum class Status { ExactZero, NonZero, Undecided };
  Status status = Status::ExactZero;
  /// A point whose value enclosure excludes zero (NonZero only).
  std::optional<Rational> separating_point;
  /// Value enclosure at the separating point, or a sup-norm enclosure when
  /// the verdict is Undecided.
  std::optional<Interval> enclosure;
};

/// Sound but incomplete zero test. ExactZero iff the canonical form is empty.
ZeroVerdict decide_zero(const FuncLin& x, unsigned prec = kDefaultPrecision);

inline bool is_zero_exact(const FuncLin& x) { return x.empty(); }

}  // namespace hmod

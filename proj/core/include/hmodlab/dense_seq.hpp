// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hmod {

/// Deterministic enumeration n -> q_n of points of (0,1].
///
/// The builtin sequence is breadth-first over dyadic levels:
///   1, 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, 1/16, ...
/// i.e. q_1 = 1 and level j >= 1 occupies positions 2^(j-1)+1 .. 2^j with
/// the odd numerators in increasing order. Its range is dense in [0,1].
/// A user-supplied finite list may replace it.
class DenseSeq {
 public:
  static DenseSeq dyadic() { return DenseSeq(); }
  /// Values must lie in (0,1] and be pairwise distinct (ParameterError).
  static DenseSeq from_values(std::vector<Rational> values);
  /// One rational per line; blank lines and '#' comments are skipped.
  static DenseSeq parse(std::istream& in);

  /// q_n for n >= 1. ParameterError for n == 0 or past the end of a list.
  Rational operator()(std::uint64_t n) const;

  /// nullopt for the infinite builtin enumeration.
  std::optional<std::uint64_t> length() const;
  bool is_builtin() const { return builtin_; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  DenseSeq() = default;

  bool builtin_ = true;
  std::vector<Rational> values_;
};

/// n-th term of the builtin dyadic enumeration.
Rational dyadic_term(std::uint64_t n);

/// Position of an odd dyadic k/2^j in (0,1] within the builtin enumeration;
/// nullopt when q is not such a dyadic.
std::optional<std::uint64_t> dyadic_position(const Rational& q);

}  // namespace hmod

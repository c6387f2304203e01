// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/construction.hpp"
#include "hmodlab/enclosure.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hmod {

/// An interval (q_n - eps, q_n + eps) on which |b0| >= d > 0, certified by
/// interval evaluation over the closed window clipped to [0,1].
struct WitnessWindow {
  std::uint64_t n = 0;
  Rational q;
  Rational epsilon;
  Rational d;
};

struct WindowSearch {
  std::uint64_t depth = 64;          // rows n = 1..depth are tried in order
  int first_level = 2;               // eps = 2^-first_level, ...
  int levels = 4;                    // ... down to 2^-(first_level + levels - 1)
  std::optional<std::uint64_t> row;  // restrict the search to one row
  unsigned subdivisions = 8;         // pieces per window when bounding |b0| below
  unsigned precision = kDefaultPrecision;
};

/// First row n (in search order) admitting a certified window; among the
/// tested radii the one with the largest certified d wins, ties going to
/// the wider window. NotApplicable for b0 == 0; SearchExhausted if no row
/// within the search limits certifies a window.
WitnessWindow find_witness_window(const FuncLin& b0, const DenseSeq& qs, const WindowSearch& search = {});

struct GapCrossCheck {
  std::uint64_t lower_cutoff = 0;  // M
  std::uint64_t upper_cutoff = 0;  // M'
  Rational bound;                  // gap_bound(M, M')
  Interval gap;                    // cauchy_gap enclosure on row n
};

/// Quantitative certificate that solve_constraints(b0) is not in E.
///
/// On row n the tail sums are 4^-n |b0|^2 (f_{q,M'} - f_{q,M}). At
/// t = q_n - 1/M', inside the window once 1/M' < min(eps, q_n), this equals
/// 4^-n b0(t)^2 (1 - M/M') >= 4^-n d^2 (1 - M/M'). Taking M' = 2M gives a
/// gap that never drops below 4^-n d^2 / 2, so the partial sums of
/// sum |b_a|^2 are not uniformly Cauchy.
struct NonMembershipWitness {
  WitnessWindow window;
  /// Smallest M' for which gap_bound(., M') is valid.
  std::uint64_t min_upper_cutoff = 0;
  /// 4^-n d^2 / 2
  Rational asymptote;
  std::vector<GapCrossCheck> cross_checks;

  /// 4^-n d^2 (1 - M/M'); ParameterError unless M < M' and
  /// M' >= min_upper_cutoff.
  Rational gap_bound(std::uint64_t lower_cutoff, std::uint64_t upper_cutoff) const;
};

struct RefutationOptions {
  WindowSearch search;
  EnclosureOptions enclosure;
  /// Number of (M, M') pairs cross-checked against cauchy_gap (at most 5).
  std::size_t cross_checks = 5;
};

/// Finds a window and verifies the gap bound against certified Cauchy-gap
/// enclosures; CertificateViolation if an enclosure contradicts the bound.
NonMembershipWitness refute_membership(const FuncLin& b0, const DenseSeq& qs, const RefutationOptions& opts = {});

struct ProbeOptions {
  EnclosureOptions enclosure;
  RefutationOptions refutation;
  /// Maximum number of excluded (n, m) candidates evaluated for the residual.
  std::uint64_t candidate_budget = 100'000;
};

struct ComplementReport {
  std::uint64_t rows = 0;                 // N
  std::uint64_t cols = 0;                 // M
  std::uint64_t relations_checked = 0;    // N * M inner products <zeta_{n,m}, x>
  std::vector<Index> nonzero_relations;   // should stay empty
  /// Enclosure of sup over excluded (n,m) of ||<zeta_{n,m}, x>|| for the
  /// truncation x; width <= tol.
  Interval residual;
  /// The evaluated index with the largest residual lower bound, if any.
  std::optional<Index> residual_argmax;
  std::uint64_t candidates_evaluated = 0;
  /// Present whenever b0 is not exactly zero.
  std::optional<NonMembershipWitness> witness;
};

/// Truncates solve_constraints(b0) to rows n <= N and columns m <= M (plus
/// the 0-entry), checks orthogonality to every included zeta exactly, and
/// encloses the residual against the excluded zetas.
ComplementReport complement_probe(const FuncLin& b0, std::uint64_t rows, std::uint64_t cols, const DenseSeq& qs,
                                  const ProbeOptions& opts = {});

}  // namespace hmod

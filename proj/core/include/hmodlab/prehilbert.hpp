// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace hmod {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Exact basis of {v : A v = 0} by Gauss-Jordan elimination. Each basis
/// vector has a 1 in its free coordinate.
std::vector<RationalVector> nullspace(RationalMatrix a);

/// Exact solution of the square system G c = b; DomainError if singular.
RationalVector solve(RationalMatrix g, RationalVector b);

/// ||v - P v||^2 where P projects onto span(rows of `spanning`), computed
/// exactly from the normal equations. The spanning rows must be independent.
Rational distance_sq_to_span(const RationalVector& v, const RationalMatrix& spanning);

/// The pre-Hilbert warm-up: in the span of e_1..e_N with S = {e_n - 2 e_{n+1}},
/// S^perp is trivial in the finitely supported space, while
/// phi = (2^-n)_n is orthogonal to all of S in the completion.
struct PreHilbertReport {
  std::uint64_t dimension = 0;              // N
  std::vector<RationalVector> kernel;       // solutions of <s_n, v> = 0, n < N
  RationalVector expected_kernel;           // (2^(N-1), ..., 2, 1)
  bool kernel_is_powers_of_two = false;     // kernel == span{expected_kernel}
  RationalVector phi_relations;             // <e_n - 2e_{n+1}, phi> for n = 1..N
  bool phi_orthogonal = false;              // every relation is exactly 0
  Rational distance_sq;                     // dist(phi_N, span{s_1..s_{N-1}})^2
  Rational phi_norm_sq_limit = Rational(1, 3);
};

/// Requires N >= 2 (ParameterError).
PreHilbertReport prehilbert_demo(std::uint64_t n);

}  // namespace hmod

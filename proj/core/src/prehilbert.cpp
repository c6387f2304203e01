// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/prehilbert.hpp"

#include "hmodlab/errors.hpp"

#include <algorithm>
#include <string>

namespace hmod {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = a[row][col].inverse();
    for (Rational& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<RationalVector> nullspace(RationalMatrix a) {
  if (a.empty()) return {};
  const std::size_t cols = a.front().size();
  const std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalVector v(cols);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(RationalMatrix g, RationalVector b) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) g[i].push_back(b[i]);
  const std::vector<std::size_t> pivots = rref(g, n);
  if (pivots.size() != n) throw DomainError("singular linear system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = g[i][n];
  return x;
}

Rational distance_sq_to_span(const RationalVector& v, const RationalMatrix& spanning) {
  const std::size_t k = spanning.size();
  RationalMatrix gram(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(spanning[i], v);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(spanning[i], spanning[j]);
  }
  const RationalVector c = k == 0 ? RationalVector{} : solve(gram, rhs);
  RationalVector residual = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) residual[j] -= c[i] * spanning[i][j];
  return dot(residual, residual);
}

PreHilbertReport prehilbert_demo(std::uint64_t n) {
  if (n < 2) throw ParameterError("pre-Hilbert demo needs N >= 2, got " + std::to_string(n));
  PreHilbertReport report;
  report.dimension = n;

  // s_i = e_i - 2 e_{i+1}, i = 1..N-1, as rows over e_1..e_N
  RationalMatrix s(n - 1, RationalVector(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s[i][i] = Rational(1);
    s[i][i + 1] = Rational(-2);
  }

  report.kernel = nullspace(s);
  for (std::uint64_t i = 0; i < n; ++i) report.expected_kernel.push_back(Rational::pow2(static_cast<long>(n - 1 - i)));
  report.kernel_is_powers_of_two = report.kernel.size() == 1 && report.kernel.front() == report.expected_kernel;

  auto phi = [](std::uint64_t k) { return Rational::pow2(-static_cast<long>(k)); };
  report.phi_orthogonal = true;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const Rational rel = phi(k) - Rational(2) * phi(k + 1);
    report.phi_orthogonal = report.phi_orthogonal && rel.is_zero();
    report.phi_relations.push_back(rel);
  }

  RationalVector phi_n;
  for (std::uint64_t k = 1; k <= n; ++k) phi_n.push_back(phi(k));
  report.distance_sq = distance_sq_to_span(phi_n, s);
  return report;
}

}  // namespace hmod

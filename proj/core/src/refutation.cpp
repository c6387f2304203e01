// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/refutation.hpp"

#include <array>
#include <queue>
#include <tuple>

namespace hmod {

namespace {

// Certified lower bound of |b0| over [a, b], or 0 if none is found. Exact
// for piecewise-linear b0.
Rational certified_lower(const FuncLin& b0, const Rational& a, const Rational& b, unsigned pieces, unsigned prec) {
  if (const auto f = b0.as_pwl()) {
    const auto [lo, hi] = f->range(a, b);
    if (lo.sign() > 0) return lo;
    if (hi.sign() < 0) return -hi;
    return Rational(0);
  }
  if (pieces == 0) pieces = 1;
  const Rational step = (b - a) / Rational(pieces);
  Rational d;
  for (unsigned i = 0; i < pieces; ++i) {
    const Rational lo = a + step * Rational(i);
    const Rational hi = i + 1 == pieces ? b : lo + step;
    const Rational piece = eval_interval(b0, Interval(lo, hi), prec).mignitude();
    if (piece.is_zero()) return Rational(0);
    if (i == 0 || piece < d) d = piece;
  }
  return d;
}

std::uint64_t last_row(const DenseSeq& qs, std::uint64_t depth) {
  if (auto len = qs.length()) return std::min(*len, depth);
  return depth;
}

}  // namespace

WitnessWindow find_witness_window(const FuncLin& b0, const DenseSeq& qs, const WindowSearch& search) {
  if (is_zero_exact(b0)) throw NotApplicable("b0 is exactly zero: no witness window exists and none is needed");
  if (search.levels < 1) throw ParameterError("window search needs at least one radius level");

  std::uint64_t first = 1;
  std::uint64_t last = last_row(qs, search.depth);
  if (search.row) {
    first = *search.row;
    last = *search.row;
  }
  for (std::uint64_t n = first; n <= last; ++n) {
    const Rational q = qs(n);
    std::optional<WitnessWindow> best;
    for (int level = search.first_level; level < search.first_level + search.levels; ++level) {
      const Rational eps = Rational::pow2(-level);
      const Rational a = max(Rational(0), q - eps);
      const Rational b = min(Rational(1), q + eps);
      const Rational d = certified_lower(b0, a, b, search.subdivisions, search.precision);
      if (d.sign() > 0 && (!best || best->d < d)) best = WitnessWindow{n, q, eps, d};
    }
    if (best) return *best;
  }
  throw SearchExhausted("no certified witness window in rows " + std::to_string(first) + ".." +
                        std::to_string(last) + " (this does not show that none exists)");
}

Rational NonMembershipWitness::gap_bound(std::uint64_t lower_cutoff, std::uint64_t upper_cutoff) const {
  if (!(lower_cutoff < upper_cutoff))
    throw ParameterError("gap_bound needs M < M'");
  if (upper_cutoff < min_upper_cutoff)
    throw ParameterError("gap_bound needs M' >= " + std::to_string(min_upper_cutoff) +
                         " so that q_n - 1/M' lies inside the window");
  const Rational d2 = window.d * window.d;
  return Rational::pow2(-2 * static_cast<long>(window.n)) * d2 *
         (Rational(1) - Rational(lower_cutoff) / Rational(upper_cutoff));
}

NonMembershipWitness refute_membership(const FuncLin& b0, const DenseSeq& qs, const RefutationOptions& opts) {
  if (is_zero_exact(b0))
    throw NotApplicable("b0 is exactly zero: the constraint solution is 0, which lies in E");

  NonMembershipWitness w;
  w.window = find_witness_window(b0, qs, opts.search);
  const std::uint64_t n = w.window.n;
  const Rational reach = min(w.window.epsilon, w.window.q);
  // 1/M' < reach  <=>  M' > 1/reach
  w.min_upper_cutoff = static_cast<std::uint64_t>(floor(reach.inverse()).get_ui()) + 1;
  w.asymptote = Rational::pow2(-2 * static_cast<long>(n)) * w.window.d * w.window.d / Rational(2);

  const std::uint64_t m0 = w.min_upper_cutoff;
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 5> pairs{
      {{m0, 2 * m0}, {m0, 3 * m0}, {2 * m0, 3 * m0}, {2 * m0, 4 * m0}, {3 * m0, 4 * m0}}};
  const GeneratorElement x = solve_constraints(b0, qs);
  for (std::size_t i = 0; i < std::min(opts.cross_checks, pairs.size()); ++i) {
    const auto [lo, hi] = pairs[i];
    const std::vector<Index> inner = row_indices(n, 1, lo);
    const std::vector<Index> outer = row_indices(n, 1, hi);
    GapCrossCheck check{lo, hi, w.gap_bound(lo, hi), cauchy_gap(x, inner, outer, opts.enclosure)};
    if (check.gap.lo() < check.bound - opts.enclosure.tol)
      throw CertificateViolation("Cauchy gap on row " + std::to_string(n) + " between cutoffs " +
                                 std::to_string(lo) + " and " + std::to_string(hi) + " is " + check.gap.str() +
                                 ", below the certified bound " + check.bound.str());
    w.cross_checks.push_back(std::move(check));
  }
  return w;
}

ComplementReport complement_probe(const FuncLin& b0, std::uint64_t rows, std::uint64_t cols, const DenseSeq& qs,
                                  const ProbeOptions& opts) {
  if (rows < 1 || cols < 1) throw ParameterError("truncation sizes N and M must be >= 1");
  const unsigned prec = opts.enclosure.precision;
  const Rational& tol = opts.enclosure.tol;

  ComplementReport report;
  report.rows = rows;
  report.cols = cols;

  const GeneratorElement generator = solve_constraints(b0, qs);
  std::vector<Index> kept{Index::zero()};
  for (std::uint64_t n = 1; n <= rows; ++n)
    for (std::uint64_t m = 1; m <= cols; ++m) kept.push_back(Index::pair(n, m));
  const ModuleElement x = generator.restrict_to(kept);

  for (std::uint64_t n = 1; n <= rows; ++n) {
    for (std::uint64_t m = 1; m <= cols; ++m) {
      ++report.relations_checked;
      if (!is_zero_exact(inner_product(zeta(n, m, qs), x))) report.nonzero_relations.push_back(Index::pair(n, m));
    }
  }

  // Best-first over excluded (n, m). A priori
  //   ||<zeta_{n,m}, x>|| = 2^-n ||psi_{q_n,m} b0|| <= 2^-n sqrt(min(q_n, 1/m)) ||b0||,
  // decreasing in m along a row and bounded by 2^-n ||b0|| on row n.
  const Rational b0_norm = b0.empty() ? Rational(0) : sup_norm_enclosure(b0, opts.enclosure).hi();
  auto prior = [&](std::uint64_t n, std::uint64_t m) {
    const Rational r = min(qs(n), Rational(1) / Rational(m));
    return Rational::pow2(-static_cast<long>(n)) * sqrt(Interval::point(r), prec).hi() * b0_norm;
  };
  using Candidate = std::tuple<Rational, std::uint64_t, std::uint64_t>;
  auto order = [](const Candidate& a, const Candidate& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::tie(std::get<1>(b), std::get<2>(b)) < std::tie(std::get<1>(a), std::get<2>(a));
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(order)> heap(order);

  const std::optional<std::uint64_t> seq_len = qs.length();
  for (std::uint64_t n = 1; n <= rows && (!seq_len || n <= *seq_len); ++n) heap.emplace(prior(n, cols + 1), n, cols + 1);
  // rows > N are opened lazily; every candidate in rows >= next_row is below 2^-next_row ||b0||
  std::uint64_t next_row = rows + 1;
  auto row_cap = [&]() -> std::optional<Rational> {
    if (seq_len && next_row > *seq_len) return std::nullopt;
    return Rational::pow2(-static_cast<long>(next_row)) * b0_norm;
  };

  Rational lower(0);
  Rational upper_eval(0);
  while (true) {
    Rational frontier(0);
    const std::optional<Rational> cap = row_cap();
    if (!heap.empty()) frontier = std::get<0>(heap.top());
    const bool open_row = cap && frontier < *cap;
    if (cap) frontier = max(frontier, *cap);

    if (frontier <= lower + tol) {
      report.residual = Interval(lower, max(max(upper_eval, frontier), lower));
      break;
    }
    if (report.candidates_evaluated >= opts.candidate_budget)
      throw BudgetExhausted("complement probe candidate budget exhausted",
                            Interval(lower, max(max(upper_eval, frontier), lower)));
    if (open_row) {
      heap.emplace(prior(next_row, 1), next_row, 1);
      ++next_row;
      continue;
    }
    const auto [u, n, m] = heap.top();
    heap.pop();
    const FuncLin relation = inner_product(zeta(n, m, qs), x);
    const Interval enc = sup_norm_enclosure(relation, opts.enclosure);
    ++report.candidates_evaluated;
    if (!report.residual_argmax || lower < enc.lo()) report.residual_argmax = Index::pair(n, m);
    lower = max(lower, enc.lo());
    upper_eval = max(upper_eval, enc.hi());
    heap.emplace(prior(n, m + 1), n, m + 1);
  }

  if (!is_zero_exact(b0)) report.witness = refute_membership(b0, qs, opts.refutation);
  return report;
}

}  // namespace hmod

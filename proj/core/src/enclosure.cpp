// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/enclosure.hpp"

#include <queue>

namespace hmod {

namespace {

Interval eval_atom(const Atom& a, const Interval& dom, unsigned prec) {
  switch (a.kind()) {
    case Atom::Kind::Pwl: {
      auto [lo, hi] = a.function().range(dom.lo(), dom.hi());
      return Interval(lo, hi).rounded(prec);
    }
    case Atom::Kind::SqrtPwl: {
      auto [lo, hi] = a.function().range(dom.lo(), dom.hi());
      return sqrt(Interval(lo, hi), prec, /*clamp=*/true);
    }
    case Atom::Kind::Product: {
      Interval acc = Interval::point(Rational(1));
      for (const Atom& f : a.factors()) acc = mul(acc, eval_atom(f, dom, prec), prec);
      return acc;
    }
  }
  return {};
}

struct Box {
  Interval dom;
  Rational upper;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.upper != b.upper) return a.upper < b.upper;
    return b.dom.lo() < a.dom.lo();  // leftmost first among ties
  }
};

constexpr std::size_t kMaxSeedPoints = 512;

}  // namespace

Interval eval_interval(const FuncLin& x, const Interval& domain, unsigned prec) {
  if (domain.lo().sign() < 0 || domain.hi() > Rational(1))
    throw DomainError("evaluation domain " + domain.str() + " is not inside [0,1]");
  Interval acc = Interval::point(Rational(0));
  for (const auto& [atom, c] : x.terms()) acc = acc + scale(eval_atom(atom, domain, prec), c, prec);
  return acc;
}

Interval sup_norm_enclosure(const FuncLin& x, const EnclosureOptions& opts) {
  if (opts.tol.sign() <= 0) throw ParameterError("sup-norm tolerance must be positive");
  if (opts.budget == 0) throw ParameterError("sup-norm budget must be positive");
  if (auto p = x.as_pwl()) {
    const Rational s = pwl_sup_norm(*p);
    return Interval::point(s);
  }

  const unsigned prec = opts.precision;
  Rational lower(0);
  std::uint64_t evals = 0;
  auto sample = [&](const Rational& t) {
    lower = max(lower, eval_point(x, t, prec).mignitude());
    ++evals;
  };

  const std::vector<Rational> seeds = x.abscissae();
  if (seeds.size() <= kMaxSeedPoints) {
    for (const Rational& t : seeds) sample(t);
  } else {
    sample(Rational(0));
    sample(Rational(1));
  }

  std::priority_queue<Box, std::vector<Box>, BoxOrder> heap;
  {
    const Interval root = Interval::unit();
    heap.push({root, eval_interval(x, root, prec).magnitude()});
    ++evals;
  }

  while (true) {
    while (!heap.empty() && heap.top().upper <= lower) heap.pop();
    if (heap.empty()) return Interval::point(lower);
    const Rational upper = heap.top().upper;
    if (upper - lower <= opts.tol) return Interval(lower, upper);
    if (evals >= opts.budget)
      throw BudgetExhausted("sup-norm budget of " + std::to_string(opts.budget) + " evaluations exhausted",
                            Interval(lower, upper));

    const Interval dom = heap.top().dom;
    heap.pop();
    const Rational mid = dom.midpoint();
    sample(mid);
    for (const Interval& child : {Interval(dom.lo(), mid), Interval(mid, dom.hi())}) {
      const Rational u = eval_interval(x, child, prec).magnitude();
      ++evals;
      if (lower < u) heap.push({child, u});
    }
  }
}

ZeroVerdict decide_zero(const FuncLin& x, unsigned prec) {
  if (x.empty()) return {};

  const std::vector<Rational> ts = x.abscissae();
  std::vector<Rational> candidates;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) candidates.push_back((ts[i] + ts[i + 1]) / Rational(2));
  candidates.insert(candidates.end(), ts.begin(), ts.end());

  for (const Rational& t : candidates) {
    const Interval v = eval_point(x, t, prec);
    if (v.mignitude().sign() > 0) {
      ZeroVerdict out;
      out.status = ZeroVerdict::Status::NonZero;
      out.separating_point = t;
      out.enclosure = v;
      return out;
    }
  }

  ZeroVerdict out;
  out.status = ZeroVerdict::Status::Undecided;
  try {
    out.enclosure = sup_norm_enclosure(x, {.tol = Rational::pow2(-40), .budget = 20'000, .precision = prec});
  } catch (const BudgetExhausted& e) {
    out.enclosure = e.best();
  }
  if (out.enclosure->lo().sign() > 0) out.status = ZeroVerdict::Status::NonZero;
  return out;
}

}  // namespace hmod

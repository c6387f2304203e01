// SPDX-License-Identifier: Apache-2.0
// One line per acceptance criterion; exit status is nonzero if any fails.
#include "hmodlab/hmodlab.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hmod;
using hmod::testing::Gen;
using hmod::testing::Real;
using hmod::testing::to_real;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double seconds;  // wall-clock limit
  std::function<Outcome()> run;
};

const Rational kGridQ[] = {R(1), R(1, 2), R(1, 4), R(3, 4), R(1, 8), R(3, 8), R(5, 8), R(7, 8)};
const DenseSeq kQs = DenseSeq::dyadic();

FuncLin row_sum(const Rational& q, long m_max) {
  FuncLin acc;
  for (long m = 1; m <= m_max; ++m) {
    const FuncLin p = psi(q, m);
    acc += lin_mul(p, p);
  }
  return acc;
}

Outcome telescoping() {
  Outcome out;
  for (const Rational& q : kGridQ) {
    FuncLin acc;
    for (long m = 1; m <= 64; ++m) {
      const FuncLin p = psi(q, m);
      acc += lin_mul(p, p);
      const auto as = acc.as_pwl();
      if (!as || *as != make_f(q, m)) out.fail("q=" + q.str() + " M=" + std::to_string(m));
    }
  }
  out.detail = out.ok ? "8 q values x 64 cutoffs, exact" : out.detail;
  return out;
}

Outcome bounds() {
  Outcome out;
  for (const Rational& q : kGridQ) {
    for (long m = 1; m <= 64; ++m) {
      const Interval s = sup_norm_enclosure(row_sum(q, m));
      if (s != Interval::point(min(R(1), q * Rational(m)))) out.fail("row norm q=" + q.str() + " M=" + std::to_string(m));
    }
  }
  const EnclosureOptions opts{.tol = Rational::pow2(-30)};
  const CoeffFamily phi = make_phi(kQs);
  Rational worst;
  const std::pair<std::uint64_t, std::uint64_t> shapes[] = {{1, 1}, {2, 4}, {4, 16}, {8, 32}, {12, 64}};
  for (const auto& [rows, cols] : shapes) {
    for (bool with_zero : {false, true}) {
      std::vector<Index> subset;
      if (with_zero) subset.push_back(Index::zero());
      for (std::uint64_t n = 1; n <= rows; ++n)
        for (const Index& a : row_indices(n, 1, cols)) subset.push_back(a);
      try {
        const Interval e = verify_map_bound(phi, subset, opts);
        worst = max(worst, e.hi());
        if (e.hi() > R(4, 3)) out.fail("subset above 4/3");
      } catch (const CertificateViolation& e) {
        out.fail(e.what());
      }
    }
  }
  if (out.ok) out.detail = "row norms exact; max Phi partial-sum norm <= " + to_decimal(worst, 8, true);
  return out;
}

Outcome kernel() {
  Outcome out;
  std::size_t n_ok = 0;
  for (std::uint64_t k = 1; k <= 20; ++k) {
    for (std::uint64_t l = 1; l <= 20; ++l) {
      try {
        verify_kernel(k, l, kQs);
        ++n_ok;
      } catch (const ResidualError& e) {
        out.fail(e.what());
      }
    }
  }
  if (out.ok) out.detail = std::to_string(n_ok) + " exact zeros";
  return out;
}

Outcome orthogonality() {
  Outcome out;
  const FuncLin b0s[] = {FuncLin::constant(R(1)), FuncLin::from_pwl(PwlFunc::identity()),
                         FuncLin::from_pwl(make_hat(R(1, 3)))};
  const char* names[] = {"1", "t", "hat(1/3)"};
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const GeneratorElement x = solve_constraints(b0s[i], kQs);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      for (std::uint64_t m = 1; m <= 10; ++m) {
        const std::vector<Index> window{Index::zero(), Index::pair(n, m)};
        if (!is_zero_exact(inner_product(zeta(n, m, kQs), x.restrict_to(window))))
          out.fail(std::string("b0=") + names[i] + " at " + Index::pair(n, m).str());
        ++checked;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " relations exactly zero";
  return out;
}

Outcome non_membership() {
  Outcome out;
  const FuncLin b0 = FuncLin::constant(R(1));
  const GeneratorElement x = solve_constraints(b0, kQs);
  RefutationOptions opts;
  opts.search.row = 2;
  const Rational tol = opts.enclosure.tol;
  const NonMembershipWitness w = refute_membership(b0, kQs, opts);
  for (std::uint64_t m : {4u, 8u, 16u, 32u}) {
    const Interval gap = cauchy_gap(x, row_indices(2, 1, m), row_indices(2, 1, 2 * m));
    if (gap != Interval::point(R(1, 32))) out.fail("gap at M=" + std::to_string(m) + " is " + gap.str());
    if ((w.gap_bound(m, 2 * m) - R(1, 32)).abs() > tol) out.fail("gap_bound at M=" + std::to_string(m));
  }
  if (out.ok) out.detail = "gap 1/32 exact for M=4,8,16,32; window eps=" + w.window.epsilon.str() + " d=" + w.window.d.str();
  return out;
}

Outcome complement() {
  Outcome out;
  ProbeOptions opts;
  opts.enclosure.tol = Rational::pow2(-20);
  const ComplementReport r = complement_probe(FuncLin::constant(R(1)), 2, 3, kQs, opts);
  if (!r.nonzero_relations.empty()) out.fail("included relation nonzero at " + r.nonzero_relations.front().str());
  if (!r.residual.contains(R(1, 4)) || r.residual.width() > opts.enclosure.tol) out.fail("residual " + r.residual.str());
  if (out.ok) out.detail = std::to_string(r.relations_checked) + " relations zero; residual " + r.residual.str();
  return out;
}

Outcome prehilbert() {
  Outcome out;
  const PreHilbertReport small = prehilbert_demo(3);
  if (small.kernel.size() != 1 || small.kernel.front() != RationalVector{R(4), R(2), R(1)}) out.fail("N=3 kernel");
  const PreHilbertReport big = prehilbert_demo(50);
  if (!big.phi_orthogonal) out.fail("phi relation nonzero");
  const PreHilbertReport forty = prehilbert_demo(40);
  if ((forty.distance_sq - R(1, 3)).abs() > Rational(1, 1'000'000)) out.fail("distance^2 at N=40");
  if (out.ok) out.detail = "kernel span{(4,2,1)}; distance^2(N=40) = " + to_decimal(forty.distance_sq, 12, false);
  return out;
}

Outcome soundness() {
  Outcome out;
  Gen gen(20261017);
  for (int trial = 0; trial < 1000; ++trial) {
    const testing::Expr e = testing::random_expr(gen);
    Rational a = gen.unit_point(), b = gen.unit_point();
    if (b < a) std::swap(a, b);
    const Rational t = a + (b - a) * gen.rational(R(0), R(1), 16);
    if (!testing::encloses(eval_interval(e.value, Interval(a, b)), e.oracle(to_real(t))))
      out.fail("containment trial " + std::to_string(trial));
  }
  // PWL-reducible: exact path via sqrt(g)^2, and a hidden zero sqrt(4g) - 2 sqrt(g)
  // that forces branch and bound. Near a zero of g the cancellation costs
  // about sqrt(box width), hence the coarser tolerance there.
  const EnclosureOptions opts{.tol = Rational::pow2(-30)};
  const EnclosureOptions hidden_opts{.tol = Rational::pow2(-12)};
  int brackets = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const PwlFunc f = gen.pwl(4);
    const PwlFunc g = gen.nonnegative_pwl(3);
    const Rational exact = pwl_sup_norm(pwl_lincomb(std::vector<PwlTerm>{{R(1), f}, {R(1), g}}));
    const FuncLin r = FuncLin::sqrt_of(g);
    const FuncLin reduced = FuncLin::from_pwl(f) + lin_mul(r, r);
    if (!sup_norm_enclosure(reduced, opts).contains(exact)) out.fail("exact-path bracket trial " + std::to_string(trial));
    const FuncLin hidden = FuncLin::from_pwl(f) + FuncLin::sqrt_of(g.scaled(R(4))) - R(2) * r;
    const Rational exact_f = pwl_sup_norm(f);
    const Interval s = sup_norm_enclosure(hidden, hidden_opts);
    if (!s.contains(exact_f) || s.width() > hidden_opts.tol) out.fail("B&B bracket trial " + std::to_string(trial));
    brackets += 2;
  }
  if (out.ok) out.detail = "1000 containments, " + std::to_string(brackets) + " sup-norm brackets";
  return out;
}

Outcome density() {
  Outcome out;
  for (long k = 0; k <= 100; ++k) {
    const Rational r(k, 100);
    bool hit = false;
    for (std::uint64_t n = 1; n <= 256 && !hit; ++n) hit = (kQs(n) - r).abs() <= R(1, 128);
    if (!hit) out.fail("no q_n near " + r.str());
  }
  if (out.ok) out.detail = "k/100, k=0..100, all within 1/128 by n<=256";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "telescoping identity", 5, telescoping},
      {2, "bound certificates", 10, bounds},
      {3, "kernel verification", 5, kernel},
      {4, "orthogonality equation", 10, orthogonality},
      {5, "non-membership certificate", 10, non_membership},
      {6, "complement probe", 10, complement},
      {7, "pre-Hilbert warm-up", 5, prehilbert},
      {8, "enclosure soundness", 30, soundness},
      {9, "density of q_n", 1, density},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.seconds) o.fail("time limit exceeded");
    if (!o.ok) ++failures;
    std::printf("%s [%d] %s (%.2fs / %.0fs) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.seconds,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/suites.hpp"

#include "hmodlab/construction.hpp"
#include "hmodlab/prehilbert.hpp"

#include <algorithm>

namespace hmod::cli {

namespace {

const std::vector<Rational>& q_grid() {
  static const std::vector<Rational> grid{Rational(1),    Rational(1, 2), Rational(1, 4), Rational(3, 4),
                                          Rational(1, 8), Rational(3, 8), Rational(5, 8), Rational(7, 8)};
  return grid;
}

const std::vector<std::string>& b0_names() {
  static const std::vector<std::string> names{"1", "t", "hat(1/3)"};
  return names;
}

std::uint64_t usable_rows(const DenseSeq& qs, std::uint64_t wanted) {
  const auto len = qs.length();
  return len ? std::min(wanted, *len) : wanted;
}

SuiteReport start(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  return SuiteReport{name, cfg.to_json(), {}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identity", "kernel", "bound", "complement", "prehilbert"};
  return names;
}

FuncLin parse_b0(const std::string& s) {
  if (s == "t") return FuncLin::from_pwl(PwlFunc::identity());
  if (s.starts_with("hat(") && s.ends_with(")")) {
    const Rational c = Rational::parse(s.substr(4, s.size() - 5));
    if (c.sign() < 0 || c > Rational(1)) throw ParameterError("hat centre must lie in [0,1]: " + s);
    return FuncLin::from_pwl(make_hat(c));
  }
  return FuncLin::constant(Rational::parse(s));
}

SuiteReport run_identity(const RunConfig& cfg) {
  SuiteReport r = start("identity", cfg);
  for (const Rational& q : q_grid()) {
    FuncLin acc;
    for (long m = 1; m <= 64; ++m) {
      const FuncLin p = psi(q, m);
      acc += lin_mul(p, p);
      const auto as = acc.as_pwl();
      const bool ok = as && *as == make_f(q, m);
      r.checks.push_back({"telescoping", Json{{"q", q.str()}, {"M", m}}, ok ? "exact-equal" : "mismatch", {}, {}, ok});
    }
  }
  return r;
}

SuiteReport run_kernel(const RunConfig& cfg) {
  SuiteReport r = start("kernel", cfg);
  const DenseSeq qs = cfg.sequence();
  const std::uint64_t rows = usable_rows(qs, 20);
  for (std::uint64_t k = 1; k <= rows; ++k) {
    for (std::uint64_t l = 1; l <= 20; ++l) {
      Check c{"kernel", Json{{"k", k}, {"l", l}}, "exact-zero", {}, {}, true};
      try {
        verify_kernel(k, l, qs);
      } catch (const ResidualError& e) {
        c.verdict = "nonzero-residual";
        c.witness = Json{{"residual", to_json(e.residual())}};
        c.passed = false;
      }
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

SuiteReport run_bound(const RunConfig& cfg) {
  SuiteReport r = start("bound", cfg);
  const EnclosureOptions opts = cfg.enclosure();

  for (const Rational& q : q_grid()) {
    FuncLin acc;
    for (long m = 1; m <= 64; ++m) {
      const FuncLin p = psi(q, m);
      acc += lin_mul(p, p);
      if ((m & (m - 1)) != 0) continue;  // report M = 1, 2, 4, ..., 64
      const Rational expected = min(Rational(1), q * Rational(m));
      const Interval s = sup_norm_enclosure(acc, opts);
      const bool ok = s == Interval::point(expected);
      r.checks.push_back({"row-norm", Json{{"q", q.str()}, {"M", m}, {"expected", expected.str()}},
                          ok ? "exact" : "mismatch", s, {}, ok});
    }
  }

  auto certify = [&](const char* name, const CoeffFamily& phi, const std::vector<Index>& subset, Json params) {
    params["bound"] = phi.bound.str();
    params["size"] = subset.size();
    Check c{name, std::move(params), "within-bound", {}, {}, true};
    try {
      c.interval = verify_map_bound(phi, subset, opts);
    } catch (const CertificateViolation& e) {
      c.verdict = "violation";
      c.witness = Json{{"message", e.what()}};
      c.passed = false;
    }
    r.checks.push_back(std::move(c));
  };

  for (const Rational& q : q_grid()) {
    std::vector<Index> subset;
    for (std::uint64_t m = 1; m <= cfg.cols; ++m) subset.push_back(Index::nat(m));
    certify("psi-map-bound", make_psi_map(q), subset, Json{{"q", q.str()}, {"M", cfg.cols}});
  }

  const DenseSeq qs = cfg.sequence();
  const CoeffFamily phi = make_phi(qs);
  std::vector<Index> subset{Index::zero()};
  for (std::uint64_t n = 1; n <= usable_rows(qs, cfg.rows); ++n) {
    for (const Index& a : row_indices(n, 1, cfg.cols)) subset.push_back(a);
    certify("phi-bound", phi, subset, Json{{"rows", n}, {"cols", cfg.cols}});
  }
  return r;
}

Json witness_to_json(const NonMembershipWitness& w) {
  Json checks = Json::array();
  for (const GapCrossCheck& c : w.cross_checks)
    checks.push_back(Json{{"M", c.lower_cutoff},
                          {"M_prime", c.upper_cutoff},
                          {"bound", c.bound.str()},
                          {"gap", interval_to_json(c.gap)}});
  return Json{{"n", w.window.n},
              {"q", w.window.q.str()},
              {"epsilon", w.window.epsilon.str()},
              {"d", w.window.d.str()},
              {"min_upper_cutoff", w.min_upper_cutoff},
              {"asymptote", w.asymptote.str()},
              {"cross_checks", std::move(checks)}};
}

SuiteReport run_complement(const RunConfig& cfg) {
  SuiteReport r = start("complement", cfg);
  const DenseSeq qs = cfg.sequence();
  ProbeOptions opts;
  opts.enclosure = cfg.enclosure();
  opts.refutation.enclosure = cfg.enclosure();
  opts.refutation.search.depth = cfg.depth;
  const std::uint64_t rows = usable_rows(qs, cfg.rows);

  for (const std::string& name : b0_names()) {
    const ComplementReport p = complement_probe(parse_b0(name), rows, cfg.cols, qs, opts);
    const Json base{{"b0", name}, {"N", rows}, {"M", cfg.cols}};

    Check orth{"orthogonality", base, "exact-zero", {}, {}, p.nonzero_relations.empty()};
    orth.parameters["relations"] = p.relations_checked;
    if (!orth.passed) {
      orth.verdict = "nonzero-relation";
      Json bad = Json::array();
      for (const Index& a : p.nonzero_relations) bad.push_back(a.str());
      orth.witness = Json{{"indices", std::move(bad)}};
    }
    r.checks.push_back(std::move(orth));

    Check res{"residual", base, "enclosed", p.residual, {}, p.residual.width() <= cfg.tol};
    res.parameters["candidates"] = p.candidates_evaluated;
    if (p.residual_argmax) res.parameters["argmax"] = p.residual_argmax->str();
    if (!res.passed) res.verdict = "too-wide";
    r.checks.push_back(std::move(res));

    if (p.witness) r.checks.push_back({"non-membership", base, "not-in-E", {}, witness_to_json(*p.witness), true});
  }
  return r;
}

SuiteReport run_prehilbert(const RunConfig& cfg) {
  SuiteReport r = start("prehilbert", cfg);
  for (std::uint64_t n : {3u, 10u, 40u}) {
    const PreHilbertReport p = prehilbert_demo(n);
    r.checks.push_back({"kernel", Json{{"N", n}}, p.kernel_is_powers_of_two ? "powers-of-two" : "unexpected", {}, {},
                        p.kernel_is_powers_of_two});
    r.checks.push_back({"phi-orthogonal", Json{{"N", n}}, p.phi_orthogonal ? "exact-zero" : "nonzero", {}, {},
                        p.phi_orthogonal});
    const Rational expected = (Rational(1) - Rational::pow2(-2 * static_cast<long>(n))) * Rational(1, 3);
    const bool ok = p.distance_sq == expected;
    r.checks.push_back({"distance-squared", Json{{"N", n}, {"limit", p.phi_norm_sq_limit.str()}},
                        ok ? "exact" : "mismatch", Interval::point(p.distance_sq), {}, ok});
  }
  return r;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "identity") return run_identity(cfg);
  if (name == "kernel") return run_kernel(cfg);
  if (name == "bound") return run_bound(cfg);
  if (name == "complement") return run_complement(cfg);
  if (name == "prehilbert") return run_prehilbert(cfg);
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace hmod::cli

// SPDX-License-Identifier: Apache-2.0
// hmodlab <suite> [options] | hmodlab curves <object> --params ... --samples K --out FILE
#include "hmodlab/config.hpp"
#include "hmodlab/curves.hpp"
#include "hmodlab/report.hpp"
#include "hmodlab/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace hmod;
using namespace hmod::cli;

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct SuiteFlags {
  std::optional<std::string> tol, budget, depth, trunc, qseq, out, config;
};

void add_suite_flags(CLI::App* sub, SuiteFlags& f) {
  sub->add_option("--tol", f.tol, "enclosure tolerance, a rational such as 1/1073741824");
  sub->add_option("--budget", f.budget, "branch-and-bound evaluation budget");
  sub->add_option("--depth", f.depth, "rows searched for a witness window");
  sub->add_option("--trunc", f.trunc, "truncation N,M for the complement and bound suites");
  sub->add_option("--qseq", f.qseq, "file with one q_n per line (default: builtin dyadic enumeration)");
  sub->add_option("--out", f.out, "output directory (default hmodlab-out, or $HMODLAB_OUT)");
  sub->add_option("--config", f.config, "key=value configuration file");
}

RunConfig resolve(const SuiteFlags& f) {
  RunConfig cfg;
  if (f.config) apply_config_file(cfg, *f.config);
  if (const char* env = std::getenv("HMODLAB_OUT"); env && *env) cfg.out = env;
  if (f.tol) apply_setting(cfg, "tol", *f.tol);
  if (f.budget) apply_setting(cfg, "budget", *f.budget);
  if (f.depth) apply_setting(cfg, "depth", *f.depth);
  if (f.trunc) apply_setting(cfg, "trunc", *f.trunc);
  if (f.qseq) apply_setting(cfg, "qseq", *f.qseq);
  if (f.out) apply_setting(cfg, "out", *f.out);
  cfg.validate();
  return cfg;
}

int run_suites(const std::vector<std::string>& names, const SuiteFlags& flags) {
  const RunConfig cfg = resolve(flags);
  const std::string stamp = utc_timestamp();
  bool all_passed = true;
  for (const std::string& name : names) {
    const SuiteReport r = run_suite(name, cfg);
    const auto path = write_report(cfg.out, r, stamp);
    const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.passed; });
    std::cout << name << ": " << r.checks.size() - failed << "/" << r.checks.size() << " checks passed -> "
              << path.string() << '\n';
    all_passed = all_passed && failed == 0;
  }
  return all_passed ? kExitPass : kExitFailed;
}

int run_curves(const std::string& object, const std::string& params, std::uint64_t samples,
               const std::optional<std::string>& qseq, const std::string& out) {
  RunConfig cfg;
  if (qseq) cfg.qseq = *qseq;
  const auto points = sample_curve(object, parse_params(params), samples, cfg.sequence());
  if (out == "-") {
    write_csv(std::cout, points);
    return kExitPass;
  }
  std::ofstream file(out);
  if (!file) throw OutputError("cannot write " + out);
  write_csv(file, points);
  if (!file) throw OutputError("write failed for " + out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and interval verification of a Hilbert C*-module counterexample"};
  app.require_subcommand(1);

  SuiteFlags flags;
  std::vector<std::string> chosen;
  for (const std::string& name : suite_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    add_suite_flags(sub, flags);
    sub->callback([&chosen, name] { chosen = {name}; });
  }
  CLI::App* all = app.add_subcommand("all", "run every suite");
  add_suite_flags(all, flags);
  all->callback([&chosen] { chosen = suite_names(); });

  std::string object, params, out = "-";
  std::uint64_t samples = 101;
  std::optional<std::string> curve_qseq;
  bool curves = false;
  CLI::App* cur = app.add_subcommand("curves", "write CSV samples of f, row-sum or gap");
  cur->add_option("object", object, "f | row-sum | gap")->required();
  cur->add_option("--params", params, "comma-separated key=value pairs, e.g. q=1/2,M=8");
  cur->add_option("--samples", samples, "number of uniform samples in [0,1]");
  cur->add_option("--qseq", curve_qseq, "q-sequence file");
  cur->add_option("--out", out, "CSV file, or - for stdout");
  cur->callback([&curves] { curves = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (curves) return run_curves(object, params, samples, curve_qseq, out);
    return run_suites(chosen, flags);
  } catch (const BudgetExhausted& e) {
    std::cerr << "hmodlab: resource limit: " << e.what() << '\n';
  } catch (const SearchExhausted& e) {
    std::cerr << "hmodlab: resource limit: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "hmodlab: " << e.what() << '\n';
  }
  return kExitError;
}

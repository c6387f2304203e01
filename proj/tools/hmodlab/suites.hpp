// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/config.hpp"
#include "hmodlab/refutation.hpp"
#include "hmodlab/report.hpp"

#include <string>
#include <vector>

namespace hmod::cli {

/// identity, kernel, bound, complement, prehilbert (the order "all" uses).
const std::vector<std::string>& suite_names();

/// ParameterError for an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

SuiteReport run_identity(const RunConfig& cfg);
SuiteReport run_kernel(const RunConfig& cfg);
SuiteReport run_bound(const RunConfig& cfg);
SuiteReport run_complement(const RunConfig& cfg);
SuiteReport run_prehilbert(const RunConfig& cfg);

Json witness_to_json(const NonMembershipWitness& w);

/// "t", "hat(c)" for |t - c|, or a rational constant.
FuncLin parse_b0(const std::string& s);

}  // namespace hmod::cli

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/errors.hpp"
#include "hmodlab/interval.hpp"
#include "hmodlab/serialize.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hmod::cli {

class OutputError : public Error {
 public:
  using Error::Error;
};

struct Check {
  std::string check;
  Json parameters = Json::object();
  std::string verdict;
  std::optional<Interval> interval;
  std::optional<Json> witness;
  bool passed = true;
};

struct SuiteReport {
  std::string suite;
  Json config = Json::object();
  std::vector<Check> checks;

  bool passed() const;
};

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

Json to_json(const Check& c);
Json to_json(const SuiteReport& r, const std::string& timestamp);

/// Writes <dir>/<suite>/report.json; OutputError when it cannot.
std::filesystem::path write_report(const std::filesystem::path& dir, const SuiteReport& r,
                                   const std::string& timestamp = utc_timestamp());

}  // namespace hmod::cli

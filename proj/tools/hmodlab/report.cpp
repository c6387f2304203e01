// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>

namespace hmod::cli {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const Check& c) {
  Json j{{"check", c.check}, {"parameters", c.parameters}, {"verdict", c.verdict}};
  if (c.interval) j["interval"] = interval_to_json(*c.interval);
  if (c.witness) j["witness"] = *c.witness;
  j["passed"] = c.passed;
  return j;
}

Json to_json(const SuiteReport& r, const std::string& timestamp) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  return Json{{"suite", r.suite}, {"timestamp", timestamp}, {"config", r.config}, {"checks", std::move(checks)}};
}

std::filesystem::path write_report(const std::filesystem::path& dir, const SuiteReport& r,
                                   const std::string& timestamp) {
  const std::filesystem::path sub = dir / r.suite;
  std::error_code ec;
  std::filesystem::create_directories(sub, ec);
  if (ec) throw OutputError("cannot create " + sub.string() + ": " + ec.message());
  const std::filesystem::path file = sub / "report.json";
  std::ofstream out(file);
  if (!out) throw OutputError("cannot write " + file.string());
  out << to_json(r, timestamp).dump(2) << '\n';
  if (!out) throw OutputError("write failed for " + file.string());
  return file;
}

}  // namespace hmod::cli

// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/config.hpp"

#include "hmodlab/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hmod::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::uint64_t parse_count(const std::string& key, const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(key + ": expected a nonnegative integer, got '" + s + "'");
  return v;
}

std::pair<std::uint64_t, std::uint64_t> parse_trunc(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("trunc: expected N,M, got '" + s + "'");
  return {parse_count("trunc", trim(s.substr(0, comma))), parse_count("trunc", trim(s.substr(comma + 1)))};
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "tol") {
    cfg.tol = Rational::parse(value);
  } else if (key == "budget") {
    cfg.budget = parse_count(key, value);
  } else if (key == "depth") {
    cfg.depth = parse_count(key, value);
  } else if (key == "trunc") {
    std::tie(cfg.rows, cfg.cols) = parse_trunc(value);
  } else if (key == "qseq") {
    if (value == "builtin" || value.empty())
      cfg.qseq.reset();
    else
      cfg.qseq = value;
  } else if (key == "out") {
    cfg.out = value;
  } else {
    throw ParseError("unknown configuration key '" + key + "'");
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

void RunConfig::validate() const {
  if (tol.sign() <= 0) throw ParameterError("tol must be positive, got " + tol.str());
  if (budget == 0) throw ParameterError("budget must be at least 1");
  if (depth == 0) throw ParameterError("depth must be at least 1");
  if (rows == 0 || cols == 0) throw ParameterError("trunc N,M must both be at least 1");
}

DenseSeq RunConfig::sequence() const {
  if (!qseq) return DenseSeq::dyadic();
  std::ifstream in(*qseq);
  if (!in) throw ParameterError("cannot read q-sequence file " + qseq->string());
  return DenseSeq::parse(in);
}

Json RunConfig::to_json() const {
  return Json{{"tol", tol.str()},
              {"budget", budget},
              {"depth", depth},
              {"trunc", {rows, cols}},
              {"qseq", qseq ? qseq->string() : "builtin-dyadic"},
              {"out", out.string()}};
}

}  // namespace hmod::cli

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/dense_seq.hpp"
#include "hmodlab/enclosure.hpp"
#include "hmodlab/serialize.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace hmod::cli {

struct RunConfig {
  Rational tol = Rational::pow2(-30);
  std::uint64_t budget = 1'000'000;
  std::uint64_t depth = 64;
  std::uint64_t rows = 8;   // N
  std::uint64_t cols = 64;  // M
  std::optional<std::filesystem::path> qseq;  // builtin dyadic when empty
  std::filesystem::path out = "hmodlab-out";

  /// ParameterError on tol <= 0 or a zero count.
  void validate() const;
  EnclosureOptions enclosure() const { return {.tol = tol, .budget = budget}; }
  /// Loads the sequence file if one is configured.
  DenseSeq sequence() const;
  Json to_json() const;
};

/// key=value lines; '#' starts a comment. Keys: tol, budget, depth, trunc,
/// qseq, out. ParseError on unknown keys or malformed values.
void apply_config_text(RunConfig& cfg, const std::string& text);
/// ParameterError if the file cannot be read.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// Single setting, as accepted in config files and on the command line.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// "N,M"
std::pair<std::uint64_t, std::uint64_t> parse_trunc(const std::string& s);
std::uint64_t parse_count(const std::string& key, const std::string& s);

}  // namespace hmod::cli

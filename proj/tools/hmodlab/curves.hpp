// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/dense_seq.hpp"
#include "hmodlab/rational.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace hmod::cli {

using Params = std::map<std::string, std::string>;

/// "k=v,k=v"; ParseError on a malformed pair.
Params parse_params(const std::string& s);

struct CurvePoint {
  Rational t;
  Rational value;  // exact, or the midpoint of a tight enclosure
};

/// Samples `object` at t = i/(samples-1).
///   f:       q, M                      f_{q,M}
///   row-sum: b0 (default 1), n, M      sum_{m<=M} |b_{n,m}|^2; M=inf gives the limit
///   gap:     b0 (default 1), n, M, M2  sum_{M<m<=M2} |b_{n,m}|^2, M2 defaulting to 2M
/// ParameterError for an unknown object, samples < 2 or missing keys;
/// ParseError for unknown keys.
std::vector<CurvePoint> sample_curve(const std::string& object, const Params& params, std::uint64_t samples,
                                     const DenseSeq& qs);

/// Header "t,value", then one row per point as decimals.
void write_csv(std::ostream& out, const std::vector<CurvePoint>& points);

/// Shortest decimal of at most `digits` fractional digits (rounded toward zero).
std::string short_decimal(const Rational& x, unsigned digits = 15);

}  // namespace hmod::cli

// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/curves.hpp"

#include "hmodlab/config.hpp"
#include "hmodlab/construction.hpp"
#include "hmodlab/suites.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace hmod::cli {

namespace {

const std::string& require(const Params& p, const std::string& key, const std::string& object) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParameterError(object + " needs parameter '" + key + "'");
  return it->second;
}

void only_keys(const Params& p, const std::set<std::string>& allowed, const std::string& object) {
  for (const auto& [k, v] : p)
    if (!allowed.contains(k)) throw ParseError("unknown parameter '" + k + "' for " + object);
}

Rational midpoint_value(const FuncLin& x, const Rational& t) { return eval_point(x, t).midpoint(); }

// sum_{lo < m <= hi} |b_{n,m}|^2 for b = solve_constraints(b0)
FuncLin row_block(const GeneratorElement& x, std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  FuncLin acc;
  for (std::uint64_t m = lo + 1; m <= hi; ++m) {
    const FuncLin b = x.at(Index::pair(n, m));
    acc += lin_mul(b, b);
  }
  return acc;
}

}  // namespace

Params parse_params(const std::string& s) {
  Params p;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value in --params, got '" + item + "'");
    p[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

std::vector<CurvePoint> sample_curve(const std::string& object, const Params& params, std::uint64_t samples,
                                     const DenseSeq& qs) {
  if (samples < 2) throw ParameterError("samples must be at least 2");
  std::function<Rational(const Rational&)> value;

  if (object == "f") {
    only_keys(params, {"q", "M"}, object);
    const PwlFunc f = make_f(Rational::parse(require(params, "q", object)),
                             static_cast<long>(parse_count("M", require(params, "M", object))));
    value = [f](const Rational& t) { return f(t); };
  } else if (object == "row-sum" || object == "gap") {
    const bool gap = object == "gap";
    only_keys(params, gap ? std::set<std::string>{"b0", "n", "M", "M2"} : std::set<std::string>{"b0", "n", "M"}, object);
    const FuncLin b0 = parse_b0(params.contains("b0") ? params.at("b0") : "1");
    const std::uint64_t n = parse_count("n", require(params, "n", object));
    if (n == 0) throw ParameterError("n must be at least 1");
    const std::string& m_text = require(params, "M", object);
    if (!gap && m_text == "inf") {
      // limit of 4^-n |b0|^2 f_{q_n,M}: the same weight times the indicator of [0, q_n)
      const FuncLin weight = Rational::pow2(-2 * static_cast<long>(n)) * lin_mul(b0, b0);
      const Rational qn = qs(n);
      value = [weight, qn](const Rational& t) { return t < qn ? midpoint_value(weight, t) : Rational(0); };
    } else {
      const std::uint64_t m = parse_count("M", m_text);
      const std::uint64_t m2 = gap ? (params.contains("M2") ? parse_count("M2", params.at("M2")) : 2 * m) : m;
      if (gap && m2 <= m) throw ParameterError("gap needs M < M2");
      const GeneratorElement x = solve_constraints(b0, qs);
      const FuncLin sum = gap ? row_block(x, n, m, m2) : row_block(x, n, 0, m);
      value = [sum](const Rational& t) { return midpoint_value(sum, t); };
    }
  } else {
    throw ParameterError("unknown curve object '" + object + "' (expected f, row-sum or gap)");
  }

  std::vector<CurvePoint> out;
  out.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Rational t(static_cast<long>(i), static_cast<long>(samples - 1));
    out.push_back({t, value(t)});
  }
  return out;
}

std::string short_decimal(const Rational& x, unsigned digits) {
  std::string s = to_decimal(x, digits, x.sign() < 0);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s == "-0" ? "0" : s;
}

void write_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
  out << "t,value\n";
  for (const CurvePoint& p : points) out << short_decimal(p.t) << ',' << short_decimal(p.value) << '\n';
}

}  // namespace hmod::cli

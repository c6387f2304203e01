// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/module.hpp"

#include <algorithm>
#include <charconv>

namespace hmod {

Index Index::nat(std::uint64_t m) {
  if (m == 0) throw ParameterError("Nat index must be >= 1");
  return Index(Kind::Nat, 0, m);
}

Index Index::pair(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw ParameterError("Pair index components must be >= 1");
  return Index(Kind::Pair, n, m);
}

std::string Index::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Nat: return std::to_string(m_);
    case Kind::Pair: return std::to_string(n_) + ":" + std::to_string(m_);
  }
  return {};
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed index: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Index Index::parse(std::string_view text) {
  if (text == "0") return zero();
  try {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) return nat(parse_u64(text, text));
    return pair(parse_u64(text.substr(0, colon), text), parse_u64(text.substr(colon + 1), text));
  } catch (const ParameterError&) {
    throw ParseError("malformed index: '" + std::string(text) + "'");
  }
}

void ModuleElement::set(const Index& s, FuncLin value) {
  if (value.empty())
    entries_.erase(s);
  else
    entries_.insert_or_assign(s, std::move(value));
}

FuncLin ModuleElement::at(const Index& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? FuncLin() : it->second;
}

std::vector<Index> ModuleElement::support() const {
  std::vector<Index> out;
  out.reserve(entries_.size());
  for (const auto& [s, v] : entries_) out.push_back(s);
  return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [s, v] : o.entries_) set(s, at(s) + v);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [s, v] : o.entries_) set(s, at(s) - v);
  return *this;
}

bool Support::contains(const Index& s) const {
  if (extra.contains(s)) return true;
  switch (kind) {
    case Kind::Finite: return false;
    case Kind::FullRow: return s.kind() == Index::Kind::Pair && s.row() == row;
    case Kind::AllPairs: return s.kind() == Index::Kind::Pair;
  }
  return false;
}

ModuleElement GeneratorElement::restrict_to(std::span<const Index> indices) const {
  ModuleElement out;
  for (const Index& s : indices) out.set(s, at(s));
  return out;
}

ModuleElement basis_vector(const Index& s) {
  ModuleElement e;
  e.set(s, FuncLin::constant(Rational(1)));
  return e;
}

FuncLin inner_product(const ModuleElement& x, const ModuleElement& y) {
  std::vector<FuncTerm> terms;
  const auto& small = x.entries().size() <= y.entries().size() ? x.entries() : y.entries();
  const auto& large = &small == &x.entries() ? y.entries() : x.entries();
  for (const auto& [s, v] : small) {
    auto it = large.find(s);
    if (it == large.end()) continue;
    terms.emplace_back(Rational(1), lin_mul(v, it->second));
  }
  return lin_combine(terms);
}

Interval module_norm(const ModuleElement& x, const EnclosureOptions& opts) {
  const FuncLin sq = inner_product(x, x);
  Interval s = sup_norm_enclosure(sq, opts);
  Interval root = sqrt(s, opts.precision, /*clamp=*/true);
  if (root.width() <= opts.tol) return root;
  // sqrt(hi) - sqrt(lo) <= sqrt(hi - lo), so tol^2/4 on the square suffices
  EnclosureOptions tight = opts;
  tight.tol = opts.tol * opts.tol / Rational(4);
  s = sup_norm_enclosure(sq, tight);
  return sqrt(s, opts.precision, /*clamp=*/true);
}

ModuleElement right_action(const ModuleElement& x, const FuncLin& b) {
  ModuleElement out;
  for (const auto& [s, v] : x.entries()) out.set(s, lin_mul(v, b));
  return out;
}

FuncLin apply_map(const CoeffFamily& phi, const ModuleElement& x) {
  std::vector<FuncTerm> terms;
  for (const auto& [s, v] : x.entries()) terms.emplace_back(Rational(1), lin_mul(phi.coefficient(s), v));
  return lin_combine(terms);
}

Interval verify_map_bound(const CoeffFamily& phi, std::span<const Index> subset, const EnclosureOptions& opts) {
  std::vector<FuncTerm> terms;
  for (const Index& s : subset) {
    const FuncLin beta = phi.coefficient(s);
    terms.emplace_back(Rational(1), lin_mul(beta, beta));
  }
  const Interval enc = sup_norm_enclosure(lin_combine(terms), opts);
  if (enc.hi() > phi.bound) {
    std::string names;
    for (const Index& s : subset) names += (names.empty() ? "" : ",") + s.str();
    throw CertificateViolation("bound certificate M = " + phi.bound.str() + " violated: enclosure " + enc.str() +
                               " on subset {" + names + "}");
  }
  return enc;
}

Interval cauchy_gap(const GeneratorElement& x, std::span<const Index> inner, std::span<const Index> outer,
                    const EnclosureOptions& opts) {
  std::set<Index> in(inner.begin(), inner.end());
  std::set<Index> out(outer.begin(), outer.end());
  if (!std::includes(out.begin(), out.end(), in.begin(), in.end()))
    throw ParameterError("cauchy_gap requires the inner index set to be contained in the outer one");
  std::vector<FuncTerm> terms;
  for (const Index& a : out) {
    if (in.contains(a)) continue;
    const FuncLin v = x.at(a);
    if (!v.empty()) terms.emplace_back(Rational(1), lin_mul(v, v));
  }
  return sup_norm_enclosure(lin_combine(terms), opts);
}

std::vector<Index> row_indices(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Index> out;
  for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(Index::pair(n, m));
  return out;
}

}  // namespace hmod

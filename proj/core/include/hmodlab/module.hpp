// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/enclosure.hpp"
#include "hmodlab/func_lin.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hmod {

/// Index of a standard module B^S. Two concrete index sets are used:
/// the naturals (Nat(m), m >= 1) for B^N, and A = {0} u (N x N) for
/// E = B (+) (B^N)^inf, whose elements are Zero and Pair(n, m).
class Index {
 public:
  enum class Kind { Zero = 0, Nat = 1, Pair = 2 };

  static Index zero() { return Index(Kind::Zero, 0, 0); }
  static Index nat(std::uint64_t m);
  static Index pair(std::uint64_t n, std::uint64_t m);

  Kind kind() const { return kind_; }
  /// Row of a Pair; 0 otherwise.
  std::uint64_t row() const { return n_; }
  /// Column of a Pair, or the value of a Nat.
  std::uint64_t col() const { return m_; }

  /// "0", "m" or "n:m".
  std::string str() const;
  static Index parse(std::string_view text);

  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  Index(Kind k, std::uint64_t n, std::uint64_t m) : kind_(k), n_(n), m_(m) {}

  Kind kind_;
  std::uint64_t n_;
  std::uint64_t m_;
};

/// Finitely supported element of B^S; zero entries are never stored.
class ModuleElement {
 public:
  using Entries = std::map<Index, FuncLin>;

  ModuleElement() = default;

  void set(const Index& s, FuncLin value);
  /// Zero outside the support.
  FuncLin at(const Index& s) const;

  const Entries& entries() const { return entries_; }
  std::vector<Index> support() const;
  bool empty() const { return entries_.empty(); }

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);

  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  Entries entries_;
};

/// Which indices a GeneratorElement may be nonzero on.
struct Support {
  enum class Kind { Finite, FullRow, AllPairs };
  Kind kind = Kind::Finite;
  std::uint64_t row = 0;      // FullRow only
  std::set<Index> extra;      // indices included in addition to the rule's shape

  bool contains(const Index& s) const;

  static Support finite(std::set<Index> s) { return {Kind::Finite, 0, std::move(s)}; }
  static Support full_row(std::uint64_t n, std::set<Index> extra = {}) { return {Kind::FullRow, n, std::move(extra)}; }
  static Support all_pairs(std::set<Index> extra = {}) { return {Kind::AllPairs, 0, std::move(extra)}; }
};

/// A family (b_s) given by a pure rule, possibly with infinite support.
/// Membership in B^S is not assumed: it is exactly what the refutation
/// machinery probes.
class GeneratorElement {
 public:
  using Rule = std::function<FuncLin(const Index&)>;

  GeneratorElement(Rule rule, Support support) : rule_(std::move(rule)), support_(std::move(support)) {}

  /// Rule value on the support, zero elsewhere.
  FuncLin at(const Index& s) const { return support_.contains(s) ? rule_(s) : FuncLin(); }
  const Support& support() const { return support_; }

  /// The finitely supported truncation to `indices`.
  ModuleElement restrict_to(std::span<const Index> indices) const;

 private:
  Rule rule_;
  Support support_;
};

/// Coefficient family (beta_s) of a bounded right-linear map
/// Phi: B^S -> B with Phi(e_s) = beta_s^* (all scalars here are real, so
/// the involution is the identity), plus a bound certificate M for the
/// finite partial sums ||sum beta_s^* beta_s||.
struct CoeffFamily {
  std::function<FuncLin(const Index&)> coefficient;
  Rational bound;
  std::string bound_note;
};

/// e_s: the constant 1 at s.
ModuleElement basis_vector(const Index& s);

/// <x, y> = sum_s x_s^* y_s over the common support.
FuncLin inner_product(const ModuleElement& x, const ModuleElement& y);

/// Enclosure of ||x|| = sqrt(||<x,x>||_inf) of width <= opts.tol.
Interval module_norm(const ModuleElement& x, const EnclosureOptions& opts = {});

/// Entrywise x_s * b.
ModuleElement right_action(const ModuleElement& x, const FuncLin& b);

/// Phi(x) = sum_s beta_s^* x_s over the (finite) support of x.
FuncLin apply_map(const CoeffFamily& phi, const ModuleElement& x);

/// Enclosure of ||sum_{s in subset} beta_s^* beta_s||_inf. Throws
/// CertificateViolation (naming the subset) when the upper end exceeds M.
Interval verify_map_bound(const CoeffFamily& phi, std::span<const Index> subset, const EnclosureOptions& opts = {});

/// Enclosure of ||sum_{a in outer \ inner} x_a^* x_a||_inf: the Cauchy
/// increment of the partial sums of <x,x>. Requires inner subset of outer.
Interval cauchy_gap(const GeneratorElement& x, std::span<const Index> inner, std::span<const Index> outer,
                    const EnclosureOptions& opts = {});

/// {(n, m) : lo <= m <= hi}
std::vector<Index> row_indices(std::uint64_t n, std::uint64_t lo, std::uint64_t hi);

}  // namespace hmod

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/pwl.hpp"
#include "hmodlab/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hmod {

/// A function atom: a PWL function, the square root of a nonnegative PWL
/// function, or a product of at least two non-product atoms.
class Atom {
 public:
  enum class Kind { Pwl = 0, SqrtPwl = 1, Product = 2 };

  static Atom pwl(PwlFunc f) { return Atom(Kind::Pwl, std::move(f), {}); }
  /// Throws DomainError when the radicand is negative at a breakpoint.
  static Atom sqrt(PwlFunc radicand);

  Kind kind() const { return kind_; }
  /// The PWL function (Pwl) or radicand (SqrtPwl). Empty for products.
  const PwlFunc& function() const { return fn_; }
  /// Factors of a product, sorted; empty otherwise.
  const std::vector<Atom>& factors() const { return factors_; }

  friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  friend class FuncLin;
  friend class ProductBuilder;
  Atom(Kind k, PwlFunc f, std::vector<Atom> factors)
      : kind_(k), fn_(std::move(f)), factors_(std::move(factors)) {}

  Kind kind_;
  PwlFunc fn_;
  std::vector<Atom> factors_;
};

/// A finite rational-linear combination of atoms: the scalar type of the
/// module, i.e. an element of C[0,1] with an exact symbolic form.
///
/// Canonical form:
///   - zero coefficients are dropped; the empty map is the zero function;
///   - all purely piecewise-linear content is merged into at most one Pwl
///     atom carrying coefficient 1;
///   - inside products, sqrt(g) * sqrt(g) is rewritten to g, PWL factors
///     are normalised (first nonzero breakpoint value 1, constants folded
///     into the coefficient), and factors are sorted.
/// Structural equality of canonical forms implies functional equality; the
/// converse does not hold in general (see decide_zero).
class FuncLin {
 public:
  using Terms = std::map<Atom, Rational>;

  FuncLin() = default;

  static FuncLin zero() { return {}; }
  static FuncLin constant(const Rational& c);
  static FuncLin from_pwl(const PwlFunc& f);
  /// sqrt of a nonnegative PWL function; DomainError on a negative radicand.
  static FuncLin sqrt_of(const PwlFunc& radicand);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// The PWL function this combination equals, when it has no sqrt or
  /// product atoms.
  std::optional<PwlFunc> as_pwl() const;

  /// Sorted union of every abscissa used by any atom.
  std::vector<Rational> abscissae() const;

  FuncLin& operator+=(const FuncLin& o);
  FuncLin& operator-=(const FuncLin& o);
  FuncLin& operator*=(const Rational& c);

  friend FuncLin operator+(FuncLin a, const FuncLin& b) { return a += b; }
  friend FuncLin operator-(FuncLin a, const FuncLin& b) { return a -= b; }
  friend FuncLin operator*(FuncLin a, const Rational& c) { return a *= c; }
  friend FuncLin operator*(const Rational& c, FuncLin a) { return a *= c; }
  friend FuncLin operator-(FuncLin a) { return a *= Rational(-1); }

  friend bool operator==(const FuncLin&, const FuncLin&) = default;

 private:
  friend FuncLin lin_combine(std::span<const std::pair<Rational, FuncLin>> terms);
  friend FuncLin lin_mul(const FuncLin& x, const FuncLin& y);

  // Adds c * atom, routing Pwl atoms into `pwl_acc` for a single merge.
  void accumulate(const Atom& atom, const Rational& c, std::vector<PwlTerm>& pwl_acc);
  void absorb_pwl(std::vector<PwlTerm>& pwl_acc);

  Terms terms_;
};

using FuncTerm = std::pair<Rational, FuncLin>;

/// Exact sum of c_i * x_i in canonical form.
FuncLin lin_combine(std::span<const FuncTerm> terms);

/// Bilinear product with the sqrt-pair rewrite applied.
FuncLin lin_mul(const FuncLin& x, const FuncLin& y);

inline FuncLin operator*(const FuncLin& x, const FuncLin& y) { return lin_mul(x, y); }

}  // namespace hmod

// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/func_lin.hpp"

#include "hmodlab/errors.hpp"

#include <algorithm>

namespace hmod {

Atom Atom::sqrt(PwlFunc radicand) {
  if (!radicand.is_nonnegative()) throw DomainError("square-root radicand must be nonnegative at every breakpoint");
  return Atom(Kind::SqrtPwl, std::move(radicand), {});
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (a.kind_ != Atom::Kind::Product) return a.fn_ <=> b.fn_;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

// c * atom, where an absent atom means the constant function 1.
struct Monomial {
  Rational coef;
  std::optional<Atom> atom;
};

void flatten_into(const Atom& a, std::vector<Atom>& out) {
  if (a.kind() == Atom::Kind::Product)
    out.insert(out.end(), a.factors().begin(), a.factors().end());
  else
    out.push_back(a);
}

}  // namespace

class ProductBuilder {
 public:
  static Atom make(std::vector<Atom> factors) { return Atom(Atom::Kind::Product, PwlFunc(), std::move(factors)); }
};

namespace {

Monomial normalize_factors(std::vector<Atom> raw) {
  Rational coef(1);
  std::vector<PwlFunc> pwl;
  std::vector<PwlFunc> roots;
  for (Atom& a : raw) {
    const PwlFunc& f = a.function();
    if (f.is_zero()) return {Rational(0), std::nullopt};
    if (a.kind() == Atom::Kind::Pwl) {
      pwl.push_back(f);
      continue;
    }
    Rational r;
    if (f.is_constant() && exact_sqrt(f.breakpoints()[0].v, r)) {
      coef *= r;
      continue;
    }
    roots.push_back(f);
  }

  // sqrt(g) * sqrt(g) -> g
  std::sort(roots.begin(), roots.end());
  std::vector<PwlFunc> unpaired;
  for (std::size_t i = 0; i < roots.size();) {
    if (i + 1 < roots.size() && roots[i] == roots[i + 1]) {
      pwl.push_back(roots[i]);
      i += 2;
    } else {
      unpaired.push_back(roots[i]);
      ++i;
    }
  }

  std::vector<Atom> factors;
  for (const PwlFunc& f : pwl) {
    const auto pts = f.breakpoints();
    const auto lead = std::find_if(pts.begin(), pts.end(), [](const Breakpoint& p) { return !p.v.is_zero(); });
    const Rational s = lead->v;
    coef *= s;
    if (f.is_constant()) continue;
    factors.push_back(Atom::pwl(f.scaled(s.inverse())));
  }
  for (PwlFunc& g : unpaired) factors.push_back(Atom::sqrt(std::move(g)));

  if (factors.empty()) return {coef, std::nullopt};
  if (factors.size() == 1) return {coef, std::move(factors.front())};
  std::sort(factors.begin(), factors.end());
  return {coef, ProductBuilder::make(std::move(factors))};
}

}  // namespace

void FuncLin::accumulate(const Atom& atom, const Rational& c, std::vector<PwlTerm>& pwl_acc) {
  if (c.is_zero()) return;
  if (atom.kind() == Atom::Kind::Pwl) {
    pwl_acc.emplace_back(c, atom.function());
    return;
  }
  auto [it, inserted] = terms_.try_emplace(atom, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FuncLin::absorb_pwl(std::vector<PwlTerm>& pwl_acc) {
  if (pwl_acc.empty()) return;
  if (!terms_.empty() && terms_.begin()->first.kind() == Atom::Kind::Pwl) {
    pwl_acc.emplace_back(terms_.begin()->second, terms_.begin()->first.function());
    terms_.erase(terms_.begin());
  }
  PwlFunc merged = pwl_lincomb(pwl_acc);
  if (!merged.is_zero()) terms_.emplace(Atom::pwl(std::move(merged)), Rational(1));
}

FuncLin FuncLin::constant(const Rational& c) { return from_pwl(PwlFunc::constant(c)); }

FuncLin FuncLin::from_pwl(const PwlFunc& f) {
  FuncLin out;
  if (!f.is_zero()) out.terms_.emplace(Atom::pwl(f), Rational(1));
  return out;
}

FuncLin FuncLin::sqrt_of(const PwlFunc& radicand) {
  Monomial m = normalize_factors({Atom::sqrt(radicand)});
  FuncLin out;
  std::vector<PwlTerm> pwl_acc;
  out.accumulate(m.atom ? *m.atom : Atom::pwl(PwlFunc::constant(Rational(1))), m.coef, pwl_acc);
  out.absorb_pwl(pwl_acc);
  return out;
}

std::optional<PwlFunc> FuncLin::as_pwl() const {
  if (terms_.empty()) return PwlFunc();
  if (terms_.size() == 1 && terms_.begin()->first.kind() == Atom::Kind::Pwl)
    return terms_.begin()->first.function().scaled(terms_.begin()->second);
  return std::nullopt;
}

std::vector<Rational> FuncLin::abscissae() const {
  std::vector<const PwlFunc*> fs;
  for (const auto& [atom, c] : terms_) {
    if (atom.kind() == Atom::Kind::Product) {
      for (const Atom& f : atom.factors()) fs.push_back(&f.function());
    } else {
      fs.push_back(&atom.function());
    }
  }
  if (fs.empty()) return {Rational(0), Rational(1)};
  return merged_abscissae(fs);
}

FuncLin& FuncLin::operator+=(const FuncLin& o) {
  std::vector<PwlTerm> pwl_acc;
  for (const auto& [atom, c] : o.terms_) accumulate(atom, c, pwl_acc);
  absorb_pwl(pwl_acc);
  return *this;
}

FuncLin& FuncLin::operator-=(const FuncLin& o) {
  std::vector<PwlTerm> pwl_acc;
  for (const auto& [atom, c] : o.terms_) accumulate(atom, -c, pwl_acc);
  absorb_pwl(pwl_acc);
  return *this;
}

FuncLin& FuncLin::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms scaled;
  for (auto& [atom, coef] : terms_) {
    if (atom.kind() == Atom::Kind::Pwl)
      scaled.emplace(Atom::pwl(atom.function().scaled(c)), coef);
    else
      scaled.emplace(atom, coef * c);
  }
  terms_ = std::move(scaled);
  return *this;
}

FuncLin lin_combine(std::span<const FuncTerm> terms) {
  FuncLin out;
  std::vector<PwlTerm> pwl_acc;
  for (const auto& [c, x] : terms)
    for (const auto& [atom, a] : x.terms_) out.accumulate(atom, c * a, pwl_acc);
  out.absorb_pwl(pwl_acc);
  return out;
}

FuncLin lin_mul(const FuncLin& x, const FuncLin& y) {
  FuncLin out;
  std::vector<PwlTerm> pwl_acc;
  const Atom one = Atom::pwl(PwlFunc::constant(Rational(1)));
  for (const auto& [a, ca] : x.terms_) {
    for (const auto& [b, cb] : y.terms_) {
      std::vector<Atom> raw;
      flatten_into(a, raw);
      flatten_into(b, raw);
      Monomial m = normalize_factors(std::move(raw));
      out.accumulate(m.atom ? *m.atom : one, ca * cb * m.coef, pwl_acc);
    }
  }
  out.absorb_pwl(pwl_acc);
  return out;
}

}  // namespace hmod

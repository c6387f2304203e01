// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/interval.hpp"

#include "hmodlab/errors.hpp"

namespace hmod {

namespace {

mpz_class two_pow(unsigned k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
  return p;
}

bool is_dyadic_within(const Rational& x, unsigned prec) {
  const mpz_class den = x.denominator();
  // den is a power of two iff it has a single set bit
  if (mpz_popcount(den.get_mpz_t()) != 1) return false;
  return mpz_sizeinbase(den.get_mpz_t(), 2) - 1 <= prec;
}

// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
mpz_class isqrt_floor(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class isqrt_ceil(const mpz_class& n) {
  mpz_class r = isqrt_floor(n);
  if (r * r < n) r += 1;
  return r;
}

}  // namespace

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
}

Rational Interval::magnitude() const { return max(lo_.abs(), hi_.abs()); }

Rational Interval::mignitude() const {
  if (lo_.sign() > 0) return lo_;
  if (hi_.sign() < 0) return -hi_;
  return Rational(0);
}

Interval Interval::rounded(unsigned prec) const {
  return Interval(round_down(lo_, prec), round_up(hi_, prec));
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Rational round_down(const Rational& x, unsigned prec) {
  if (is_dyadic_within(x, prec)) return x;
  const mpz_class scale = two_pow(prec);
  return Rational(mpq_class(floor(x * Rational(mpq_class(scale))), scale));
}

Rational round_up(const Rational& x, unsigned prec) {
  if (is_dyadic_within(x, prec)) return x;
  const mpz_class scale = two_pow(prec);
  return Rational(mpq_class(ceil(x * Rational(mpq_class(scale))), scale));
}

Interval mul(const Interval& a, const Interval& b, unsigned prec) {
  const Rational p1 = a.lo() * b.lo();
  const Rational p2 = a.lo() * b.hi();
  const Rational p3 = a.hi() * b.lo();
  const Rational p4 = a.hi() * b.hi();
  const Rational lo = min(min(p1, p2), min(p3, p4));
  const Rational hi = max(max(p1, p2), max(p3, p4));
  return Interval(lo, hi).rounded(prec);
}

Interval scale(const Interval& a, const Rational& c, unsigned prec) {
  if (c.sign() >= 0) return Interval(a.lo() * c, a.hi() * c).rounded(prec);
  return Interval(a.hi() * c, a.lo() * c).rounded(prec);
}

Interval sqrt(const Interval& a, unsigned prec, bool clamp) {
  Rational lo = a.lo();
  if (lo.sign() < 0) {
    if (!clamp) throw DomainError("square root of interval with negative part " + a.str());
    lo = Rational(0);
  }
  if (a.hi().sign() < 0) throw DomainError("square root of negative interval " + a.str());

  Rational root;
  Rational out_lo, out_hi;
  if (exact_sqrt(lo, root)) {
    out_lo = round_down(root, prec);
  } else {
    // floor(sqrt(floor(lo * 4^p))) / 2^p <= sqrt(lo)
    const mpz_class scale = two_pow(2 * prec);
    const mpz_class n = floor(lo * Rational(mpq_class(scale)));
    out_lo = Rational(mpq_class(isqrt_floor(n), two_pow(prec)));
  }
  if (exact_sqrt(a.hi(), root)) {
    out_hi = round_up(root, prec);
  } else {
    const mpz_class scale = two_pow(2 * prec);
    const mpz_class n = ceil(a.hi() * Rational(mpq_class(scale)));
    out_hi = Rational(mpq_class(isqrt_ceil(n), two_pow(prec)));
  }
  return Interval(out_lo, out_hi);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval abs(const Interval& a) { return Interval(a.mignitude(), a.magnitude()); }

}  // namespace hmod

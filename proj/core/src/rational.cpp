// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/rational.hpp"

#include "hmodlab/errors.hpp"

#include <cctype>

namespace hmod {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::pow2(long e) {
  mpz_class p = 1;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
  if (e >= 0) return Rational(mpq_class(p));
  return Rational(mpq_class(mpz_class(1), p));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class floor(const Rational& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

mpz_class ceil(const Rational& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

bool exact_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

std::string to_decimal(const Rational& x, unsigned digits, bool round_up) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational scaled = x * Rational(mpq_class(scale));
  mpz_class k = round_up ? ceil(scaled) : floor(scaled);
  const bool negative = k < 0;
  if (negative) k = -k;
  std::string s = k.get_str(10);
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace hmod

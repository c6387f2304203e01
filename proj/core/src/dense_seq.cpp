// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/dense_seq.hpp"

#include "hmodlab/errors.hpp"

#include <istream>
#include <set>
#include <string>

namespace hmod {

Rational dyadic_term(std::uint64_t n) {
  if (n < 1) throw ParameterError("dense sequence is indexed from 1");
  if (n == 1) return Rational(1);
  // level j with 2^(j-1) < n <= 2^j
  unsigned j = 0;
  while ((std::uint64_t{1} << j) < n) ++j;
  const std::uint64_t offset = n - (std::uint64_t{1} << (j - 1)) - 1;
  return Rational(2 * offset + 1) * Rational::pow2(-static_cast<long>(j));
}

std::optional<std::uint64_t> dyadic_position(const Rational& q) {
  if (q.sign() <= 0 || q > Rational(1)) return std::nullopt;
  if (q == Rational(1)) return 1;
  const mpz_class den = q.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  const std::size_t j = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
  if (j >= 63) return std::nullopt;
  const std::uint64_t k = q.numerator().get_ui();
  return (std::uint64_t{1} << (j - 1)) + (k - 1) / 2 + 1;
}

DenseSeq DenseSeq::from_values(std::vector<Rational> values) {
  std::set<Rational> seen;
  for (const Rational& q : values) {
    if (q.sign() <= 0 || q > Rational(1)) throw ParameterError("sequence value outside (0,1]: " + q.str());
    if (!seen.insert(q).second) throw ParameterError("sequence value repeated: " + q.str());
  }
  DenseSeq s;
  s.builtin_ = false;
  s.values_ = std::move(values);
  return s;
}

DenseSeq DenseSeq::parse(std::istream& in) {
  std::vector<Rational> values;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    values.push_back(Rational::parse(line.substr(first, last - first + 1)));
  }
  if (values.empty()) throw ParseError("q-sequence file contains no values");
  return from_values(std::move(values));
}

Rational DenseSeq::operator()(std::uint64_t n) const {
  if (builtin_) return dyadic_term(n);
  if (n < 1 || n > values_.size())
    throw ParameterError("q-sequence index " + std::to_string(n) + " outside 1.." + std::to_string(values_.size()));
  return values_[n - 1];
}

std::optional<std::uint64_t> DenseSeq::length() const {
  if (builtin_) return std::nullopt;
  return values_.size();
}

}  // namespace hmod

// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/construction.hpp"

#include "hmodlab/serialize.hpp"

#include <limits>

namespace hmod {

namespace {

long column(std::uint64_t m) {
  if (m > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) throw ParameterError("column index too large");
  return static_cast<long>(m);
}

}  // namespace

FuncLin psi(const Rational& q, long m) { return FuncLin::sqrt_of(psi_sq(q, m)); }

CoeffFamily make_psi_map(const Rational& q) {
  if (q.sign() <= 0 || q > Rational(1)) throw ParameterError("q must lie in (0,1], got " + q.str());
  return CoeffFamily{
      [q](const Index& s) {
        if (s.kind() != Index::Kind::Nat) throw ParameterError("Psi_q is indexed by naturals, got " + s.str());
        return psi(q, column(s.col()));
      },
      Rational(1),
      "sum_{m<=M} psi_{q,m}^2 = f_{q,M} <= 1",
  };
}

CoeffFamily make_phi(const DenseSeq& qs) {
  return CoeffFamily{
      [qs](const Index& s) {
        switch (s.kind()) {
          case Index::Kind::Zero: return FuncLin::constant(Rational(1));
          case Index::Kind::Pair:
            return Rational::pow2(-static_cast<long>(s.row())) * psi(qs(s.row()), column(s.col()));
          case Index::Kind::Nat: break;
        }
        throw ParameterError("Phi is indexed by A = {0} u NxN, got " + s.str());
      },
      Rational(4, 3),
      "1 + sum_n 4^-n sum_m psi_{q_n,m}^2 <= 1 + sum_n 4^-n = 4/3",
  };
}

ModuleElement zeta(std::uint64_t k, std::uint64_t l, const DenseSeq& qs) {
  if (k < 1 || l < 1) throw ParameterError("zeta indices must be >= 1");
  ModuleElement z;
  z.set(Index::zero(), Rational::pow2(-static_cast<long>(k)) * psi(qs(k), column(l)));
  z.set(Index::pair(k, l), FuncLin::constant(Rational(-1)));
  return z;
}

void require_in_kernel(const CoeffFamily& phi, const ModuleElement& x) {
  FuncLin r = apply_map(phi, x);
  if (!is_zero_exact(r))
    throw ResidualError("element is not in the kernel; residual " + to_json(r).dump(), std::move(r));
}

void verify_kernel(std::uint64_t k, std::uint64_t l, const DenseSeq& qs) {
  require_in_kernel(make_phi(qs), zeta(k, l, qs));
}

GeneratorElement solve_constraints(const FuncLin& b0, const DenseSeq& qs) {
  if (b0.empty()) return GeneratorElement([](const Index&) { return FuncLin(); }, Support::finite({}));
  return GeneratorElement(
      [b0, qs](const Index& s) {
        if (s.kind() == Index::Kind::Zero) return b0;
        return Rational::pow2(-static_cast<long>(s.row())) * lin_mul(psi(qs(s.row()), column(s.col())), b0);
      },
      Support::all_pairs({Index::zero()}));
}

}  // namespace hmod

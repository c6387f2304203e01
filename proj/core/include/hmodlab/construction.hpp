// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hmodlab/dense_seq.hpp"
#include "hmodlab/func_lin.hpp"
#include "hmodlab/module.hpp"

#include <cstdint>

namespace hmod {

/// psi_{q,m} = sqrt(f_{q,m} - f_{q,m-1}). Its squares telescope:
/// sum_{m<=M} psi_{q,m}^2 = f_{q,M}, which increases pointwise to the
/// indicator of [0, q).
FuncLin psi(const Rational& q, long m);

/// Psi_q : B^N -> B with coefficients m -> psi_{q,m}; certificate M = 1.
/// Bounded, not adjointable (the coefficient family is not in B^N).
CoeffFamily make_psi_map(const Rational& q);

/// Phi : E = B^A -> B, Phi(b) = b_0 + sum_n 2^-n Psi_{q_n}(b_{n,.}).
/// Coefficients beta_0 = 1, beta_{(n,m)} = 2^-n psi_{q_n,m}; certificate
/// M = 4/3 from 1 + sum_n 4^-n. Phi(e_0 b) = b, so Phi is onto.
CoeffFamily make_phi(const DenseSeq& qs);

/// zeta_{k,l} = 2^-k psi_{q_k,l} e_0 - e_{(k,l)}; Phi(zeta_{k,l}) = 0.
ModuleElement zeta(std::uint64_t k, std::uint64_t l, const DenseSeq& qs);

/// Raised when an element that should lie in ker Phi does not.
class ResidualError : public ConstructionError {
 public:
  ResidualError(const std::string& what, FuncLin residual)
      : ConstructionError(what), residual_(std::move(residual)) {}
  const FuncLin& residual() const { return residual_; }

 private:
  FuncLin residual_;
};

/// Phi(x) for finitely supported x; throws ResidualError unless the result
/// is exactly zero.
void require_in_kernel(const CoeffFamily& phi, const ModuleElement& x);

/// Checks Phi(zeta_{k,l}) == 0 exactly; throws ResidualError otherwise.
void verify_kernel(std::uint64_t k, std::uint64_t l, const DenseSeq& qs);

/// The unique candidate orthogonal to every zeta given its 0-entry b0:
/// b_0 = b0 and b_{n,m} = 2^-n psi_{q_n,m} b0. Infinite support; whether it
/// lies in E is the question refute_membership answers.
GeneratorElement solve_constraints(const FuncLin& b0, const DenseSeq& qs);

}  // namespace hmod

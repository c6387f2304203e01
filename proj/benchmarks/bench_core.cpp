// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/hmodlab.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hmod;

void BM_PwlLincomb(benchmark::State& state) {
  const long m_max = state.range(0);
  std::vector<PwlTerm> terms;
  for (long m = 1; m <= m_max; ++m) terms.push_back({Rational(1), psi_sq(Rational(3, 8), m)});
  for (auto _ : state) benchmark::DoNotOptimize(pwl_lincomb(terms));
  state.SetComplexityN(m_max);
}
BENCHMARK(BM_PwlLincomb)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_Telescoping(benchmark::State& state) {
  for (auto _ : state) {
    FuncLin acc;
    for (long m = 1; m <= state.range(0); ++m) {
      const FuncLin p = psi(Rational(5, 8), m);
      acc += lin_mul(p, p);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Telescoping)->Arg(16)->Arg(64);

void BM_SupNormExact(benchmark::State& state) {
  const FuncLin x = FuncLin::from_pwl(make_f(Rational(1, 3), 64)) - FuncLin::from_pwl(make_hat(Rational(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm_enclosure(x));
}
BENCHMARK(BM_SupNormExact);

void BM_SupNormBranchAndBound(benchmark::State& state) {
  const EnclosureOptions opts{.tol = Rational::pow2(-static_cast<long>(state.range(0)))};
  const FuncLin x = psi(Rational(1, 2), 3) - Rational(1, 3) * FuncLin::sqrt_of(PwlFunc::identity());
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm_enclosure(x, opts));
}
BENCHMARK(BM_SupNormBranchAndBound)->Arg(10)->Arg(20)->Arg(30);

void BM_VerifyKernel(benchmark::State& state) {
  const DenseSeq qs = DenseSeq::dyadic();
  for (auto _ : state)
    for (std::uint64_t k = 1; k <= 20; ++k)
      for (std::uint64_t l = 1; l <= 20; ++l) verify_kernel(k, l, qs);
  state.SetItemsProcessed(state.iterations() * 400);
}
BENCHMARK(BM_VerifyKernel)->Unit(benchmark::kMillisecond);

void BM_ComplementProbe(benchmark::State& state) {
  const DenseSeq qs = DenseSeq::dyadic();
  const FuncLin b0 = FuncLin::from_pwl(make_hat(Rational(1, 3)));
  ProbeOptions opts;
  opts.refutation.cross_checks = 0;
  for (auto _ : state) benchmark::DoNotOptimize(complement_probe(b0, 4, state.range(0), qs, opts));
}
BENCHMARK(BM_ComplementProbe)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

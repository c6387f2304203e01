// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/construction.hpp"
#include "hmodlab/module.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace hmod;
using hmod::testing::Gen;
using hmod::testing::Real;
using hmod::testing::to_real;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

FuncLin random_scalar(Gen& gen) {
  FuncLin x = FuncLin::from_pwl(gen.pwl(3));
  if (gen.integer(0, 1)) x += gen.rational(R(-2), R(2)) * FuncLin::sqrt_of(gen.nonnegative_pwl(3));
  return x;
}

ModuleElement random_element(Gen& gen) {
  ModuleElement x;
  const int k = static_cast<int>(gen.integer(1, 3));
  for (int i = 0; i < k; ++i) {
    const Index s = gen.integer(0, 2) == 0 ? Index::zero() : Index::pair(gen.integer(1, 3), gen.integer(1, 3));
    x.set(s, random_scalar(gen));
  }
  return x;
}

const EnclosureOptions kLoose{.tol = Rational::pow2(-20), .budget = 200'000};

}  // namespace

TEST(Index, SerializationAndOrder) {
  EXPECT_EQ(Index::zero().str(), "0");
  EXPECT_EQ(Index::pair(3, 12).str(), "3:12");
  EXPECT_EQ(Index::nat(7).str(), "7");
  EXPECT_EQ(Index::parse("3:12"), Index::pair(3, 12));
  EXPECT_EQ(Index::parse("0"), Index::zero());
  EXPECT_EQ(Index::parse("5"), Index::nat(5));
  EXPECT_THROW(Index::parse("0:1"), ParseError);
  EXPECT_THROW(Index::parse("a:b"), ParseError);
  EXPECT_THROW(Index::pair(0, 1), ParameterError);
  EXPECT_LT(Index::zero(), Index::pair(1, 1));
  EXPECT_LT(Index::pair(1, 9), Index::pair(2, 1));
}

TEST(BasisVector, Orthonormality) {
  const Index s = Index::pair(2, 5), t = Index::zero();
  EXPECT_EQ(inner_product(basis_vector(s), basis_vector(s)), FuncLin::constant(R(1)));
  EXPECT_TRUE(inner_product(basis_vector(s), basis_vector(t)).empty());
  Gen gen(31);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement x = random_element(gen);
    for (const Index& a : x.support()) EXPECT_EQ(inner_product(basis_vector(a), x), x.at(a));
  }
}

TEST(InnerProduct, ZetaSelfProduct) {
  const DenseSeq qs = DenseSeq::dyadic();
  for (std::uint64_t k = 1; k <= 4; ++k) {
    for (std::uint64_t l = 1; l <= 4; ++l) {
      const FuncLin expected =
          FuncLin::from_pwl(psi_sq(qs(k), static_cast<long>(l)).scaled(Rational::pow2(-2 * static_cast<long>(k)))) +
          FuncLin::constant(R(1));
      EXPECT_EQ(inner_product(zeta(k, l, qs), zeta(k, l, qs)), expected);
    }
  }
}

TEST(InnerProduct, RightLinearAndSymmetric) {
  Gen gen(32);
  for (int i = 0; i < 50; ++i) {
    const ModuleElement x = random_element(gen), y = random_element(gen);
    const FuncLin b = random_scalar(gen);
    EXPECT_EQ(inner_product(x, right_action(y, b)), lin_mul(inner_product(x, y), b));
    EXPECT_EQ(inner_product(x, y), inner_product(y, x));
  }
}

TEST(InnerProduct, SquareOfSingleEntry) {
  const FuncLin g = FuncLin::from_pwl(make_hat(R(1, 3)));
  ModuleElement x;
  x.set(Index::zero(), g);
  EXPECT_EQ(inner_product(x, x), lin_mul(g, g));
}

TEST(InnerProduct, PositivityWhenPwlReducible) {
  Gen gen(33);
  for (int i = 0; i < 50; ++i) {
    ModuleElement x;
    for (long m = 1; m <= 4; ++m)
      x.set(Index::pair(1, m), gen.rational(R(-2), R(2)) * psi(gen.q(), gen.integer(1, 10)));
    const auto p = inner_product(x, x).as_pwl();
    ASSERT_TRUE(p.has_value());
    EXPECT_TRUE(p->is_nonnegative());
  }
}

TEST(ModuleNorm, SpecExamples) {
  const Interval e = module_norm(basis_vector(Index::pair(1, 1)));
  EXPECT_EQ(e, Interval::point(R(1)));

  const DenseSeq qs = DenseSeq::dyadic();
  const Interval z = module_norm(zeta(1, 1, qs));
  // ||zeta_{1,1}||^2 = 1 + 1/4 * sup psi_sq(1,1) = 5/4
  const Real root = boost::multiprecision::sqrt(Real(5) / 4);
  EXPECT_LE(to_real(z.lo()), root);
  EXPECT_GE(to_real(z.hi()), root);
  EXPECT_LE(z.width(), Rational::pow2(-30));
}

TEST(ModuleNorm, Submultiplicative) {
  Gen gen(34);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement x = random_element(gen);
    const FuncLin b = random_scalar(gen);
    const Interval xb = module_norm(right_action(x, b), kLoose);
    const Interval nx = module_norm(x, kLoose);
    const Interval nb = sup_norm_enclosure(b, kLoose);
    EXPECT_LE(xb.lo(), nx.hi() * nb.hi() + kLoose.tol);
  }
}

TEST(ModuleNorm, CauchySchwarzAtEnclosureLevel) {
  Gen gen(35);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement x = random_element(gen), y = random_element(gen);
    const Interval ip = sup_norm_enclosure(inner_product(x, y), kLoose);
    EXPECT_LE(ip.hi(), module_norm(x, kLoose).hi() * module_norm(y, kLoose).hi() + kLoose.tol);
  }
}

TEST(RightAction, AssociativeAndUnital) {
  Gen gen(36);
  const DenseSeq qs = DenseSeq::dyadic();
  EXPECT_EQ(right_action(zeta(2, 3, qs), FuncLin::constant(R(1))), zeta(2, 3, qs));
  const FuncLin b = random_scalar(gen);
  EXPECT_EQ(right_action(basis_vector(Index::zero()), b).at(Index::zero()), b);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement x = random_element(gen);
    const FuncLin c = random_scalar(gen), d = random_scalar(gen);
    EXPECT_EQ(right_action(right_action(x, c), d), right_action(x, lin_mul(c, d)));
  }
}

TEST(ApplyMap, CorrespondenceWithCoefficients) {
  const DenseSeq qs = DenseSeq::dyadic();
  const CoeffFamily phi = make_phi(qs);
  Gen gen(37);
  for (int i = 0; i < 100; ++i) {
    const Index s = i == 0 ? Index::zero() : Index::pair(gen.integer(1, 30), gen.integer(1, 30));
    EXPECT_EQ(apply_map(phi, basis_vector(s)), phi.coefficient(s));
  }
  const CoeffFamily psi_map = make_psi_map(R(3, 8));
  for (long m = 1; m <= 10; ++m) EXPECT_EQ(apply_map(psi_map, basis_vector(Index::nat(m))), psi(R(3, 8), m));
  EXPECT_TRUE(apply_map(psi_map, ModuleElement()).empty());
}

TEST(ApplyMap, RightLinear) {
  const CoeffFamily phi = make_phi(DenseSeq::dyadic());
  Gen gen(38);
  for (int i = 0; i < 30; ++i) {
    const ModuleElement x = random_element(gen), y = random_element(gen);
    const FuncLin b = random_scalar(gen);
    EXPECT_EQ(apply_map(phi, x + right_action(y, b)), apply_map(phi, x) + lin_mul(apply_map(phi, y), b));
  }
}

TEST(VerifyMapBound, PsiPartialSumsAreExact) {
  for (const Rational& q : {R(1), R(1, 2), R(3, 8)}) {
    const CoeffFamily psi_map = make_psi_map(q);
    for (long m = 1; m <= 16; ++m) {
      std::vector<Index> subset;
      for (long j = 1; j <= m; ++j) subset.push_back(Index::nat(j));
      EXPECT_EQ(verify_map_bound(psi_map, subset), Interval::point(min(R(1), R(m) * q)));
    }
  }
  EXPECT_EQ(verify_map_bound(make_psi_map(R(1, 2)), std::vector<Index>{}), Interval::point(R(0)));
}

TEST(VerifyMapBound, PhiBelowGeometricCertificate) {
  const DenseSeq qs = DenseSeq::dyadic();
  const CoeffFamily phi = make_phi(qs);
  for (std::uint64_t n_max : {1u, 3u, 8u}) {
    std::vector<Index> subset{Index::zero()};
    Rational geometric(1);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      geometric += Rational::pow2(-2 * static_cast<long>(n));
      for (std::uint64_t m = 1; m <= 8; ++m) subset.push_back(Index::pair(n, m));
    }
    const Interval enc = verify_map_bound(phi, subset);
    EXPECT_LE(enc.hi(), geometric);
    EXPECT_LT(enc.hi(), R(4, 3));
  }
}

TEST(VerifyMapBound, ViolationNamesTheSubset) {
  CoeffFamily bad = make_psi_map(R(1));
  bad.bound = R(1, 2);
  const std::vector<Index> subset{Index::nat(1), Index::nat(2)};
  try {
    verify_map_bound(bad, subset);
    FAIL() << "expected CertificateViolation";
  } catch (const CertificateViolation& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos);
  }
}

TEST(CauchyGap, TrivialCases) {
  const DenseSeq qs = DenseSeq::dyadic();
  const GeneratorElement x = solve_constraints(FuncLin::constant(R(1)), qs);
  const std::vector<Index> s = row_indices(2, 1, 5);
  EXPECT_EQ(cauchy_gap(x, s, s), Interval::point(R(0)));

  ModuleElement finite;
  finite.set(Index::pair(1, 1), psi(R(1), 1));
  const GeneratorElement fx([finite](const Index& a) { return finite.at(a); }, Support::finite({Index::pair(1, 1)}));
  EXPECT_EQ(cauchy_gap(fx, row_indices(1, 1, 3), row_indices(1, 1, 9)), Interval::point(R(0)));
  EXPECT_THROW(cauchy_gap(x, row_indices(2, 1, 5), row_indices(2, 1, 3)), ParameterError);
}

// exact PWL oracle: 4^-n sup (f_{q,2M} - f_{q,M}) = 4^-n / 2 once q >= 1/M
TEST(CauchyGap, DoublingGapOnConstantB0) {
  const DenseSeq qs = DenseSeq::dyadic();
  const GeneratorElement x = solve_constraints(FuncLin::constant(R(1)), qs);
  for (std::uint64_t n : {1u, 2u, 3u, 4u}) {
    for (std::uint64_t m : {4u, 8u, 16u}) {
      if (qs(n) < Rational(1) / Rational(m)) continue;
      const Interval g = cauchy_gap(x, row_indices(n, 1, m), row_indices(n, 1, 2 * m));
      const Rational oracle = pwl_sup_norm(make_f(qs(n), 2 * static_cast<long>(m)) - make_f(qs(n), static_cast<long>(m))) *
                              Rational::pow2(-2 * static_cast<long>(n));
      EXPECT_EQ(g, Interval::point(oracle));
      EXPECT_EQ(oracle, Rational::pow2(-2 * static_cast<long>(n)) / R(2));
    }
  }
}

TEST(CauchyGap, TriangleInequality) {
  const DenseSeq qs = DenseSeq::dyadic();
  const GeneratorElement x = solve_constraints(FuncLin::from_pwl(PwlFunc::identity()), qs);
  const auto s1 = row_indices(1, 1, 4), s2 = row_indices(1, 1, 9), s3 = row_indices(1, 1, 15);
  const Interval g13 = cauchy_gap(x, s1, s3, kLoose);
  const Interval g12 = cauchy_gap(x, s1, s2, kLoose);
  const Interval g23 = cauchy_gap(x, s2, s3, kLoose);
  EXPECT_LE(g13.lo(), g12.hi() + g23.hi() + R(2) * kLoose.tol);
}

TEST(GeneratorElement, OutOfSupportIsZeroAndDeterministic) {
  const GeneratorElement row([](const Index& a) { return FuncLin::constant(Rational(static_cast<long>(a.col()))); },
                             Support::full_row(2));
  EXPECT_TRUE(row.at(Index::pair(1, 3)).empty());
  EXPECT_TRUE(row.at(Index::zero()).empty());
  EXPECT_EQ(row.at(Index::pair(2, 3)), FuncLin::constant(R(3)));
  EXPECT_EQ(row.at(Index::pair(2, 3)), row.at(Index::pair(2, 3)));
  EXPECT_EQ(row.restrict_to(row_indices(2, 1, 4)).support().size(), 4u);
}

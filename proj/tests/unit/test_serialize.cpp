// SPDX-License-Identifier: Apache-2.0
#include "hmodlab/construction.hpp"
#include "hmodlab/serialize.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace hmod;
using hmod::testing::Gen;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

FuncLin random_funclin(Gen& gen) {
  FuncLin x = FuncLin::from_pwl(gen.pwl(3));
  x += gen.rational(R(-2), R(2)) * FuncLin::sqrt_of(gen.nonnegative_pwl(2));
  x += gen.rational(R(-1), R(1)) * lin_mul(psi(gen.q(), gen.integer(1, 4)), psi(gen.q(), gen.integer(1, 4)));
  return x;
}

}  // namespace

TEST(Serialize, PwlShape) {
  const Json j = to_json(make_f(R(1, 2), 4));
  EXPECT_EQ(j.dump(), R"([["0/1","1/1"],["1/4","1/1"],["1/2","0/1"],["1/1","0/1"]])");
}

TEST(Serialize, FuncLinShape) {
  const Json j = to_json(R(3, 2) * FuncLin::sqrt_of(PwlFunc::identity()));
  EXPECT_EQ(j.dump(), R"([{"coefficient":"3/2","atom":{"kind":"sqrt","points":[["0/1","0/1"],["1/1","1/1"]]}}])");
}

TEST(Serialize, ModuleElementKeys) {
  const Json j = to_json(zeta(2, 3, DenseSeq::dyadic()));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j.contains("0"));
  EXPECT_TRUE(j.contains("2:3"));
}

TEST(Serialize, RoundTripProperty) {
  Gen gen(77);
  for (int trial = 0; trial < 200; ++trial) {
    const PwlFunc f = gen.pwl(5);
    ASSERT_EQ(pwl_from_json(to_json(f)), f);
    const FuncLin x = random_funclin(gen);
    ASSERT_EQ(funclin_from_json(to_json(x)), x);
    ASSERT_EQ(to_json(funclin_from_json(to_json(x))).dump(), to_json(x).dump());
    ModuleElement e;
    e.set(Index::zero(), x);
    e.set(Index::pair(gen.integer(1, 9), gen.integer(1, 9)), random_funclin(gen));
    e.set(Index::nat(gen.integer(1, 9)), random_funclin(gen));
    ASSERT_EQ(module_element_from_json(to_json(e)), e);
  }
}

TEST(Serialize, IntervalDigitsRoundOutward) {
  const Json j = interval_to_json(Interval(R(1, 3), R(2, 3)), 4);
  EXPECT_EQ(j[0], "0.3333");
  EXPECT_EQ(j[1], "0.6667");
  const Json p = interval_to_json(Interval::point(R(-1, 4)));
  EXPECT_EQ(p[0], p[1]);
}

TEST(Serialize, ParseErrors) {
  EXPECT_THROW(pwl_from_json(Json::parse(R"([["0","1"]])")), ParseError);
  EXPECT_THROW(pwl_from_json(Json::parse(R"({"t":0})")), ParseError);
  EXPECT_THROW(pwl_from_json(Json::parse(R"([["0","x"],["1","0"]])")), ParseError);
  EXPECT_THROW(funclin_from_json(Json::parse(R"([{"coefficient":"1","atom":{"kind":"cube"}}])")), ParseError);
  EXPECT_THROW(module_element_from_json(Json::parse(R"({"a:b":[]})")), ParseError);
}

#include <gtest/gtest.h>

#include <random>

#include "supero/algebra.hpp"
#include "supero/weyl.hpp"

using namespace supero;

namespace {

std::vector<Weight> as_set(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Algebra, PeRootData) {
  auto a = build_algebra(Kind::PE, 2);
  EXPECT_EQ(as_set(a.odd_positive), as_set({a.weight({1, 1}), a.weight({2, 0}), a.weight({0, 2})}));
  EXPECT_EQ(a.odd_negative, std::vector<Weight>{a.weight({-1, -1})});
  EXPECT_EQ(*a.eta, a.weight({-1, -1}));
  EXPECT_EQ(a.dim_g0, 4);
  EXPECT_EQ(a.dim_h, 2);
}

TEST(Algebra, OspRootData) {
  auto a = build_algebra(Kind::OSP2, 1);
  EXPECT_EQ(a.even_positive, std::vector<Weight>{a.weight({0, 2})});
  EXPECT_EQ(as_set(a.odd_positive), as_set({a.weight({1, 1}), a.weight({1, -1})}));
  EXPECT_EQ(rho(a), a.weight({-1, 1}));
  auto b = build_algebra(Kind::OSP2, 2);
  EXPECT_EQ(rho(b), b.weight({-2, 2, 1}));
  EXPECT_EQ(b.dim_g0, 11);
}

TEST(Algebra, GlRankOne) {
  auto a = build_algebra(Kind::GL, 1);
  EXPECT_TRUE(a.even_positive.empty());
  EXPECT_EQ(a.rho0, a.weight({0}));
}

TEST(Algebra, RejectsBadRanks) {
  EXPECT_THROW(build_algebra(Kind::PE, 0), invalid_parameter);
  EXPECT_THROW(build_algebra(Kind::GL, -1), invalid_parameter);
  EXPECT_THROW(build_algebra(Kind::GLmn, 1, 2), invalid_parameter);
  EXPECT_THROW(build_algebra(Kind::GLmn, 1, 1), invalid_parameter);
  EXPECT_NO_THROW(build_algebra(Kind::GLmn, 1, 1, true));
}

TEST(Algebra, Bilinear) {
  auto pe = build_algebra(Kind::PE, 2);
  EXPECT_EQ(bilinear(pe, pe.weight({1, 0}), pe.weight({0, 1})), 0);
  EXPECT_EQ(bilinear(pe, pe.weight({2, 3}), pe.weight({1, 1})), 5);
  auto osp = build_algebra(Kind::OSP2, 1);
  EXPECT_EQ(bilinear(osp, osp.weight({1, 0}), osp.weight({1, 0})), 1);
  EXPECT_EQ(bilinear(osp, osp.weight({0, 1}), osp.weight({0, 1})), -1);
  EXPECT_THROW(bilinear(pe, pe.weight({1, 0}), osp.weight({1, 0})), basis_mismatch);
}

TEST(Algebra, BilinearIsSymmetricAndLinear) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  auto rnd = [&](const AlgebraDescriptor& a) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < a.basis.rank(); ++i) c.emplace_back(d(rng), den(rng));
    for (auto& x : c) x.canonicalize();
    return a.weight(std::move(c));
  };
  for (auto a : {build_algebra(Kind::PE, 3), build_algebra(Kind::OSP2, 2), build_algebra(Kind::GLmn, 2, 1)}) {
    for (int t = 0; t < 50; ++t) {
      auto x = rnd(a), y = rnd(a), z = rnd(a);
      Rational s(d(rng), den(rng));
      s.canonicalize();
      EXPECT_EQ(bilinear(a, x, y), bilinear(a, y, x));
      EXPECT_EQ(bilinear(a, x * s + z, y), s * bilinear(a, x, y) + bilinear(a, z, y));
    }
  }
}

TEST(Algebra, DistinguishedVectors) {
  EXPECT_EQ(eta(2), Weight::of(BasisTag::epsilon(2), {-1, -1}));
  EXPECT_EQ(omega(2, 2), Weight::of(BasisTag::epsilon(2), {1, 1}));
  EXPECT_EQ(omega(1, 3), Weight::of(BasisTag::epsilon(3), {1, 0, 0}));
  EXPECT_THROW(omega(0, 2), invalid_parameter);
  EXPECT_THROW(omega(3, 2), invalid_parameter);
  EXPECT_THROW(rho(build_algebra(Kind::PE, 2)), invalid_parameter);
}

TEST(Algebra, EtaIsSumOfNegativeOddRoots) {
  for (int n = 1; n <= 6; ++n) {
    auto a = build_algebra(Kind::PE, n);
    Weight s = a.zero();
    for (const auto& r : a.odd_negative) s += r;
    EXPECT_EQ(s, *a.eta);
    EXPECT_EQ(a.odd_positive.size() - a.odd_negative.size(), static_cast<std::size_t>(n));
  }
}

TEST(Algebra, Dominance) {
  auto gl2 = build_algebra(Kind::GL, 2);
  EXPECT_EQ(is_dominant(gl2, gl2.weight({0, 0})), Dominance::yes);
  EXPECT_EQ(is_antidominant(gl2, gl2.weight({-1, 1})), Dominance::yes);
  EXPECT_EQ(is_dominant(gl2, gl2.weight({-1, 1})), Dominance::no);
  auto gl3 = build_algebra(Kind::GL, 3);
  EXPECT_EQ(is_dominant(gl3, gl3.weight({0, 0, 0})), Dominance::yes);
  EXPECT_EQ(is_antidominant(gl3, gl3.weight({0, 0, 0})), Dominance::no);
  EXPECT_EQ(is_dominant(gl2, gl2.weight({Rational(1, 2), 0})), Dominance::not_integral);
}

TEST(Algebra, BothExtremesIffSingletonOrbit) {
  for (int n = 1; n <= 4; ++n) {
    auto a = build_algebra(Kind::GL, n);
    std::mt19937 rng(n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 40; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i) c.emplace_back(d(rng) - (n - 1 - i) * (t % 2));
      auto l = a.weight(std::move(c));
      bool both = is_dominant(a, l) == Dominance::yes && is_antidominant(a, l) == Dominance::yes;
      EXPECT_EQ(both, dot_orbit(a, l).size() == 1) << render(l);
    }
  }
}

TEST(Algebra, Typicality) {
  auto pe2 = build_algebra(Kind::PE, 2);
  EXPECT_FALSE(is_typical(pe2, pe2.weight({0, 0})));
  EXPECT_TRUE(is_typical(pe2, pe2.weight({1, 0})));
  EXPECT_FALSE(is_typical(pe2, pe2.weight({0, 2})));
  auto osp = build_algebra(Kind::OSP2, 1);
  EXPECT_FALSE(is_typical(osp, osp.zero()));
  EXPECT_TRUE(is_typical(osp, osp.weight({3, 0})));
  auto gl11 = build_algebra(Kind::GLmn, 1, 1, true);
  EXPECT_FALSE(is_typical(gl11, gl11.weight({2, -2})));
  EXPECT_TRUE(is_typical(gl11, gl11.weight({2, -1})));
  EXPECT_THROW(is_typical(build_algebra(Kind::GL, 2), Weight::of(BasisTag::epsilon(2), {0, 0})), unsupported);
}

TEST(Algebra, PeTypicalityStableUnderUniformShift) {
  auto a = build_algebra(Kind::PE, 3);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int c = -2; c <= 2; ++c)
        EXPECT_EQ(is_typical(a, a.weight({x, y, 0})), is_typical(a, a.weight({x + c, y + c, c})));
}

TEST(Algebra, LiteralRoundTrip) {
  for (const char* s : {"pe(3): 2,0,-1", "osp(2|4): 1 | 2,0", "gl(2|1): 1,0 | 3", "gl(2): 1/2,-3", "gl(1|1): 0 | 0"}) {
    auto [a, w] = parse_literal(s);
    EXPECT_EQ(render_literal(a, w), s);
    auto [b, v] = parse_literal(render_literal(a, w));
    EXPECT_EQ(v, w);
    EXPECT_EQ(b.name(), a.name());
  }
  EXPECT_THROW(parse_literal("pe(2): 1"), parse_error);
  EXPECT_THROW(parse_literal("osp(2|4): 1,2,0"), parse_error);
  EXPECT_THROW(parse_literal("sl(2): 1,0"), parse_error);
  EXPECT_THROW(parse_literal("pe(2): 1,x"), parse_error);
}

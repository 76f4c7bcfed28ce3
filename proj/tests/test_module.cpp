#include <gtest/gtest.h>

#include "supero/module.hpp"

using namespace supero;

namespace {

std::vector<int> select(const LieSuperalgebra& g, const std::function<bool(const BasisElement&)>& pred) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (pred(g[i])) out.push_back(static_cast<int>(i));
  return out;
}

bool upper(const BasisElement& b) { return b.cartan || sgn(b.height) > 0; }

TruncatedModule even_verma(std::shared_ptr<const LieSuperalgebra> g, const Weight& l, int depth) {
  auto seed = one_dim_module(g, l, select(*g, [](const BasisElement& b) { return b.parity == 0 && upper(b); }));
  return induce(seed, select(*g, [](const BasisElement& b) { return b.parity == 0 && sgn(b.height) < 0; }), depth, "Verma0");
}

}  // namespace

TEST(Module, EvenVermaMatchesKostantCount) {
  auto g = realize(build_algebra(Kind::GL, 3));
  auto lambda = g->descriptor().weight({2, -1, 0});
  auto m = even_verma(g, lambda, 6);
  EXPECT_GT(check_relations(m), 0u);
  const Weight a1 = g->descriptor().weight({1, -1, 0}), a2 = g->descriptor().weight({0, 1, -1});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 6; ++b) EXPECT_EQ(m.dim_at(lambda - a1 * a - a2 * b), static_cast<std::size_t>(std::min(a, b) + 1)) << a << "," << b;
}

TEST(Module, SingleLineWeightsOfGl2) {
  auto g = realize(build_algebra(Kind::GL, 2));
  auto m = even_verma(g, g->descriptor().zero(), 5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(m.dim_at(g->descriptor().weight({-k, k})), 1u);
  EXPECT_EQ(m.total_dim(), 6u);
  // The singular vector f.v at weight (-1,1) generates a submodule with one
  // dimension in every weight below the top.
  auto sv = singular_vectors(m, g->descriptor().weight({-1, 1}));
  ASSERT_EQ(sv.cols(), 1u);
  auto sub = submodule_generated(m, {{m.find(g->descriptor().weight({-1, 1})), sv.column(0)}});
  EXPECT_EQ(subspace_dim(sub), 5u);
  auto q = quotient(m, sub);
  EXPECT_EQ(q.total_dim(), 1u);
  check_relations(q);
  EXPECT_EQ(subspace_dim(radical(m)), 5u);
  auto dom = even_verma(g, g->descriptor().weight({3, 0}), 6);
  auto rad = radical(dom);
  EXPECT_EQ(subspace_dim(rad), 3u);  // L(3,0) has dimension 4
}

TEST(Module, SuperVermaOfPe2IsTwiceTheEvenPart) {
  auto g = realize(build_algebra(Kind::PE, 2));
  const auto& a = g->descriptor();
  auto l = a.weight({1, -2});
  auto seed = one_dim_module(g, l, select(*g, [](const BasisElement& b) { return b.cartan || (b.parity == 0 && sgn(b.height) > 0) || b.grade == 1; }));
  auto m = induce(seed, select(*g, [](const BasisElement& b) { return b.grade == -1 || (b.parity == 0 && !b.cartan && sgn(b.height) < 0); }), 7, "Verma");
  EXPECT_GT(check_relations(m), 0u);
  auto even = even_verma(g, l, 7);
  std::size_t expect = 0;
  // Lambda(g_-1) has weights 0 and -(e1+e2), height 3.
  auto odd = (*g)[static_cast<std::size_t>(g->find("Y12"))].weight;
  for (std::size_t w = 0; w < even.weights.size(); ++w) expect += even.dims[w] * (even.depths[w] + 3 <= 7 ? 2 : 1);
  EXPECT_EQ(m.total_dim(), expect);
  EXPECT_EQ(m.dim_at(l + odd), 1u);
}

TEST(Module, RelationsHoldForEveryAlgebra) {
  for (auto a : {build_algebra(Kind::OSP2, 1), build_algebra(Kind::OSP2, 2), build_algebra(Kind::GLmn, 2, 1), build_algebra(Kind::PE, 3)}) {
    auto g = realize(a);
    auto seed = one_dim_module(g, a.zero(), select(*g, upper));
    auto m = induce(seed, select(*g, [](const BasisElement& b) { return sgn(b.height) < 0; }), 4, "Verma");
    EXPECT_GT(check_relations(m), 0u) << a.name();
  }
}

TEST(Module, TwistedDualOfSimpleIsSimple) {
  auto g = realize(build_algebra(Kind::GL, 2));
  auto m = even_verma(g, g->descriptor().weight({2, 0}), 4);
  auto l = quotient(m, radical(m));
  auto d = twisted_dual(l);
  check_relations(d);
  EXPECT_EQ(d.total_dim(), 3u);
  EXPECT_EQ(subspace_dim(radical(d)), 0u);
}

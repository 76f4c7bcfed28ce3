#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

#include "supero/weyl.hpp"

using namespace supero;

namespace {

const WeylFamily A = WeylFamily::A;
const WeylFamily C = WeylFamily::C;

WeylElement s(WeylFamily f, int n, int i) { return WeylElement::simple(f, n, i); }

// All reflections: conjugates of simple reflections.
std::set<WeylElement> reflections(WeylFamily f, int n) {
  std::set<WeylElement> out;
  for (const auto& w : all_elements(f, n))
    for (int i = 1; i <= (f == A ? n - 1 : n); ++i) out.insert(w * s(f, n, i) * w.inverse());
  return out;
}

// Bruhat order as the transitive closure of x < xt with l(xt) = l(x) + 1.
std::map<std::pair<WeylElement, WeylElement>, bool> cover_closure(WeylFamily f, int n) {
  auto el = all_elements(f, n);
  auto refl = reflections(f, n);
  std::map<WeylElement, std::set<WeylElement>> up;
  for (const auto& x : el)
    for (const auto& t : refl) {
      auto y = x * t;
      if (y.length() == x.length() + 1) up[x].insert(y);
    }
  std::map<std::pair<WeylElement, WeylElement>, bool> le;
  for (const auto& x : el) {
    std::set<WeylElement> seen{x};
    std::deque<WeylElement> q{x};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (const auto& v : up[u])
        if (seen.insert(v).second) q.push_back(v);
    }
    for (const auto& y : el) le[{x, y}] = seen.count(y) > 0;
  }
  return le;
}

}  // namespace

TEST(Weyl, DotExamples) {
  auto gl2 = build_algebra(Kind::GL, 2);
  EXPECT_EQ(dot(gl2, s(A, 2, 1), gl2.weight({0, 0})), gl2.weight({-1, 1}));
  EXPECT_EQ(dot(gl2, WeylElement::identity(A, 2), gl2.weight({5, -3})), gl2.weight({5, -3}));
  auto gl3 = build_algebra(Kind::GL, 3);
  EXPECT_EQ(dot(gl3, longest_element(A, 3), gl3.zero()), gl3.weight({-2, 0, 2}));
  EXPECT_THROW(dot(gl3, s(A, 2, 1), gl3.zero()), invalid_parameter);
  auto osp = build_algebra(Kind::OSP2, 1);
  EXPECT_EQ(dot(osp, s(C, 1, 1), osp.weight({3, 0})), osp.weight({3, -2}));
}

TEST(Weyl, DotIsAGroupAction) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 1; n <= 4; ++n) {
    auto a = build_algebra(Kind::GL, n);
    auto el = all_elements(A, n);
    for (int t = 0; t < 30; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i) c.emplace_back(d(rng));
      auto l = a.weight(std::move(c));
      const auto& u = el[rng() % el.size()];
      const auto& v = el[rng() % el.size()];
      EXPECT_EQ(dot(a, u * v, l), dot(a, u, dot(a, v, l)));
    }
  }
  auto b = build_algebra(Kind::OSP2, 2);
  for (const auto& u : all_elements(C, 2))
    for (const auto& v : all_elements(C, 2)) EXPECT_EQ(dot(b, u * v, b.weight({1, 2, -1})), dot(b, u, dot(b, v, b.weight({1, 2, -1}))));
}

TEST(Weyl, CompositionConvention) {
  EXPECT_EQ(render(s(A, 3, 1) * s(A, 3, 2)), "231");
  EXPECT_EQ(word_product(A, 3, {1, 2}), parse_element(A, "231"));
  EXPECT_EQ(render(parse_element(C, "2,-1")), "2,-1");
}

TEST(Weyl, LengthIsCayleyDistance) {
  for (auto [f, n] : std::vector<std::pair<WeylFamily, int>>{{A, 1}, {A, 2}, {A, 3}, {A, 4}, {C, 1}, {C, 2}, {C, 3}}) {
    std::map<WeylElement, std::size_t> dist{{WeylElement::identity(f, n), 0}};
    std::deque<WeylElement> q{WeylElement::identity(f, n)};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (int i = 1; i <= (f == A ? n - 1 : n); ++i) {
        auto v = u * s(f, n, i);
        if (dist.emplace(v, dist[u] + 1).second) q.push_back(v);
      }
    }
    auto el = all_elements(f, n);
    EXPECT_EQ(dist.size(), el.size());
    for (const auto& w : el) {
      EXPECT_EQ(w.length(), dist[w]) << render(w);
      EXPECT_EQ(w.length(), w.inverse().length());
      EXPECT_EQ(w.reduced_word().size(), w.length());
      EXPECT_EQ(word_product(f, n, w.reduced_word()), w);
    }
  }
}

TEST(Weyl, LongestElements) {
  EXPECT_EQ(longest_element(A, 3).length(), 3u);
  EXPECT_EQ(longest_element(C, 2).length(), 4u);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(longest_element(A, n).length(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(longest_element(C, n).length(), static_cast<std::size_t>(n * n));
  }
  EXPECT_EQ(longest_in(ParabolicSubgroup::make(A, 4, {1, 2})).length(), 3u);
  EXPECT_EQ(longest_in(ParabolicSubgroup::make(A, 4, {})).length(), 0u);
  EXPECT_EQ(longest_in(ParabolicSubgroup::make(A, 4, {1, 2, 3})), longest_element(A, 4));
  EXPECT_EQ(longest_in(ParabolicSubgroup::make(C, 3, {1, 2, 3})), longest_element(C, 3));
}

TEST(Weyl, LongestInParabolicIsLongestOfItsElements) {
  for (auto [f, n] : std::vector<std::pair<WeylFamily, int>>{{A, 4}, {A, 5}, {C, 3}}) {
    const int top = f == A ? n - 1 : n;
    for (unsigned mask = 0; mask < (1u << top); ++mask) {
      std::vector<int> g;
      for (int i = 1; i <= top; ++i)
        if (mask & (1u << (i - 1))) g.push_back(i);
      auto p = ParabolicSubgroup::make(f, n, g);
      auto el = elements_of(p);
      std::size_t best = 0;
      for (const auto& w : el) best = std::max(best, w.length());
      auto w0 = longest_in(p);
      EXPECT_EQ(w0.length(), best);
      EXPECT_TRUE(std::find(el.begin(), el.end(), w0) != el.end());
    }
  }
}

TEST(Weyl, BruhatExamples) {
  auto e = WeylElement::identity(A, 3);
  for (const auto& w : all_elements(A, 3)) EXPECT_TRUE(bruhat_leq(e, w));
  EXPECT_TRUE(bruhat_leq(s(A, 3, 1), s(A, 3, 1) * s(A, 3, 2)));
  EXPECT_FALSE(bruhat_leq(s(A, 3, 1), s(A, 3, 2)));
}

TEST(Weyl, BruhatAlgorithmsAgreeWithCoverClosure) {
  for (auto [f, n] : std::vector<std::pair<WeylFamily, int>>{{A, 2}, {A, 3}, {A, 4}, {C, 2}, {C, 3}}) {
    auto le = cover_closure(f, n);
    for (const auto& [k, v] : le) {
      EXPECT_EQ(bruhat_leq(k.first, k.second), v) << render(k.first) << " <= " << render(k.second);
      EXPECT_EQ(bruhat_leq_tableau(k.first, k.second), v) << render(k.first) << " <= " << render(k.second);
    }
  }
}

TEST(Weyl, DescentsAndBigrassmannian) {
  auto w = parse_element(A, "231");
  EXPECT_TRUE(is_bigrassmannian(w));
  EXPECT_FALSE(is_bigrassmannian(longest_element(A, 3)));
  EXPECT_FALSE(is_bigrassmannian(WeylElement::identity(A, 3)));
  EXPECT_EQ(descents(longest_element(A, 3), Side::right), (std::vector<int>{1, 2}));
  for (int n = 2; n <= 5; ++n)
    for (const auto& u : all_elements(A, n)) EXPECT_EQ(is_bigrassmannian(u), is_bigrassmannian(u.inverse()));
  EXPECT_THROW(descents(s(C, 2, 2), Side::left), unsupported);
}

TEST(Weyl, Stabilizers) {
  auto gl2 = build_algebra(Kind::GL, 2);
  EXPECT_EQ(stabilizer(gl2, gl2.weight({-1, 0})).generators, std::vector<int>{1});
  auto gl3 = build_algebra(Kind::GL, 3);
  EXPECT_TRUE(stabilizer(gl3, gl3.zero()).generators.empty());
  EXPECT_THROW(stabilizer(gl2, gl2.weight({Rational(1, 2), 0})), not_integral);
  // Stabilizer of the dominant representative is exactly its dot-stabilizer.
  auto d = gl3.weight({0, 0, -1});  // +rho0 = (2,1,-1)
  auto e = gl3.weight({-1, 0, 0});  // +rho0 = (1,1,0)
  EXPECT_TRUE(stabilizer(gl3, d).generators.empty());
  EXPECT_EQ(stabilizer(gl3, e).generators, std::vector<int>{1});
  for (const auto& w : elements_of(stabilizer(gl3, e))) EXPECT_EQ(dot(gl3, w, e), e);
}

TEST(Weyl, CosetRepresentatives) {
  auto p = ParabolicSubgroup::make(A, 3, {1});
  auto reps = coset_reps(A, 3, p, Extreme::shortest, Side::right);
  std::vector<WeylElement> want{WeylElement::identity(A, 3), s(A, 3, 2), s(A, 3, 2) * s(A, 3, 1)};
  EXPECT_EQ(reps, want);
  for (auto [f, n] : std::vector<std::pair<WeylFamily, int>>{{A, 4}, {C, 2}}) {
    const int top = f == A ? n - 1 : n;
    for (unsigned mask = 0; mask < (1u << top); ++mask) {
      std::vector<int> g;
      for (int i = 1; i <= top; ++i)
        if (mask & (1u << (i - 1))) g.push_back(i);
      auto q = ParabolicSubgroup::make(f, n, g);
      auto sub = elements_of(q);
      for (auto side : {Side::left, Side::right})
        for (auto which : {Extreme::shortest, Extreme::longest}) {
          auto r = coset_reps(f, n, q, which, side);
          EXPECT_EQ(r.size() * sub.size(), all_elements(f, n).size());
          std::set<WeylElement> covered;
          for (const auto& x : r)
            for (const auto& y : sub) covered.insert(side == Side::right ? y * x : x * y);
          EXPECT_EQ(covered.size(), all_elements(f, n).size());
          for (const auto& x : r)
            for (const auto& y : sub) {
              auto z = side == Side::right ? y * x : x * y;
              if (which == Extreme::shortest) EXPECT_GE(z.length(), x.length());
              else EXPECT_LE(z.length(), x.length());
            }
        }
    }
  }
}

TEST(Weyl, OrbitExtremes) {
  auto gl2 = build_algebra(Kind::GL, 2);
  auto l = gl2.weight({-1, 2});
  EXPECT_EQ(orbit_extreme(gl2, l, OrbitEnd::antidominant).weight, l);
  EXPECT_EQ(orbit_extreme(gl2, l, OrbitEnd::dominant).weight, gl2.weight({1, 0}));
  auto d = orbit_extreme(gl2, gl2.weight({3, 1}), OrbitEnd::dominant);
  EXPECT_EQ(d.weight, gl2.weight({3, 1}));
  EXPECT_EQ(d.witness, WeylElement::identity(A, 2));
  auto gl3 = build_algebra(Kind::GL, 3);
  EXPECT_EQ(orbit_extreme(gl3, gl3.zero(), OrbitEnd::antidominant).weight, gl3.weight({-2, 0, 2}));
}

TEST(Weyl, OrbitExtremeWitnessIsMinimal) {
  std::vector<AlgebraDescriptor> algs{build_algebra(Kind::GL, 2), build_algebra(Kind::GL, 3), build_algebra(Kind::GL, 4),
                                      build_algebra(Kind::PE, 3), build_algebra(Kind::OSP2, 1), build_algebra(Kind::OSP2, 2)};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& a : algs) {
    auto el = all_elements(weyl_family(a), weyl_rank(a));
    for (int t = 0; t < 25; ++t) {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < a.basis.rank(); ++i) c.emplace_back(d(rng));
      auto l = a.weight(std::move(c));
      auto orbit = dot_orbit(a, l);
      for (auto which : {OrbitEnd::dominant, OrbitEnd::antidominant}) {
        auto ex = orbit_extreme(a, l, which);
        auto flag = which == OrbitEnd::dominant ? is_dominant(a, ex.weight) : is_antidominant(a, ex.weight);
        EXPECT_EQ(flag, Dominance::yes);
        int count = 0;
        for (const auto& o : orbit)
          if ((which == OrbitEnd::dominant ? is_dominant(a, o) : is_antidominant(a, o)) == Dominance::yes) ++count;
        EXPECT_EQ(count, 1);
        EXPECT_EQ(dot(a, ex.witness, ex.weight), l);
        for (const auto& w : el)
          if (dot(a, w, ex.weight) == l) {
            EXPECT_GE(w.length(), ex.witness.length());
            if (w.length() == ex.witness.length()) EXPECT_EQ(w, ex.witness);
          }
        std::set<Weight> again;
        for (const auto& w : el) again.insert(dot(a, w, ex.weight));
        EXPECT_EQ(std::vector<Weight>(again.begin(), again.end()), orbit);
      }
    }
  }
}

TEST(Weyl, IntegralWeylGroup) {
  auto pe2 = build_algebra(Kind::PE, 2);
  auto g = integral_weyl_group(pe2, pe2.weight({3, -1}));
  EXPECT_EQ(g.parabolic->generators, std::vector<int>{1});
  EXPECT_EQ(g.longest_length, 1u);
  g = integral_weyl_group(pe2, pe2.weight({Rational(1, 2), 0}));
  EXPECT_TRUE(g.parabolic->generators.empty());
  EXPECT_EQ(g.longest_length, 0u);
  auto pe3 = build_algebra(Kind::PE, 3);
  g = integral_weyl_group(pe3, pe3.weight({Rational(1, 2), Rational(1, 2), 0}));
  EXPECT_EQ(g.simple_roots, std::vector<Weight>{pe3.weight({1, -1, 0})});
  EXPECT_EQ(g.parabolic->generators, std::vector<int>{1});
  g = integral_weyl_group(pe3, pe3.weight({Rational(1, 2), 0, Rational(1, 2)}));
  EXPECT_FALSE(g.standard);
  EXPECT_EQ(g.longest_length, 1u);
}

TEST(Weyl, BlockEquivalenceExamples) {
  auto pe2 = build_algebra(Kind::PE, 2);
  auto z = pe2.zero();
  EXPECT_TRUE(pe_block_equivalent(pe2, z, z));
  EXPECT_TRUE(pe_block_equivalent(pe2, z, pe2.weight({2, 0})));
  EXPECT_EQ(pe_block_equivalent(pe2, z, pe2.weight({1, 0})), pe_block_equivalent_bfs(pe2, z, pe2.weight({1, 0}), 6));
  EXPECT_FALSE(pe_block_equivalent(pe2, z, pe2.weight({1, 0})));
  EXPECT_THROW(pe_block_equivalent(pe2, z, pe2.weight({Rational(1, 2), 0})), not_integral);
}

TEST(Weyl, BlockFastPathMatchesClosure) {
  for (int n = 2; n <= 3; ++n) {
    auto a = build_algebra(Kind::PE, n);
    std::vector<Weight> box;
    std::vector<long> c(static_cast<std::size_t>(n), -3);
    while (true) {
      std::vector<Rational> r(c.begin(), c.end());
      box.push_back(a.weight(std::move(r)));
      std::size_t k = 0;
      while (k < c.size() && c[k] == 3) c[k++] = -3;
      if (k == c.size()) break;
      ++c[k];
    }
    std::map<Weight, int> comp;
    int next = 0;
    for (const auto& l : box) {
      if (comp.count(l)) continue;
      for (const auto& v : pe_block_closure(a, l, 6)) comp.emplace(v, next);
      ++next;
    }
    for (const auto& l : box)
      for (const auto& v : box) EXPECT_EQ(pe_block_equivalent(a, l, v), comp[l] == comp[v]);
  }
}

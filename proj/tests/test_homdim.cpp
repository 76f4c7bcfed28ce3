#include <gtest/gtest.h>

#include "supero/homdim.hpp"

using namespace supero;

namespace {

std::vector<ParabolicSubgroup> all_levis(WeylFamily f, int n) {
  const int top = f == WeylFamily::A ? n - 1 : n;
  std::vector<ParabolicSubgroup> out;
  for (unsigned mask = 0; mask < (1u << top); ++mask) {
    std::vector<int> g;
    for (int i = 0; i < top; ++i)
      if (mask & (1u << i)) g.push_back(i + 1);
    out.push_back(ParabolicSubgroup::make(f, n, g));
  }
  return out;
}

// Inversions of the longest element of a Levi: sum over its type A runs.
long levi_inversions(const ParabolicSubgroup& p) {
  long total = 0, run = 0;
  for (int i = 1; i < p.n; ++i) {
    if (p.contains(i)) {
      ++run;
    } else {
      total += run * (run + 1) / 2;
      run = 0;
    }
  }
  return total + run * (run + 1) / 2;
}

}  // namespace

TEST(HomDim, FinitisticDimensions) {
  EXPECT_EQ(findim_gmod(build_algebra(Kind::PE, 2)), 4);
  EXPECT_EQ(findim_gmod(build_algebra(Kind::OSP2, 1)), 4);
  EXPECT_EQ(findim_gmod(build_algebra(Kind::GLmn, 1, 1, true)), 2);
  EXPECT_EQ(findim_weight_cat(build_algebra(Kind::PE, 2)), 2);
  EXPECT_EQ(findim_weight_cat(build_algebra(Kind::PE, 1)), 0);
  EXPECT_EQ(findim_weight_cat(build_algebra(Kind::OSP2, 1)), 2);
  auto pe3 = build_algebra(Kind::PE, 3);
  EXPECT_EQ(findim_parabolic(pe3, borel(pe3)), 6);
  EXPECT_EQ(findim_parabolic(pe3, parse_parabolic(WeylFamily::A, 3, "s1,s2")), 0);
  EXPECT_EQ(findim_parabolic(pe3, parse_parabolic(WeylFamily::A, 3, "s1")), 4);
  auto pe4 = build_algebra(Kind::PE, 4);
  EXPECT_EQ(findim_parabolic(pe4, parse_parabolic(WeylFamily::A, 4, "s1,s2")), 6);
  for (int n = 1; n <= 6; ++n) {
    auto a = build_algebra(Kind::PE, n);
    const long l0 = n * (n - 1) / 2;
    for (const auto& p : all_levis(WeylFamily::A, n)) {
      EXPECT_EQ(findim_parabolic(a, p), 2 * l0 - 2 * levi_inversions(p));
      auto blk = findim_block_pe(a, a.zero(), p);
      ASSERT_EQ(blk.tag, DimStatus::Tag::Finite);
      EXPECT_EQ(blk.value, findim_parabolic(a, p));
    }
  }
  EXPECT_EQ(findim_block_pe(build_algebra(Kind::PE, 2), build_algebra(Kind::PE, 2).weight({Rational(1, 2), 0}), borel(build_algebra(Kind::PE, 2))).value, 0);
  EXPECT_EQ(findim_block_pe(pe3, pe3.weight({Rational(1, 2), Rational(1, 2), 0}), borel(pe3)).value, 2);
  EXPECT_EQ(findim_block_pe(pe3, pe3.weight({Rational(1, 2), 0, Rational(1, 2)}), borel(pe3)).tag, DimStatus::Tag::OutOfScope);
}

TEST(HomDim, Shifts) {
  auto p = parse_parabolic(WeylFamily::A, 3, "s1");
  EXPECT_EQ(pd_shift(6, p), 4);
  EXPECT_EQ(id_shift(6, ParabolicSubgroup::make(WeylFamily::A, 3, {})), 6);
  EXPECT_THROW(pd_shift(1, p), precondition_failed);
  for (long k = 0; k < 20; ++k) EXPECT_EQ(pd_shift(k + 2 * levi_length(p), p), k);
}

TEST(HomDim, Tables) {
  auto pe2 = build_algebra(Kind::PE, 2);
  auto b = borel(pe2);
  EXPECT_EQ(pd_status_pe(pe2, {StructKind::Verma, pe2.zero(), b}).tag, DimStatus::Tag::Infinite);
  EXPECT_EQ(pd_status_pe(pe2, {StructKind::Costandard, pe2.weight({1, 0}), b}).tag, DimStatus::Tag::EqualsEvenPart);
  EXPECT_EQ(pd_status_pe(pe2, {StructKind::Costandard, pe2.zero(), b}).tag, DimStatus::Tag::Infinite);
  auto s = reduce_structural(pe2, {StructKind::InjectiveEnvelope, pe2.weight({1, 0}), b}, Measure::pd);
  EXPECT_EQ(s.tag, DimStatus::Tag::EqualsEvenPart);
  EXPECT_EQ(s.even->label.kind, StructKind::InjectiveEnvelope);
  EXPECT_EQ(s.even_value, 2);
  auto t = reduce_structural(pe2, {StructKind::Tilting, pe2.zero(), b}, Measure::id);
  EXPECT_EQ(t.even->measure, Measure::id);
  EXPECT_EQ(t.even->label.kind, StructKind::Tilting);
  auto osp = build_algebra(Kind::OSP2, 1);
  auto bo = borel(osp);
  EXPECT_EQ(pd_status_osp(osp, {StructKind::Verma, osp.zero(), bo}).tag, DimStatus::Tag::Infinite);
  EXPECT_EQ(pd_status_osp(osp, {StructKind::Verma, osp.weight({3, 0}), bo}).tag, DimStatus::Tag::EqualsEvenPart);
  EXPECT_EQ(pd_status_osp(osp, {StructKind::Simple, osp.zero(), bo}).tag, DimStatus::Tag::Infinite);
  EXPECT_EQ(pd_status_osp(osp, {StructKind::Simple, osp.weight({3, 0}), bo}).tag, DimStatus::Tag::OutOfScope);
  auto levi = parse_parabolic(WeylFamily::A, 2, "s1");
  EXPECT_THROW(pd_status_pe(pe2, {StructKind::ParabolicVerma, pe2.weight({0, 1}), levi}), invalid_parameter);
}

TEST(HomDim, DualityIsAnInvolutionAndSwapsTables) {
  for (auto a : {build_algebra(Kind::PE, 2), build_algebra(Kind::PE, 3), build_algebra(Kind::OSP2, 1), build_algebra(Kind::OSP2, 2)}) {
    const auto f = weyl_family(a);
    const int n = weyl_rank(a);
    for (const auto& p : all_levis(f, n))
      for (auto k : {StructKind::Simple, StructKind::Verma, StructKind::Costandard, StructKind::ProjectiveCover, StructKind::InjectiveEnvelope, StructKind::Tilting})
        for (long c = -2; c <= 2; ++c) {
          std::vector<Rational> coords(a.basis.rank(), Rational(0));
          for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = c * static_cast<long>(i % 2 ? 1 : -1) + static_cast<long>(coords.size() - i);
          Weight w = a.weight(coords);
          if (!in_parabolic_dominant(a, w, p)) continue;
          StructuralLabel l = normalize({k, w, p});
          auto d = duality_label(a, l);
          EXPECT_EQ(duality_label(a, d), l);
          auto ps = reduce_structural(a, l, Measure::pd);
          auto is = id_status(a, d);
          EXPECT_EQ(ps.tag, is.tag);
          EXPECT_EQ(ps.value, is.value);
          if (ps.even) EXPECT_EQ(*is.even, (EvenQuery{Measure::id, duality_label(a, ps.even->label)}));
        }
  }
  auto pe3 = build_algebra(Kind::PE, 3);
  auto d = duality_label(pe3, {StructKind::ParabolicVerma, pe3.weight({2, 1, 1}), parse_parabolic(WeylFamily::A, 3, "s2")});
  EXPECT_EQ(d.kind, StructKind::Costandard);
  EXPECT_EQ(d.weight, pe3.weight({-1, -1, -2}));
  EXPECT_EQ(d.parabolic, parse_parabolic(WeylFamily::A, 3, "s1"));
}

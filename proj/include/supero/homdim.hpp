#ifndef SUPERO_HOMDIM_HPP
#define SUPERO_HOMDIM_HPP

// Finitistic dimensions, the parabolic shift of projective and injective
// dimensions, and the Finite/Infinite table for structural modules.

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "weyl.hpp"

namespace supero {

enum class StructKind { Simple, Verma, ParabolicVerma, Costandard, Kac, ProjectiveCover, InjectiveEnvelope, Tilting };
enum class Measure { pd, id };

inline const char* to_string(StructKind k) {
  switch (k) {
    case StructKind::Simple: return "simple";
    case StructKind::Verma: return "verma";
    case StructKind::ParabolicVerma: return "parabolic-verma";
    case StructKind::Costandard: return "costandard";
    case StructKind::Kac: return "kac";
    case StructKind::ProjectiveCover: return "projective-cover";
    case StructKind::InjectiveEnvelope: return "injective-envelope";
    case StructKind::Tilting: return "tilting";
  }
  return "?";
}

inline StructKind parse_kind(std::string_view s) {
  for (auto k : {StructKind::Simple, StructKind::Verma, StructKind::ParabolicVerma, StructKind::Costandard, StructKind::Kac, StructKind::ProjectiveCover, StructKind::InjectiveEnvelope, StructKind::Tilting})
    if (s == to_string(k)) return k;
  throw parse_error("unknown module kind '" + std::string(s) + "'");
}

inline const char* to_string(Measure m) { return m == Measure::pd ? "pd" : "id"; }

struct StructuralLabel {
  StructKind kind = StructKind::Simple;
  Weight weight;
  ParabolicSubgroup parabolic;

  friend bool operator==(const StructuralLabel&, const StructuralLabel&) = default;
};

// The even-part quantity a super dimension reduces to.
struct EvenQuery {
  Measure measure = Measure::pd;
  StructuralLabel label;

  friend bool operator==(const EvenQuery&, const EvenQuery&) = default;
};

struct DimStatus {
  enum class Tag { Finite, Infinite, EqualsEvenPart, OutOfScope };
  Tag tag = Tag::OutOfScope;
  long value = 0;                    // Finite
  std::optional<EvenQuery> even;     // EqualsEvenPart
  std::optional<long> even_value;    // when the even quantity is known in closed form
  std::string reason;                // OutOfScope
  std::string anchor;

  static DimStatus finite(long v, std::string anchor) { return {Tag::Finite, v, {}, {}, {}, std::move(anchor)}; }
  static DimStatus infinite(std::string anchor) { return {Tag::Infinite, 0, {}, {}, {}, std::move(anchor)}; }
  static DimStatus equals_even(EvenQuery q, std::string anchor) { return {Tag::EqualsEvenPart, 0, std::move(q), {}, {}, std::move(anchor)}; }
  static DimStatus out_of_scope(std::string reason) { return {Tag::OutOfScope, 0, {}, {}, std::move(reason), "outside the stated results"}; }

  friend bool operator==(const DimStatus&, const DimStatus&) = default;
};

inline const char* to_string(DimStatus::Tag t) {
  switch (t) {
    case DimStatus::Tag::Finite: return "finite";
    case DimStatus::Tag::Infinite: return "infinite";
    case DimStatus::Tag::EqualsEvenPart: return "equals-even-part";
    case DimStatus::Tag::OutOfScope: return "out-of-scope";
  }
  return "?";
}

inline long findim_gmod(const AlgebraDescriptor& a) { return a.dim_g0; }

inline long findim_weight_cat(const AlgebraDescriptor& a) { return a.dim_g0 - a.dim_h; }

inline ParabolicSubgroup borel(const AlgebraDescriptor& a) { return ParabolicSubgroup::make(weyl_family(a), weyl_rank(a), {}); }

inline long levi_length(const ParabolicSubgroup& p) { return static_cast<long>(longest_in(p).length()); }

// 2 l(w0) - 2 l(w0^p).
inline long findim_parabolic(const AlgebraDescriptor& a, const ParabolicSubgroup& p) {
  const auto f = weyl_family(a);
  const int n = weyl_rank(a);
  if (p.family != f || p.n != n) throw invalid_parameter("parabolic subgroup does not belong to " + a.name());
  return 2 * static_cast<long>(longest_element(f, n).length()) - 2 * levi_length(p);
}

// 2 l(w0^λ) - 2 l(w0^p) for a block of pe(n), with w0^λ longest in the
// integral Weyl group of λ.
inline DimStatus findim_block_pe(const AlgebraDescriptor& a, const Weight& lambda, const ParabolicSubgroup& p) {
  if (a.kind != Kind::PE) throw invalid_parameter("findim_block_pe needs pe(n)");
  const auto w = integral_weyl_group(a, lambda);
  if (!w.parabolic) return DimStatus::out_of_scope("integral Weyl group of " + render(lambda) + " is not a standard parabolic subgroup");
  for (int g : p.generators)
    if (!w.parabolic->contains(g)) return DimStatus::out_of_scope("Levi " + render(p) + " is not inside the integral Weyl group of " + render(lambda));
  return DimStatus::finite(2 * static_cast<long>(w.longest_length) - 2 * levi_length(p), "finitistic dimension of a block of the parabolic category");
}

// Dimensions in O^p are those in O lowered by 2 l(w0^p).
inline long pd_shift(long in_o, const ParabolicSubgroup& p) {
  const long s = 2 * levi_length(p);
  if (in_o < 0) throw invalid_parameter("negative dimension");
  if (in_o < s) throw precondition_failed("dimension " + std::to_string(in_o) + " in O is below 2 l(w0^p) = " + std::to_string(s));
  return in_o - s;
}

inline long id_shift(long in_o, const ParabolicSubgroup& p) { return pd_shift(in_o, p); }

// <λ, α^vee> ∈ Z≥0 on the simple roots of the Levi.
inline bool in_parabolic_dominant(const AlgebraDescriptor& a, const Weight& lambda, const ParabolicSubgroup& p) {
  for (int g : p.generators) {
    Rational c = coroot_pairing(a, lambda, a.simple_even[static_cast<std::size_t>(g - 1)]);
    if (!is_integer(c) || sgn(c) < 0) return false;
  }
  return true;
}

namespace detail {

inline void check_label(const AlgebraDescriptor& a, const StructuralLabel& l) {
  a.check(l.weight);
  if (a.kind == Kind::GLmn) return;
  if (l.parabolic.family != weyl_family(a) || l.parabolic.n != weyl_rank(a)) throw invalid_parameter("parabolic subgroup does not belong to " + a.name());
  if (!in_parabolic_dominant(a, l.weight, l.parabolic)) throw invalid_parameter("weight " + render(l.weight) + " is not dominant for the Levi " + render(l.parabolic));
}

inline bool is_verma_type(StructKind k) { return k == StructKind::Verma || k == StructKind::ParabolicVerma; }

}  // namespace detail

// A Verma module is the parabolic Verma module of the Borel.
inline StructuralLabel normalize(StructuralLabel l) {
  if (l.kind == StructKind::ParabolicVerma && l.parabolic.generators.empty()) l.kind = StructKind::Verma;
  if (l.kind == StructKind::Verma && !l.parabolic.generators.empty()) l.kind = StructKind::ParabolicVerma;
  return l;
}

// -w0 λ.
inline Weight minus_w0(const AlgebraDescriptor& a, const Weight& w) {
  a.check(w);
  Weight out = w;
  switch (a.kind) {
    case Kind::GL:
    case Kind::PE:
      for (int i = 0; i < a.n; ++i) out[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(a.n - 1 - i)];
      break;
    case Kind::OSP2:
      out[0] = -w[0];
      break;
    case Kind::GLmn:
      for (int i = 0; i < a.m; ++i) out[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(a.m - 1 - i)];
      for (int i = 0; i < a.n; ++i) out[static_cast<std::size_t>(a.m + i)] = -w[static_cast<std::size_t>(a.m + a.n - 1 - i)];
      break;
  }
  return out;
}

// p̂: the Levi's simple roots moved by -w0.
inline ParabolicSubgroup hat(const ParabolicSubgroup& p) {
  if (p.family == WeylFamily::C) return p;
  std::vector<int> g;
  for (int i : p.generators) g.push_back(p.n - i);
  return ParabolicSubgroup::make(p.family, p.n, std::move(g));
}

// Label of D M for the duality D of the parabolic category.
inline StructuralLabel duality_label(const AlgebraDescriptor& a, const StructuralLabel& in) {
  const StructuralLabel l = normalize(in);
  StructuralLabel out{l.kind, minus_w0(a, l.weight), a.kind == Kind::GLmn ? l.parabolic : hat(l.parabolic)};
  switch (l.kind) {
    case StructKind::Simple:
    case StructKind::Tilting: break;
    case StructKind::Verma:
    case StructKind::ParabolicVerma: out.kind = StructKind::Costandard; break;
    case StructKind::Costandard: out.kind = StructKind::ParabolicVerma; break;
    case StructKind::ProjectiveCover: out.kind = StructKind::InjectiveEnvelope; break;
    case StructKind::InjectiveEnvelope: out.kind = StructKind::ProjectiveCover; break;
    case StructKind::Kac: throw unsupported("the dual of a Kac module is not a listed structural module");
  }
  return normalize(out);
}

// pd I0^p(ν) = 2 l(w0^ν) - 2 l(w0^p) for dominant regular integral ν.
inline std::optional<long> pd_even_injective_dominant(const AlgebraDescriptor& a, const Weight& nu, const ParabolicSubgroup& p) {
  if (a.kind != Kind::PE && a.kind != Kind::GL) return std::nullopt;
  if (!is_integral(a, nu) || is_dominant(a, nu) != Dominance::yes) return std::nullopt;
  if (!stabilizer(a, nu).generators.empty()) return std::nullopt;
  return 2 * static_cast<long>(integral_weyl_group(a, nu).longest_length) - 2 * levi_length(p);
}

inline DimStatus pd_status_pe(const AlgebraDescriptor& a, const StructuralLabel& in) {
  if (a.kind != Kind::PE) throw invalid_parameter("pd_status_pe needs pe(n)");
  detail::check_label(a, in);
  const StructuralLabel l = normalize(in);
  switch (l.kind) {
    case StructKind::Simple:
    case StructKind::Kac:
    case StructKind::Verma:
    case StructKind::ParabolicVerma:
      return DimStatus::infinite("quotients of parabolic Verma modules have infinite projective dimension");
    case StructKind::Costandard:
      if (is_typical(a, l.weight)) return DimStatus::equals_even({Measure::pd, l}, "costandard modules of typical weight have the even projective dimension");
      return DimStatus::infinite("costandard modules of atypical weight have infinite projective dimension");
    case StructKind::ProjectiveCover: return DimStatus::finite(0, "projective covers are projective");
    case StructKind::InjectiveEnvelope:
    case StructKind::Tilting: break;
  }
  return DimStatus::out_of_scope("no table entry for the " + std::string(to_string(l.kind)) + " module of pe(n)");
}

inline DimStatus pd_status_osp(const AlgebraDescriptor& a, const StructuralLabel& in) {
  if (a.kind != Kind::OSP2) throw invalid_parameter("pd_status_osp needs osp(2|2n)");
  detail::check_label(a, in);
  const StructuralLabel l = normalize(in);
  const bool typical = is_typical(a, l.weight);
  switch (l.kind) {
    case StructKind::Verma:
    case StructKind::ParabolicVerma:
    case StructKind::Costandard:
      if (typical) return DimStatus::equals_even({Measure::pd, l}, "parabolic Verma and costandard modules of typical weight have the even projective dimension");
      return DimStatus::infinite("parabolic Verma and costandard modules of atypical weight have infinite projective dimension");
    case StructKind::Simple:
      if (!typical) return DimStatus::infinite("simple modules of atypical weight have a non-zero associated variety");
      return DimStatus::out_of_scope("projective dimension of typical simple osp modules is not determined");
    case StructKind::ProjectiveCover: return DimStatus::finite(0, "projective covers are projective");
    case StructKind::Kac:
    case StructKind::InjectiveEnvelope:
    case StructKind::Tilting: break;
  }
  return DimStatus::out_of_scope("no table entry for the " + std::string(to_string(l.kind)) + " module of osp(2|2n)");
}

inline DimStatus pd_status_glmn(const AlgebraDescriptor& a, const StructuralLabel& in) {
  detail::check_label(a, in);
  const StructuralLabel l = normalize(in);
  if (l.kind == StructKind::Simple && !is_typical(a, l.weight)) return DimStatus::infinite("simple modules of atypical weight have a non-zero associated variety");
  if (l.kind == StructKind::ProjectiveCover) return DimStatus::finite(0, "projective covers are projective");
  return DimStatus::out_of_scope("gl(m|n) has no projective dimension table beyond atypical simple modules");
}

inline DimStatus pd_status(const AlgebraDescriptor& a, const StructuralLabel& l) {
  switch (a.kind) {
    case Kind::PE: return pd_status_pe(a, l);
    case Kind::OSP2: return pd_status_osp(a, l);
    case Kind::GLmn: return pd_status_glmn(a, l);
    case Kind::GL: break;
  }
  throw invalid_parameter("structural dimensions need a superalgebra");
}

// Injective and tilting modules under pd, projective and tilting modules
// under id, reduce to the even part; everything else goes to the tables.
inline DimStatus id_status(const AlgebraDescriptor& a, const StructuralLabel& l);

inline DimStatus reduce_structural(const AlgebraDescriptor& a, const StructuralLabel& in, Measure m) {
  if (!a.super()) throw invalid_parameter("structural dimensions need a superalgebra");
  detail::check_label(a, in);
  const StructuralLabel l = normalize(in);
  if (m == Measure::pd && (l.kind == StructKind::InjectiveEnvelope || l.kind == StructKind::Tilting)) {
    auto s = DimStatus::equals_even({Measure::pd, l}, l.kind == StructKind::Tilting ? "tilting modules have the even projective dimension" : "injective envelopes have the even projective dimension");
    if (l.kind == StructKind::InjectiveEnvelope && a.kind != Kind::GLmn) s.even_value = pd_even_injective_dominant(a, l.weight, l.parabolic);
    return s;
  }
  if (m == Measure::id && (l.kind == StructKind::ProjectiveCover || l.kind == StructKind::Tilting)) {
    auto s = DimStatus::equals_even({Measure::id, l}, l.kind == StructKind::Tilting ? "tilting modules have the even injective dimension" : "projective covers have the even injective dimension");
    if (l.kind == StructKind::ProjectiveCover && a.kind != Kind::GLmn) {
      const auto d = duality_label(a, l);
      s.even_value = pd_even_injective_dominant(a, d.weight, d.parabolic);
    }
    return s;
  }
  return m == Measure::pd ? pd_status(a, l) : id_status(a, l);
}

// id M = pd D M, with even queries carried back through the duality.
inline DimStatus id_status(const AlgebraDescriptor& a, const StructuralLabel& l) {
  if (l.kind == StructKind::Kac) return DimStatus::out_of_scope("injective dimension of Kac modules is not determined");
  DimStatus s = reduce_structural(a, duality_label(a, l), Measure::pd);
  if (s.even) s.even = EvenQuery{Measure::id, duality_label(a, s.even->label)};
  if (s.tag != DimStatus::Tag::OutOfScope) s.anchor = "injective dimension equals the projective dimension of the dual: " + s.anchor;
  return s;
}

}  // namespace supero

#endif

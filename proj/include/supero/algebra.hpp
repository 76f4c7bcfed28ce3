#ifndef SUPERO_ALGEBRA_HPP
#define SUPERO_ALGEBRA_HPP

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace supero {

enum class Kind { GL, GLmn, PE, OSP2 };

// Root data of one of the four families. For GL, PE and OSP2 the rank lives
// in n (OSP2(n) is osp(2|2n)); GLmn uses both m and n.
struct AlgebraDescriptor {
  Kind kind = Kind::GL;
  int m = 0;
  int n = 0;
  BasisTag basis;
  std::vector<Weight> even_positive;
  std::vector<Weight> odd_positive;
  std::vector<Weight> odd_negative;
  std::vector<Weight> simple_even;
  Weight rho0;
  std::optional<Weight> rho;
  std::optional<Weight> eta;
  int dim_g0 = 0;
  int dim_h = 0;

  std::string name() const {
    switch (kind) {
      case Kind::GL: return "gl(" + std::to_string(n) + ")";
      case Kind::PE: return "pe(" + std::to_string(n) + ")";
      case Kind::OSP2: return "osp(2|" + std::to_string(2 * n) + ")";
      case Kind::GLmn: return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    }
    return "?";
  }

  bool super() const { return kind != Kind::GL; }

  Weight zero() const { return Weight::zero(basis); }
  Weight weight(std::vector<Rational> c) const { return Weight(basis, std::move(c)); }
  Weight weight(std::initializer_list<long> c) const { return Weight::of(basis, c); }
  Weight parse(std::string_view text) const { return parse_weight(text, basis); }

  void check(const Weight& w) const {
    if (!(w.basis() == basis)) {
      throw basis_mismatch("weight over " + to_string(w.basis()) + " given to " + name());
    }
  }
};

namespace detail {

inline Weight unit(BasisTag b, std::size_t i, long c = 1) {
  Weight w = Weight::zero(b);
  w[i] = c;
  return w;
}

inline Weight half_sum(BasisTag b, const std::vector<Weight>& roots) {
  Weight s = Weight::zero(b);
  for (const auto& r : roots) s += r;
  return s * Rational(1, 2);
}

}  // namespace detail

inline Weight omega(int k, int n) {
  if (n < 1 || k < 1 || k > n) throw invalid_parameter("omega needs 1 <= k <= n");
  Weight w = Weight::zero(BasisTag::epsilon(n));
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
  return w;
}

inline Weight eta(int n) {
  if (n < 1) throw invalid_parameter("eta needs n >= 1");
  Weight w = Weight::zero(BasisTag::epsilon(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = 1 - n;
  return w;
}

// gl(n|n) is only built when allow_square is set; gl(1|1) is the one the
// oracle needs.
inline AlgebraDescriptor build_algebra(Kind kind, int first, int second = 0, bool allow_square = false) {
  AlgebraDescriptor a;
  a.kind = kind;
  if (first < 1) throw invalid_parameter("rank must be at least 1");
  using detail::unit;
  switch (kind) {
    case Kind::GL:
    case Kind::PE: {
      const int n = first;
      a.n = n;
      a.basis = BasisTag::epsilon(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.even_positive.push_back(unit(a.basis, i) - unit(a.basis, j));
      for (int i = 0; i + 1 < n; ++i) a.simple_even.push_back(unit(a.basis, i) - unit(a.basis, i + 1));
      a.rho0 = a.zero();
      for (int i = 0; i < n; ++i) a.rho0[static_cast<std::size_t>(i)] = n - 1 - i;
      a.dim_g0 = n * n;
      a.dim_h = n;
      if (kind == Kind::PE) {
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) a.odd_positive.push_back(unit(a.basis, i) + unit(a.basis, j));
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) a.odd_negative.push_back(-(unit(a.basis, i) + unit(a.basis, j)));
        a.eta = eta(n);
      }
      break;
    }
    case Kind::OSP2: {
      const int n = first;
      a.n = n;
      a.basis = BasisTag::epsilon_delta(1, n);
      auto d = [&](int i) { return unit(a.basis, static_cast<std::size_t>(1 + i)); };
      const Weight e = unit(a.basis, 0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a.even_positive.push_back(d(i) - d(j));
          a.even_positive.push_back(d(i) + d(j));
        }
      for (int i = 0; i < n; ++i) a.even_positive.push_back(d(i) * Rational(2));
      for (int i = 0; i + 1 < n; ++i) a.simple_even.push_back(d(i) - d(i + 1));
      a.simple_even.push_back(d(n - 1) * Rational(2));
      for (int p = 0; p < n; ++p) {
        a.odd_positive.push_back(e + d(p));
        a.odd_positive.push_back(e - d(p));
      }
      for (const auto& r : a.odd_positive) a.odd_negative.push_back(-r);
      a.rho0 = detail::half_sum(a.basis, a.even_positive);
      a.rho = a.rho0 - detail::half_sum(a.basis, a.odd_positive);
      a.dim_g0 = 1 + n * (2 * n + 1);
      a.dim_h = n + 1;
      break;
    }
    case Kind::GLmn: {
      const int m = first, n = second;
      if (n < 1) throw invalid_parameter("gl(m|n) needs n >= 1");
      if (m < n || (m == n && !allow_square)) {
        throw invalid_parameter("gl(m|n) needs m > n (m = n only with allow_square)");
      }
      a.m = m;
      a.n = n;
      a.basis = BasisTag::epsilon_delta(m, n);
      auto e = [&](int i) { return unit(a.basis, static_cast<std::size_t>(i)); };
      auto d = [&](int i) { return unit(a.basis, static_cast<std::size_t>(m + i)); };
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) a.even_positive.push_back(e(i) - e(j));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a.even_positive.push_back(d(i) - d(j));
      for (int i = 0; i + 1 < m; ++i) a.simple_even.push_back(e(i) - e(i + 1));
      for (int i = 0; i + 1 < n; ++i) a.simple_even.push_back(d(i) - d(i + 1));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.odd_positive.push_back(e(i) - d(j));
      for (const auto& r : a.odd_positive) a.odd_negative.push_back(-r);
      a.rho0 = a.zero();
      for (int i = 0; i < m; ++i) a.rho0[static_cast<std::size_t>(i)] = m - 1 - i;
      for (int i = 0; i < n; ++i) a.rho0[static_cast<std::size_t>(m + i)] = n - 1 - i;
      a.rho = detail::half_sum(a.basis, a.even_positive) - detail::half_sum(a.basis, a.odd_positive);
      a.dim_g0 = m * m + n * n;
      a.dim_h = m + n;
      break;
    }
  }
  return a;
}

// Accepts "gl(3)", "pe(2)", "osp(2|4)" and "gl(2|1)"; gl(n|n) is allowed here.
inline AlgebraDescriptor parse_algebra(std::string_view text) {
  static const std::regex re(R"(\s*(gl|pe|osp)\((\d+)(?:\|(\d+))?\)\s*)");
  std::cmatch mt;
  std::string s(text);
  if (!std::regex_match(s.c_str(), mt, re)) throw parse_error("unknown algebra '" + s + "'");
  const std::string fam = mt[1];
  const int x = std::stoi(mt[2]);
  const bool has_y = mt[3].matched;
  const int y = has_y ? std::stoi(mt[3]) : 0;
  if (fam == "pe" && !has_y) return build_algebra(Kind::PE, x);
  if (fam == "gl" && !has_y) return build_algebra(Kind::GL, x);
  if (fam == "gl" && has_y) return build_algebra(Kind::GLmn, x, y, true);
  if (fam == "osp" && has_y && x == 2 && y % 2 == 0) return build_algebra(Kind::OSP2, y / 2);
  throw parse_error("unsupported algebra '" + s + "'");
}

// "pe(3): 2,0,-1"
inline std::pair<AlgebraDescriptor, Weight> parse_literal(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error("expected 'algebra: weight'");
  auto a = parse_algebra(text.substr(0, colon));
  auto w = a.parse(text.substr(colon + 1));
  return {std::move(a), std::move(w)};
}

inline std::string render_literal(const AlgebraDescriptor& a, const Weight& w) {
  a.check(w);
  return a.name() + ": " + render(w);
}

inline Rational bilinear(const AlgebraDescriptor& a, const Weight& x, const Weight& y) {
  a.check(x);
  a.check(y);
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool neg = a.basis.split() && i >= static_cast<std::size_t>(a.basis.eps);
    if (neg) s -= x[i] * y[i];
    else s += x[i] * y[i];
  }
  return s;
}

// <x, alpha^vee> = 2 (x, alpha) / (alpha, alpha) for an even root alpha.
inline Rational coroot_pairing(const AlgebraDescriptor& a, const Weight& x, const Weight& alpha) {
  return 2 * bilinear(a, x, alpha) / bilinear(a, alpha, alpha);
}

inline const Weight& rho0(const AlgebraDescriptor& a) { return a.rho0; }

inline const Weight& rho(const AlgebraDescriptor& a) {
  if (!a.rho) throw invalid_parameter("no super Weyl vector for " + a.name());
  return *a.rho;
}

inline bool is_integral(const AlgebraDescriptor& a, const Weight& l) {
  a.check(l);
  for (const auto& r : a.even_positive)
    if (!is_integer(coroot_pairing(a, l, r))) return false;
  return true;
}

enum class Dominance { yes, no, not_integral };

inline const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::yes: return "yes";
    case Dominance::no: return "no";
    case Dominance::not_integral: return "not_integral";
  }
  return "?";
}

namespace detail {

inline Dominance dominance(const AlgebraDescriptor& a, const Weight& l, int sign) {
  if (!is_integral(a, l)) return Dominance::not_integral;
  const Weight s = l + a.rho0;
  for (const auto& r : a.simple_even)
    if (sign * sgn(coroot_pairing(a, s, r)) < 0) return Dominance::no;
  return Dominance::yes;
}

}  // namespace detail

inline Dominance is_dominant(const AlgebraDescriptor& a, const Weight& l) { return detail::dominance(a, l, 1); }
inline Dominance is_antidominant(const AlgebraDescriptor& a, const Weight& l) { return detail::dominance(a, l, -1); }

// pe(n): typical iff prod_{i != j} (l_i - l_j + j - i - 1) != 0. Otherwise
// typical iff (l + rho, alpha) != 0 for every odd positive alpha.
inline bool is_typical(const AlgebraDescriptor& a, const Weight& l) {
  a.check(l);
  if (a.kind == Kind::GL) throw unsupported("typicality is undefined for the purely even " + a.name());
  if (a.kind == Kind::PE) {
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) {
        if (i == j) continue;
        if (sgn(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + (j - i - 1)) == 0) return false;
      }
    return true;
  }
  const Weight s = l + rho(a);
  for (const auto& r : a.odd_positive)
    if (sgn(bilinear(a, s, r)) == 0) return false;
  return true;
}

}  // namespace supero

#endif

#ifndef SUPERO_WEYL_HPP
#define SUPERO_WEYL_HPP

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace supero {

enum class WeylFamily { A, C };

inline const char* to_string(WeylFamily f) { return f == WeylFamily::A ? "A" : "C"; }

// A (signed) permutation in one-line notation, values 1-based. Type C
// elements act on coordinates by (w x)_{|w(i)|} = sign(w(i)) x_i.
class WeylElement {
 public:
  WeylElement() = default;

  WeylElement(WeylFamily f, std::vector<int> window) : family_(f), w_(std::move(window)) {
    const int n = static_cast<int>(w_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w_) {
      int a = std::abs(v);
      if (a < 1 || a > n || seen[static_cast<std::size_t>(a)] || (f == WeylFamily::A && v < 0)) {
        throw invalid_parameter("not a " + std::string(f == WeylFamily::A ? "permutation" : "signed permutation"));
      }
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  static WeylElement identity(WeylFamily f, int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return {f, std::move(w)};
  }

  // s_i for 1 <= i < n swaps i, i+1; in type C, s_n negates the last entry.
  static WeylElement simple(WeylFamily f, int n, int i) {
    WeylElement s = identity(f, n);
    if (i >= 1 && i < n) {
      std::swap(s.w_[static_cast<std::size_t>(i - 1)], s.w_[static_cast<std::size_t>(i)]);
    } else if (f == WeylFamily::C && i == n) {
      s.w_[static_cast<std::size_t>(n - 1)] = -n;
    } else {
      throw invalid_parameter("no simple reflection s" + std::to_string(i) + " in " + to_string(f) + std::to_string(n));
    }
    return s;
  }

  WeylFamily family() const { return family_; }
  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }

  int operator()(int i) const {
    return i > 0 ? w_[static_cast<std::size_t>(i - 1)] : -w_[static_cast<std::size_t>(-i - 1)];
  }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    u.check_same(v);
    std::vector<int> out(v.w_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(v.w_[i]);
    WeylElement r;
    r.family_ = u.family_;
    r.w_ = std::move(out);
    return r;
  }

  WeylElement inverse() const {
    std::vector<int> out(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
      int v = w_[i];
      int s = v > 0 ? 1 : -1;
      out[static_cast<std::size_t>(std::abs(v) - 1)] = s * static_cast<int>(i + 1);
    }
    WeylElement r;
    r.family_ = family_;
    r.w_ = std::move(out);
    return r;
  }

  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(x.size());
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const int v = w_[i];
      y[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? x[i] : T(-x[i]);
    }
    return y;
  }

  // Number of positive roots sent to negative ones. A root of the form
  // c e_a + d e_b is positive iff its coefficient at the smaller index is.
  std::size_t length() const {
    if (family_ == WeylFamily::A) {
      std::size_t l = 0;
      for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
          if (w_[i] > w_[j]) ++l;
      return l;
    }
    std::size_t l = 0;
    const int n = rank();
    for (int i = 1; i <= n; ++i) {
      if ((*this)(i) < 0) ++l;  // 2 e_i
      for (int j = i + 1; j <= n; ++j) {
        if (negative_image(i, 1, j, -1)) ++l;
        if (negative_image(i, 1, j, 1)) ++l;
      }
    }
    return l;
  }

  // Whether w(c e_i + d e_j) is a negative root (i != j).
  bool negative_image(int i, int c, int j, int d) const {
    int a = (*this)(i), b = (*this)(j);
    int ca = a > 0 ? c : -c, cb = b > 0 ? d : -d;
    return std::abs(a) < std::abs(b) ? ca < 0 : cb < 0;
  }

  // w(alpha_i) < 0.
  bool has_right_descent(int i) const {
    const int n = rank();
    if (i >= 1 && i < n) return negative_image(i, 1, i + 1, -1);
    if (family_ == WeylFamily::C && i == n) return (*this)(n) < 0;
    throw invalid_parameter("simple index out of range");
  }

  int simple_count() const { return family_ == WeylFamily::A ? rank() - 1 : rank(); }

  // A reduced word i_1 ... i_k with w = s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    WeylElement u = *this;
    while (true) {
      int found = 0;
      for (int i = 1; i <= simple_count(); ++i)
        if (u.has_right_descent(i)) {
          found = i;
          break;
        }
      if (!found) break;
      word.push_back(found);
      u = u * simple(family_, rank(), found);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.family_ == b.family_ && a.w_ == b.w_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.w_ < b.w_; }

  void check_same(const WeylElement& o) const {
    if (family_ != o.family_ || w_.size() != o.w_.size()) throw invalid_parameter("Weyl elements from different groups");
  }

 private:
  WeylFamily family_ = WeylFamily::A;
  std::vector<int> w_;
};

inline WeylElement word_product(WeylFamily f, int n, const std::vector<int>& word) {
  WeylElement u = WeylElement::identity(f, n);
  for (int i : word) u = u * WeylElement::simple(f, n, i);
  return u;
}

// "231" for small type A; "2,-1" otherwise.
inline std::string render(const WeylElement& w) {
  std::string s;
  const bool compact = w.family() == WeylFamily::A && w.rank() < 10;
  for (std::size_t i = 0; i < w.window().size(); ++i) {
    if (!compact && i) s += ",";
    s += std::to_string(w.window()[i]);
  }
  return s;
}

inline WeylElement parse_element(WeylFamily f, std::string_view text) {
  std::vector<int> w;
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  try {
    if (t.find(',') == std::string::npos && f == WeylFamily::A) {
      for (char c : t) {
        if (c < '1' || c > '9') throw parse_error("bad permutation '" + t + "'");
        w.push_back(c - '0');
      }
    } else {
      std::size_t start = 0;
      while (start <= t.size()) {
        auto comma = t.find(',', start);
        w.push_back(std::stoi(t.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  } catch (const std::logic_error&) {
    throw parse_error("bad permutation '" + t + "'");
  }
  return {f, std::move(w)};
}

inline WeylElement longest_element(WeylFamily f, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = f == WeylFamily::A ? n - i : -(i + 1);
  return {f, std::move(w)};
}

struct ParabolicSubgroup {
  WeylFamily family = WeylFamily::A;
  int n = 0;
  std::vector<int> generators;  // sorted simple indices

  static ParabolicSubgroup make(WeylFamily f, int n, std::vector<int> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const int top = f == WeylFamily::A ? n - 1 : n;
    for (int g : gens)
      if (g < 1 || g > top) throw invalid_parameter("simple index s" + std::to_string(g) + " out of range");
    return {f, n, std::move(gens)};
  }

  bool contains(int i) const { return std::binary_search(generators.begin(), generators.end(), i); }

  friend bool operator==(const ParabolicSubgroup&, const ParabolicSubgroup&) = default;
};

// "s1,s3" (empty string for the Borel).
inline std::string render(const ParabolicSubgroup& p) {
  std::string s;
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ",s" : "s") + std::to_string(p.generators[i]);
  return s;
}

inline ParabolicSubgroup parse_parabolic(WeylFamily f, int n, std::string_view text) {
  std::vector<int> gens;
  std::string t(text);
  std::size_t pos = 0;
  while (pos < t.size()) {
    auto comma = t.find(',', pos);
    std::string item = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (!item.empty()) {
      if (item[0] == 's') item.erase(0, 1);
      try {
        std::size_t used = 0;
        gens.push_back(std::stoi(item, &used));
        if (used != item.size()) throw parse_error("");
      } catch (const std::exception&) {
        throw parse_error("bad simple reflection '" + item + "'");
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ParabolicSubgroup::make(f, n, std::move(gens));
}

inline WeylElement longest_in(const ParabolicSubgroup& p) {
  WeylElement w = WeylElement::identity(p.family, p.n);
  std::vector<int> win = w.window();
  std::size_t k = 0;
  const auto& g = p.generators;
  while (k < g.size()) {
    std::size_t e = k;
    while (e + 1 < g.size() && g[e + 1] == g[e] + 1) ++e;
    const int a = g[k], b = g[e];
    if (p.family == WeylFamily::C && b == p.n) {
      for (int i = a; i <= p.n; ++i) win[static_cast<std::size_t>(i - 1)] = -i;
    } else {
      // reverse coordinates a..b+1
      std::reverse(win.begin() + (a - 1), win.begin() + b + 1);
    }
    k = e + 1;
  }
  return {p.family, std::move(win)};
}

// All group elements sorted by (length, window).
inline std::vector<WeylElement> all_elements(WeylFamily f, int n) {
  std::vector<WeylElement> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (f == WeylFamily::A) {
      out.emplace_back(f, perm);
    } else {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto w = perm;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
        out.emplace_back(f, std::move(w));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    auto la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

inline std::vector<WeylElement> elements_of(const ParabolicSubgroup& p) {
  std::set<WeylElement> seen{WeylElement::identity(p.family, p.n)};
  std::deque<WeylElement> q(seen.begin(), seen.end());
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (int g : p.generators) {
      auto v = u * WeylElement::simple(p.family, p.n, g);
      if (seen.insert(v).second) q.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

// Subword criterion: x <= y iff some reduced subword of a reduced word of y
// multiplies to x.
inline bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
  x.check_same(y);
  const std::size_t lx = x.length();
  const auto word = y.reduced_word();
  if (lx > word.size()) return false;
  const WeylFamily f = x.family();
  const int n = x.rank();
  // Depth-first over subwords with reduced prefixes.
  struct Frame {
    std::size_t pos;
    WeylElement u;
    std::size_t len;
  };
  std::vector<Frame> stack{{0, WeylElement::identity(f, n), 0}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.len == lx) {
      if (fr.u == x) return true;
      continue;
    }
    if (fr.len + (word.size() - fr.pos) < lx) continue;
    stack.push_back({fr.pos + 1, fr.u, fr.len});
    auto v = fr.u * WeylElement::simple(f, n, word[fr.pos]);
    if (v.length() == fr.len + 1) stack.push_back({fr.pos + 1, std::move(v), fr.len + 1});
  }
  return false;
}

namespace detail {

inline bool tableau_leq(const std::vector<int>& x, const std::vector<int>& y) {
  const int n = static_cast<int>(x.size());
  for (int k = 1; k <= n; ++k) {
    int cx = 0, cy = 0;
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] >= k) ++cx;
      if (y[static_cast<std::size_t>(i)] >= k) ++cy;
      if (cx > cy) return false;
    }
  }
  return true;
}

// Conjugate by i -> n+1-i so that the sign change sits at the front, then
// view the element as a permutation of -n < ... < -1 < 1 < ... < n.
inline std::vector<int> embed_signed(const WeylElement& w) {
  const int n = w.rank();
  auto flip = [n](int v) { return v > 0 ? n + 1 - v : -(n + 1 + v); };
  auto index = [n](int v) { return v < 0 ? v + n + 1 : v + n; };
  std::vector<int> out(static_cast<std::size_t>(2 * n));
  for (int p = -n; p <= n; ++p) {
    if (p == 0) continue;
    int val = flip(w(flip(p)));
    out[static_cast<std::size_t>(index(p) - 1)] = index(val);
  }
  return out;
}

}  // namespace detail

// Rank-matrix criterion, independent of reduced words.
inline bool bruhat_leq_tableau(const WeylElement& x, const WeylElement& y) {
  x.check_same(y);
  if (x.family() == WeylFamily::A) return detail::tableau_leq(x.window(), y.window());
  return detail::tableau_leq(detail::embed_signed(x), detail::embed_signed(y));
}

enum class Side { left, right };

inline std::vector<int> descents(const WeylElement& w, Side side) {
  if (w.family() != WeylFamily::A) throw unsupported("descents are only provided for type A");
  const WeylElement u = side == Side::right ? w : w.inverse();
  std::vector<int> d;
  for (int i = 1; i < u.rank(); ++i)
    if (u.has_right_descent(i)) d.push_back(i);
  return d;
}

inline bool is_bigrassmannian(const WeylElement& w) {
  return descents(w, Side::left).size() == 1 && descents(w, Side::right).size() == 1;
}

enum class Extreme { shortest, longest };

// side = right lists cosets W_P w, side = left lists cosets w W_P. Output is
// sorted by (length, window).
inline std::vector<WeylElement> coset_reps(WeylFamily f, int n, const ParabolicSubgroup& p, Extreme which, Side side) {
  if (p.family != f || p.n != n) throw invalid_parameter("parabolic subgroup from a different group");
  const auto sub = elements_of(p);
  std::map<WeylElement, WeylElement> best;
  for (const auto& w : all_elements(f, n)) {
    WeylElement key = w;
    for (const auto& q : sub) {
      WeylElement v = side == Side::right ? q * w : w * q;
      if (v < key) key = v;
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, w);
    } else {
      auto lw = w.length(), lb = it->second.length();
      if ((which == Extreme::shortest && lw < lb) || (which == Extreme::longest && lw > lb)) it->second = w;
    }
  }
  std::vector<WeylElement> out;
  for (auto& kv : best) out.push_back(kv.second);
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    auto la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

// Covering relations of the Bruhat order, as index pairs into all_elements.
inline std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const std::vector<WeylElement>& elems) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (elems[j].length() == elems[i].length() + 1 && bruhat_leq(elems[i], elems[j])) out.emplace_back(i, j);
  return out;
}

// ---- dot action on algebras ----

inline WeylFamily weyl_family(const AlgebraDescriptor& a) {
  switch (a.kind) {
    case Kind::GL:
    case Kind::PE: return WeylFamily::A;
    case Kind::OSP2: return WeylFamily::C;
    case Kind::GLmn: break;
  }
  throw unsupported("no Weyl group support for " + a.name());
}

inline int weyl_rank(const AlgebraDescriptor& a) {
  weyl_family(a);
  return a.n;
}

// Coordinates the Weyl group acts on (delta part for osp).
inline std::size_t even_offset(const AlgebraDescriptor& a) { return a.kind == Kind::OSP2 ? 1 : 0; }

inline std::vector<Rational> shifted_coords(const AlgebraDescriptor& a, const Weight& l) {
  a.check(l);
  Weight s = l + a.rho0;
  const std::size_t off = even_offset(a);
  return {s.coeffs().begin() + static_cast<std::ptrdiff_t>(off), s.coeffs().end()};
}

inline Weight from_shifted(const AlgebraDescriptor& a, const Weight& like, const std::vector<Rational>& x) {
  Weight out = like;
  const std::size_t off = even_offset(a);
  for (std::size_t i = 0; i < x.size(); ++i) out[off + i] = x[i] - a.rho0[off + i];
  return out;
}

inline void check_group(const AlgebraDescriptor& a, const WeylElement& w) {
  if (w.family() != weyl_family(a) || w.rank() != weyl_rank(a)) {
    throw invalid_parameter("Weyl element " + render(w) + " does not act on " + a.name());
  }
}

inline Weight dot(const AlgebraDescriptor& a, const WeylElement& w, const Weight& l) {
  check_group(a, w);
  return from_shifted(a, l, w.apply(shifted_coords(a, l)));
}

inline std::vector<Weight> dot_orbit(const AlgebraDescriptor& a, const Weight& l) {
  std::set<Weight> s;
  for (const auto& w : all_elements(weyl_family(a), weyl_rank(a))) s.insert(dot(a, w, l));
  return {s.begin(), s.end()};
}

inline void require_integral(const AlgebraDescriptor& a, const Weight& l) {
  if (!is_integral(a, l) || !l.all_integer()) throw not_integral("weight " + render(l) + " is not integral");
}

enum class OrbitEnd { dominant, antidominant };

struct OrbitExtreme {
  Weight weight;
  WeylElement witness;  // minimal length with witness . weight = input
};

inline OrbitExtreme orbit_extreme(const AlgebraDescriptor& a, const Weight& l, OrbitEnd which) {
  require_integral(a, l);
  const WeylFamily f = weyl_family(a);
  const int n = weyl_rank(a);
  auto x = shifted_coords(a, l);
  std::vector<Rational> e = x;
  if (f == WeylFamily::A) {
    if (which == OrbitEnd::dominant) std::sort(e.begin(), e.end(), std::greater<>());
    else std::sort(e.begin(), e.end());
    std::vector<int> win(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!used[static_cast<std::size_t>(j)] && x[static_cast<std::size_t>(j)] == e[static_cast<std::size_t>(i)]) {
          used[static_cast<std::size_t>(j)] = true;
          win[static_cast<std::size_t>(i)] = j + 1;
          break;
        }
    return {from_shifted(a, l, e), WeylElement(f, std::move(win))};
  }
  for (auto& c : e) c = abs(c);
  std::sort(e.begin(), e.end(), std::greater<>());
  if (which == OrbitEnd::antidominant)
    for (auto& c : e) c = -c;
  Weight ext = from_shifted(a, l, e);
  for (const auto& w : all_elements(f, n))
    if (dot(a, w, ext) == l) return {ext, w};
  throw precondition_failed("orbit witness not found");
}

inline ParabolicSubgroup stabilizer(const AlgebraDescriptor& a, const Weight& mu) {
  const auto dom = orbit_extreme(a, mu, OrbitEnd::dominant).weight;
  const Weight s = dom + a.rho0;
  std::vector<int> gens;
  for (std::size_t i = 0; i < a.simple_even.size(); ++i)
    if (sgn(coroot_pairing(a, s, a.simple_even[i])) == 0) gens.push_back(static_cast<int>(i) + 1);
  return ParabolicSubgroup::make(weyl_family(a), weyl_rank(a), std::move(gens));
}

// Reflections s_alpha with <lambda, alpha^vee> integral, described by the
// classes of coordinates they connect (gl/pe only).
struct IntegralWeylGroup {
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  std::vector<std::vector<int>> classes;  // 0-based coordinate indices
  bool standard = true;                   // every class is an interval
  std::optional<ParabolicSubgroup> parabolic;
  std::size_t longest_length = 0;
};

inline IntegralWeylGroup integral_weyl_group(const AlgebraDescriptor& a, const Weight& l) {
  if (a.kind != Kind::PE && a.kind != Kind::GL) throw unsupported("integral Weyl group only for gl(n) and pe(n)");
  a.check(l);
  const int n = a.n;
  IntegralWeylGroup g;
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    cls[static_cast<std::size_t>(i)] = static_cast<int>(g.classes.size());
    g.classes.push_back({i});
    for (int j = i + 1; j < n; ++j)
      if (cls[static_cast<std::size_t>(j)] < 0 && is_integer(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)])) {
        cls[static_cast<std::size_t>(j)] = cls[static_cast<std::size_t>(i)];
        g.classes.back().push_back(j);
      }
  }
  auto root = [&](int i, int j) {
    Weight r = a.zero();
    r[static_cast<std::size_t>(i)] = 1;
    r[static_cast<std::size_t>(j)] = -1;
    return r;
  };
  std::vector<int> gens;
  for (const auto& c : g.classes) {
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t q = p + 1; q < c.size(); ++q) g.positive_roots.push_back(root(c[p], c[q]));
    for (std::size_t p = 0; p + 1 < c.size(); ++p) {
      g.simple_roots.push_back(root(c[p], c[p + 1]));
      if (c[p + 1] != c[p] + 1) g.standard = false;
      gens.push_back(c[p] + 1);
    }
  }
  g.longest_length = g.positive_roots.size();
  if (g.standard) g.parabolic = ParabolicSubgroup::make(WeylFamily::A, n, gens);
  return g;
}

// Number of odd entries of lambda + rho0; the block invariant for pe(n).
inline int pe_block_invariant(const AlgebraDescriptor& a, const Weight& l) {
  if (a.kind != Kind::PE) throw invalid_parameter("block invariant is for pe(n)");
  require_integral(a, l);
  int odd = 0;
  for (const auto& c : shifted_coords(a, l))
    if (mpz_class(c.get_num() % 2) != 0) ++odd;
  return odd;
}

inline bool pe_block_equivalent(const AlgebraDescriptor& a, const Weight& l, const Weight& nu) {
  return pe_block_invariant(a, l) == pe_block_invariant(a, nu);
}

// Breadth-first closure of the moves l -> l +- 2 e_k and l -> s_i . l,
// restricted to weights with all |coords| <= box. Both moves are invertible,
// so the closure is the connected component of l.
inline std::set<Weight> pe_block_closure(const AlgebraDescriptor& a, const Weight& l, long box) {
  if (a.kind != Kind::PE) throw invalid_parameter("block equivalence is for pe(n)");
  require_integral(a, l);
  auto inside = [box](const Weight& w) {
    for (const auto& c : w.coeffs())
      if (abs(c) > box) return false;
    return true;
  };
  if (!inside(l)) throw invalid_parameter("weight outside the search box");
  std::set<Weight> seen{l};
  std::deque<Weight> q{l};
  const int n = a.n;
  while (!q.empty()) {
    Weight u = q.front();
    q.pop_front();
    std::vector<Weight> next;
    for (int k = 0; k < n; ++k)
      for (int s : {2, -2}) {
        Weight v = u;
        v[static_cast<std::size_t>(k)] += s;
        next.push_back(std::move(v));
      }
    for (int i = 1; i < n; ++i) next.push_back(dot(a, WeylElement::simple(WeylFamily::A, n, i), u));
    for (auto& v : next)
      if (inside(v) && seen.insert(v).second) q.push_back(std::move(v));
  }
  return seen;
}

inline bool pe_block_equivalent_bfs(const AlgebraDescriptor& a, const Weight& l, const Weight& nu, long box) {
  require_integral(a, nu);
  return pe_block_closure(a, l, box).count(nu) > 0;
}

}  // namespace supero

#endif

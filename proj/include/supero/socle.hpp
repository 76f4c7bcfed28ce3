#ifndef SUPERO_SOCLE_HPP
#define SUPERO_SOCLE_HPP

// Socles of cokernels of Verma inclusions, for gl(n) through brute force and
// for pe(n) through the even multiplicities n_{x,y,z} and λ -> λ+ + η.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "linkage.hpp"
#include "oracle.hpp"
#include "weyl.hpp"

namespace supero {

inline std::string render(const SimpleMultiset& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, m] : s) {
    if (!first) out += ", ";
    first = false;
    out += "L(" + render(w) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out + "}";
}

// Shortest or longest element of the left coset x W_P.
inline WeylElement coset_extreme(const WeylElement& x, const ParabolicSubgroup& p, Extreme which) {
  WeylElement best = x;
  for (const auto& q : elements_of(p)) {
    WeylElement v = x * q;
    if ((which == Extreme::shortest && v.length() < best.length()) || (which == Extreme::longest && v.length() > best.length())) best = v;
  }
  return best;
}

inline bool is_longest_in_coset(const WeylElement& z, const ParabolicSubgroup& p) {
  for (int i : p.generators)
    if (!z.has_right_descent(i)) return false;
  return true;
}

// λ+ : the highest weight of the simple module whose b^r-highest weight is λ.
// Found by searching λ + (sums of distinct positive odd roots of g-1 type)
// for the μ with br_highest_weight_of_simple_pe(μ) = λ.
inline Weight lambda_plus_pe(const AlgebraDescriptor& a, const Weight& lambda) {
  if (a.kind != Kind::PE) throw invalid_parameter("lambda_plus_pe needs pe(n)");
  require_integral(a, lambda);
  if (a.n > 3) throw unsupported("unsupported rank: lambda_plus_pe is certified for n <= 3");
  static std::mutex mu;
  static std::map<Weight, Weight> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  std::vector<Weight> shifts;
  for (const auto& r : a.odd_negative) shifts.push_back(-r);
  std::set<Weight> sums{a.zero()};
  for (const auto& s : shifts) {
    std::set<Weight> next = sums;
    for (const auto& x : sums) next.insert(x + s);
    sums = std::move(next);
  }
  std::vector<Weight> hits;
  for (const auto& s : sums)
    if (br_highest_weight_of_simple_pe(a, lambda + s) == lambda) hits.push_back(lambda + s);
  if (hits.size() != 1) throw precondition_failed("expected one simple module with b^r-highest weight " + render(lambda) + ", found " + std::to_string(hits.size()));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(lambda, hits.front());
  return hits.front();
}

inline void require_even_budget(const AlgebraDescriptor& a) {
  if (a.kind != Kind::GL) throw invalid_parameter("even socles need gl(n)");
  if (a.n > 4) throw unsupported("unsupported rank: gl(" + std::to_string(a.n) + ") exceeds the oracle budget");
}

// Labels z.0 of a regular block pushed to the wall of μ: L0(z.0) survives iff
// z is longest in z W_μ, and becomes L0(z.μ).
inline SimpleMultiset translate_to_wall(const AlgebraDescriptor& a, const SimpleMultiset& s, const Weight& mu) {
  if (is_dominant(a, mu) != Dominance::yes) throw invalid_parameter("wall weight " + render(mu) + " is not dominant");
  const auto stab = stabilizer(a, mu);
  SimpleMultiset out;
  for (const auto& [label, m] : s) {
    const auto ex = orbit_extreme(a, label, OrbitEnd::dominant);
    if (!(ex.weight == a.zero())) throw invalid_parameter("label " + render(label) + " is not in the orbit of 0");
    if (!is_longest_in_coset(ex.witness, stab)) continue;
    out[dot(a, ex.witness, mu)] += m;
  }
  return out;
}

// soc(Δ0(x.μ)/Δ0(y.μ)) = ⊕ L0(z.μ)^{n_{x,y,z}} for x < y and μ dominant.
// Computed in the regular block and translated to the wall; for n <= 3 a
// singular μ is also checked directly.
inline SimpleMultiset socle_cokernel_even(const AlgebraDescriptor& a, const WeylElement& x, const WeylElement& y, const Weight& mu) {
  require_even_budget(a);
  check_group(a, x);
  check_group(a, y);
  require_integral(a, mu);
  if (is_dominant(a, mu) != Dominance::yes) throw invalid_parameter("weight " + render(mu) + " is not dominant");
  if (x == y || !bruhat_leq(x, y)) throw precondition_failed("need x < y in the Bruhat order");
  const auto stab = stabilizer(a, mu);
  const auto xs = coset_extreme(x, stab, Extreme::shortest);
  const auto ys = coset_extreme(y, stab, Extreme::shortest);
  if (xs == ys) return {};
  const Weight zero = a.zero();
  auto regular = socle_of_verma_quotient(a, dot(a, xs, zero), dot(a, ys, zero), true);
  auto out = translate_to_wall(a, regular, mu);
  if (!stab.generators.empty() && a.n <= 3) {
    auto direct = socle_of_verma_quotient(a, dot(a, x, mu), dot(a, y, mu), true);
    if (direct != out) throw precondition_failed("wall translation " + render(out) + " disagrees with the direct socle " + render(direct));
  }
  return out;
}

inline AlgebraDescriptor even_part(const AlgebraDescriptor& a) {
  if (a.kind != Kind::PE) throw invalid_parameter("even part is implemented for pe(n)");
  return build_algebra(Kind::GL, a.n);
}

inline Weight as_even(const AlgebraDescriptor& even, const Weight& w) { return even.weight(std::vector<Rational>(w.coeffs())); }
inline Weight from_even(const AlgebraDescriptor& a, const Weight& w) { return a.weight(std::vector<Rational>(w.coeffs())); }

// soc(Δ(λ)/Δ(γ)) over pe(n): ⊕_z L((z.μ)+ + η)^{n_{x,y,z}} with λ = x.μ,
// γ = y.μ and μ dominant. Empty when γ = λ.
inline SimpleMultiset socle_cokernel_pe(const AlgebraDescriptor& a, const Weight& lambda, const Weight& gamma) {
  if (a.kind != Kind::PE) throw invalid_parameter("socle_cokernel_pe needs pe(n)");
  require_integral(a, lambda);
  require_integral(a, gamma);
  if (hom_dim_verma_pe(a, gamma, lambda) != 1) throw precondition_failed("no nonzero map from the Verma module of " + render(gamma) + " to that of " + render(lambda));
  if (gamma == lambda) return {};
  if (a.n > 3) throw unsupported("unsupported rank: pe(" + std::to_string(a.n) + ")");
  const auto top = orbit_extreme(a, lambda, OrbitEnd::dominant);
  const auto sub = orbit_extreme(a, gamma, OrbitEnd::dominant);
  const auto gl = even_part(a);
  const auto even = socle_cokernel_even(gl, top.witness, sub.witness, as_even(gl, top.weight));
  SimpleMultiset out;
  for (const auto& [label, m] : even) out[lambda_plus_pe(a, from_even(a, label)) + *a.eta] += m;
  return out;
}

// dim Ext^1(L(μ), Δ(λ)) = [soc(Δ(λ̄)/Δ(λ)) : L(μ)] with λ̄ the dominant weight
// of the orbit; refused for antidominant μ.
struct Ext1Result {
  std::optional<int> value;
  std::string reason;
};

inline Ext1Result ext1_simple_verma_pe(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  if (a.kind != Kind::PE) throw invalid_parameter("ext1_simple_verma_pe needs pe(n)");
  require_integral(a, mu);
  require_integral(a, lambda);
  if (is_antidominant(a, mu) == Dominance::yes) return {std::nullopt, "antidominant simple weight " + render(mu) + " is outside the formula's scope"};
  const Weight top = orbit_extreme(a, lambda, OrbitEnd::dominant).weight;
  if (top == lambda) return {0, {}};
  const auto soc = socle_cokernel_pe(a, top, lambda);
  auto it = soc.find(mu);
  return {it == soc.end() ? 0 : it->second, {}};
}

// The three-case answer for pe(2): L(λ̄ - ω2) if a = b, L(λ̄) if a > b, and 0
// when λ = λ̄.
inline SimpleMultiset pe2_socle_closed_form(const AlgebraDescriptor& a, const Weight& top, const Weight& lambda) {
  if (a.kind != Kind::PE || a.n != 2) throw invalid_parameter("closed form is for pe(2)");
  require_integral(a, top);
  if (is_dominant(a, top) != Dominance::yes) throw invalid_parameter("weight " + render(top) + " is not dominant");
  const auto orbit = dot_orbit(a, top);
  if (std::find(orbit.begin(), orbit.end(), lambda) == orbit.end()) throw invalid_parameter(render(lambda) + " is not in the dot orbit of " + render(top));
  if (lambda == top) return {};
  if (top[0] == top[1]) return {{top - omega(2, 2), 1}};
  return {{top, 1}};
}

// soc Δ(λ) = L(λ̌), λ̌ the antidominant weight of the orbit.
inline SimpleMultiset socle_verma(const AlgebraDescriptor& a, const Weight& lambda) {
  if (a.kind != Kind::PE) throw invalid_parameter("socle_verma needs pe(n)");
  return {{orbit_extreme(a, lambda, OrbitEnd::antidominant).weight, 1}};
}

inline bool has_simple_socle_quotient(const WeylElement& y) { return is_bigrassmannian(y); }

}  // namespace supero

#endif

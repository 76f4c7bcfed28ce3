#ifndef SUPERO_LINKAGE_HPP
#define SUPERO_LINKAGE_HPP

#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "weyl.hpp"

namespace supero {

// mu ↑ lambda: a chain mu = nu_0, ..., nu_k = lambda with
// nu_{q+1} = s_alpha . nu_q and <nu_q + rho0, alpha^vee> a non-positive
// integer, alpha running over positive even roots. Every intermediate lies in
// the finite dot-orbit, so a breadth-first search terminates.
inline bool up_arrow(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  require_integral(a, mu);
  require_integral(a, lambda);
  if (mu == lambda) return true;
  std::set<Weight> seen{mu};
  std::deque<Weight> q{mu};
  while (!q.empty()) {
    Weight v = q.front();
    q.pop_front();
    const Weight s = v + a.rho0;
    for (const auto& r : a.even_positive) {
      Rational c = coroot_pairing(a, s, r);
      if (sgn(c) >= 0) continue;
      Weight u = v - r * c;
      if (u == lambda) return true;
      if (seen.insert(u).second) q.push_back(std::move(u));
    }
  }
  return false;
}

// Same relation through the Bruhat order: with mu = y.d and lambda = x.d for
// the dominant d and minimal witnesses, mu ↑ lambda iff x <= y.
inline bool up_arrow_bruhat(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  const auto em = orbit_extreme(a, mu, OrbitEnd::dominant);
  const auto el = orbit_extreme(a, lambda, OrbitEnd::dominant);
  if (!(em.weight == el.weight)) return false;
  return bruhat_leq(el.witness, em.witness);
}

inline int hom_dim_verma_even(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  if (a.kind != Kind::GL) throw invalid_parameter("even Verma homs are for gl(n)");
  return up_arrow(a, mu, lambda) ? 1 : 0;
}

inline int hom_dim_verma_pe(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  if (a.kind != Kind::PE) throw invalid_parameter("pe Verma homs need pe(n)");
  return up_arrow(a, mu, lambda) ? 1 : 0;
}

// Whether every nonzero map between Verma modules in the block of lambda is
// injective, read off from simplicity of the Kac module at the antidominant
// representative. gl(m|n) has no Weyl support here; typicality is constant
// on dot-orbits there, so lambda itself is tested.
inline bool verma_homs_all_injective(const AlgebraDescriptor& a, const Weight& lambda) {
  switch (a.kind) {
    case Kind::PE:
      require_integral(a, lambda);
      return true;
    case Kind::OSP2:
      return is_typical(a, orbit_extreme(a, lambda, OrbitEnd::antidominant).weight);
    case Kind::GLmn:
      if (!is_integral(a, lambda) || !lambda.all_integer()) throw not_integral("weight " + render(lambda) + " is not integral");
      return is_typical(a, lambda);
    case Kind::GL: break;
  }
  throw invalid_parameter("embedding criterion needs a superalgebra");
}

// Covering pairs (lower, upper) of ↑ on the dot-orbit of lambda.
struct OrbitGraph {
  std::vector<Weight> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline OrbitGraph up_arrow_hasse(const AlgebraDescriptor& a, const Weight& lambda) {
  require_integral(a, lambda);
  OrbitGraph g;
  g.nodes = dot_orbit(a, lambda);
  const std::size_t k = g.nodes.size();
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) le[i][j] = up_arrow(a, g.nodes[i], g.nodes[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k && cover; ++m)
        if (m != i && m != j && le[i][m] && le[m][j]) cover = false;
      if (cover) g.edges.emplace_back(i, j);
    }
  return g;
}

}  // namespace supero

#endif

#ifndef SUPERO_ORACLE_HPP
#define SUPERO_ORACLE_HPP

// Brute-force computations on weight-truncated modules: Verma, Kac and
// costandard modules, singular vectors, Hom spaces from simple modules,
// composition multiplicities and odd homology probes.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "module.hpp"
#include "superalgebra.hpp"
#include "weyl.hpp"

namespace supero {

// Highest weight label -> multiplicity, ordered by weight.
using SimpleMultiset = std::map<Weight, int>;

struct OracleLimits {
  std::size_t max_basis = 400000;
  Rational max_depth = 80;
};

inline OracleLimits& oracle_limits() {
  static OracleLimits limits;
  return limits;
}

// Matrix realizations are built once per algebra.
inline std::shared_ptr<const LieSuperalgebra> algebra_of(const AlgebraDescriptor& a) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const LieSuperalgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[a.name()];
  if (!slot) slot = realize(a);
  return slot;
}

namespace detail {

inline std::vector<int> select(const LieSuperalgebra& g, const std::function<bool(const BasisElement&)>& pred) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (pred(g[i])) out.push_back(static_cast<int>(i));
  return out;
}

inline bool even_lowering(const BasisElement& b) { return b.parity == 0 && !b.cartan && sgn(b.height) < 0; }
inline bool even_raising(const BasisElement& b) { return b.parity == 0 && !b.cartan && sgn(b.height) > 0; }

inline void check_depth(const Rational& depth) {
  if (sgn(depth) < 0) throw invalid_parameter("negative depth");
  if (depth > oracle_limits().max_depth) throw resource_exceeded("depth " + to_string(depth) + " exceeds the cap of " + to_string(oracle_limits().max_depth));
}

inline TruncatedModule checked(TruncatedModule m) {
  check_relations(m);
  return m;
}

// Largest height of a generator; queries keep this much room below them.
inline Rational margin(const LieSuperalgebra& g) {
  Rational h;
  for (const auto& b : g.basis())
    if (abs(b.height) > h) h = abs(b.height);
  return h;
}

inline bool has_odd(const TruncatedModule& m) {
  for (std::size_t y = 0; y < m.alg->dim(); ++y)
    if (m.defined[y] && (*m.alg)[y].parity == 1) return true;
  return false;
}

}  // namespace detail

inline Rational generator_margin(const AlgebraDescriptor& a) { return detail::margin(*algebra_of(a)); }

// Δ0(λ) over g0, or the Verma module of gl(n).
inline TruncatedModule build_verma_even(const AlgebraDescriptor& a, const Weight& lambda, const Rational& depth) {
  detail::check_depth(depth);
  auto g = algebra_of(a);
  auto seed = one_dim_module(g, lambda, detail::select(*g, [](const BasisElement& b) { return b.cartan || detail::even_raising(b); }));
  return detail::checked(induce(seed, detail::select(*g, detail::even_lowering), depth, "Verma0", oracle_limits().max_basis));
}

// Δ(λ) = U(g) ⊗ C_λ over the Borel h ⊕ n0+ ⊕ g1; the even Verma module for gl(n).
inline TruncatedModule build_verma(const AlgebraDescriptor& a, const Weight& lambda, const Rational& depth) {
  if (!a.super()) return build_verma_even(a, lambda, depth);
  detail::check_depth(depth);
  auto g = algebra_of(a);
  auto seed = one_dim_module(g, lambda, detail::select(*g, [](const BasisElement& b) { return b.cartan || detail::even_raising(b) || b.grade == 1; }));
  auto comp = detail::select(*g, [](const BasisElement& b) { return b.grade == -1 || detail::even_lowering(b); });
  return detail::checked(induce(seed, comp, depth, "Verma", oracle_limits().max_basis));
}

inline TruncatedModule build_verma_pe(const AlgebraDescriptor& a, const Weight& lambda, const Rational& depth) {
  if (a.kind != Kind::PE) throw invalid_parameter("build_verma_pe needs pe(n)");
  if (a.n > 3) throw unsupported("pe Verma modules are built for n <= 3");
  return build_verma(a, lambda, depth);
}

// L0(λ) = Δ0(λ)/rad over g0 ⊕ g1 with g1 acting by zero.
inline TruncatedModule build_simple_even(const AlgebraDescriptor& a, const Weight& lambda, const Rational& depth) {
  auto g = algebra_of(a);
  auto d0 = build_verma_even(a, lambda, depth);
  auto l0 = quotient(d0, radical(d0));
  set_zero_action(l0, detail::select(*g, [](const BasisElement& b) { return b.grade == 1; }));
  l0.tag = "Simple0";
  return l0;
}

// Whether L0(λ) is finite dimensional: <λ, α^vee> is a nonnegative integer
// for every simple even root.
inline bool even_simple_is_finite(const AlgebraDescriptor& a, const Weight& lambda) {
  for (const auto& r : a.simple_even) {
    Rational c = coroot_pairing(a, lambda, r);
    if (!is_integer(c) || sgn(c) < 0) return false;
  }
  return true;
}

// Lowest height among the weights of the finite-dimensional L0(λ): the Weyl
// group orbit of λ has its lowest point at w0 λ.
inline Rational finite_simple_depth(const AlgebraDescriptor& a, const Weight& lambda) {
  auto g = algebra_of(a);
  Rational lo = g->height(lambda);
  if (a.kind == Kind::GLmn && a.m == 1 && a.n == 1) return 0;
  for (const auto& w : all_elements(weyl_family(a), weyl_rank(a))) {
    lo = std::min(lo, g->height(dot(a, w, lambda - a.rho0) + a.rho0));
  }
  return g->height(lambda) - lo;
}

// Total height of Λ^top g-1.
inline Rational odd_lowering_depth(const AlgebraDescriptor& a) {
  auto g = algebra_of(a);
  Rational d;
  for (const auto& b : g->basis())
    if (b.grade == -1) d -= b.height;
  return d;
}

// K(λ) = Ind_{g0+g1}^g L0(λ). With `depth` absent L0(λ) must be finite
// dimensional and the whole module is built.
inline TruncatedModule build_kac(const AlgebraDescriptor& a, const Weight& lambda, std::optional<Rational> depth = std::nullopt) {
  if (!(a.kind == Kind::OSP2 && a.n == 1) && !(a.kind == Kind::GLmn && a.m == 1 && a.n == 1)) {
    throw unsupported("Kac modules are built for gl(1|1) and osp(2|2)");
  }
  const bool finite = !depth;
  if (finite) {
    if (!even_simple_is_finite(a, lambda)) throw precondition_failed("L0(" + render(lambda) + ") is not finite dimensional");
    depth = finite_simple_depth(a, lambda) + odd_lowering_depth(a);
  }
  detail::check_depth(*depth);
  auto g = algebra_of(a);
  auto seed = build_simple_even(a, lambda, *depth);
  auto comp = detail::select(*g, [](const BasisElement& b) { return b.grade == -1; });
  auto k = induce(seed, comp, *depth, "Kac", oracle_limits().max_basis);
  if (finite) mark_complete(k);
  return detail::checked(std::move(k));
}

// ξ+: sum of the weights of g1.
inline Weight odd_raising_sum(const AlgebraDescriptor& a) {
  auto g = algebra_of(a);
  Weight s = a.zero();
  for (const auto& b : g->basis())
    if (b.grade == 1) s += b.weight;
  return s;
}

// ∇(λ) = Ind_{g0+g-1}^g ∇0(λ - ξ+), with ∇0 the transpose-twisted dual of
// Δ0 and g-1 acting by zero on it. The seed is built deeper by the height of
// ξ+ so that every retained weight of the result sees a complete seed.
inline TruncatedModule build_costandard_pe(const AlgebraDescriptor& a, const Weight& lambda, const Rational& depth) {
  if (a.kind != Kind::PE) throw invalid_parameter("build_costandard_pe needs pe(n)");
  if (a.n > 2) throw unsupported("pe costandard modules are built for n <= 2");
  auto g = algebra_of(a);
  const Weight xi = odd_raising_sum(a);
  const Rational extra = g->height(xi);
  detail::check_depth(depth + extra);
  auto d0 = build_verma_even(a, lambda - xi, depth + extra);
  auto seed = twisted_dual(d0);
  check_relations(seed);
  set_zero_action(seed, detail::select(*g, [](const BasisElement& b) { return b.grade == -1; }));
  auto comp = detail::select(*g, [](const BasisElement& b) { return b.grade == 1; });
  auto m = induce(seed, comp, depth, "Costandard", oracle_limits().max_basis);
  if (!(m.top == lambda)) throw precondition_failed("costandard module has the wrong top weight");
  return detail::checked(std::move(m));
}

// Dot orbit, with the trivial Weyl group of gl(1|1).
inline std::vector<Weight> linkage_orbit(const AlgebraDescriptor& a, const Weight& l) {
  if (a.kind == Kind::GLmn) {
    if (a.m == 1 && a.n == 1) return {l};
    throw unsupported("no Weyl group support for " + a.name());
  }
  return dot_orbit(a, l);
}

// {w.(base + S)} for S a subset sum of `shifts`: a superset of the highest
// weights of the composition factors of any module whose restriction to g0
// is Λ(span of shifts) ⊗ (a module with composition factors in W.base).
inline std::vector<Weight> candidate_weights(const AlgebraDescriptor& a, const Weight& base, const std::vector<Weight>& shifts) {
  std::set<Weight> sums{a.zero()};
  for (const auto& s : shifts) {
    std::set<Weight> next = sums;
    for (const auto& x : sums) next.insert(x + s);
    sums = std::move(next);
  }
  std::set<Weight> out;
  for (const auto& s : sums)
    for (const auto& w : linkage_orbit(a, base + s)) out.insert(w);
  return {out.begin(), out.end()};
}

inline std::vector<Weight> grade_weights(const AlgebraDescriptor& a, int grade) {
  auto g = algebra_of(a);
  std::vector<Weight> out;
  for (const auto& b : g->basis())
    if (b.grade == grade && b.parity == 1) out.push_back(b.weight);
  return out;
}

// Candidates for Δ(λ), its quotients and K(λ); the dot orbit for gl(n).
inline std::vector<Weight> verma_candidates(const AlgebraDescriptor& a, const Weight& lambda) {
  return candidate_weights(a, lambda, a.super() ? grade_weights(a, -1) : std::vector<Weight>{});
}

inline std::vector<Weight> costandard_candidates(const AlgebraDescriptor& a, const Weight& lambda) {
  return candidate_weights(a, lambda - odd_raising_sum(a), grade_weights(a, 1));
}

// Candidates at depth 0..depth_bound below the top of m; throws if one lies
// below the band.
inline std::vector<Weight> candidates_in_band(const TruncatedModule& m, const std::vector<Weight>& cands) {
  std::vector<Weight> out;
  for (const auto& c : cands) {
    Rational d = m.depth_of(c);
    if (sgn(d) < 0) continue;
    if (d > m.depth_bound) {
      if (m.complete) continue;
      throw band_violation("candidate weight " + render(c) + " lies below the band of " + m.tag);
    }
    out.push_back(c);
  }
  return out;
}

// Deepest candidate below the top weight.
inline Rational candidate_depth(const AlgebraDescriptor& a, const Weight& top, const std::vector<Weight>& cands) {
  auto g = algebra_of(a);
  Rational d;
  for (const auto& c : cands) d = std::max(d, Rational(g->height(top) - g->height(c)));
  return d;
}

namespace detail {

// Images word . K in m for every basis vector of a Verma-type module `src`
// (one-dimensional seed), memoized over word suffixes.
class WordImages {
 public:
  WordImages(const TruncatedModule& m, const Matrix& k, int base) : m_(m), k_(k), base_(base) {}

  // (weight index in m or kZero, matrix dims x k)
  std::pair<int, Matrix> image(const std::vector<int>& word) { return run(word, 0); }

 private:
  std::pair<int, Matrix> run(const std::vector<int>& word, std::size_t from) {
    if (from == word.size()) return {base_, k_};
    std::vector<int> key(word.begin() + static_cast<long>(from), word.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto [w, v] = run(word, from + 1);
    std::pair<int, Matrix> out{kZero, Matrix()};
    if (w >= 0) {
      const Action& a = m_.action[static_cast<std::size_t>(word[from])][static_cast<std::size_t>(w)];
      if (a.target == kOutside) throw band_violation("word image leaves the band of " + m_.tag);
      if (a.target >= 0) out = {a.target, a.m * v};
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  const TruncatedModule& m_;
  Matrix k_;
  int base_;
  std::map<std::vector<int>, std::pair<int, Matrix>> memo_;
};

}  // namespace detail

// dim Hom(L(ν), Q) for the candidate ν, using only the candidates in `band`
// (all composition factor weights of Q) to test the radical of Δ(ν).
inline int hom_from_simple(const TruncatedModule& q, const Weight& nu, const std::vector<Weight>& band) {
  const auto& a = q.alg->descriptor();
  const int qi = q.find(nu);
  if (qi < 0) return 0;
  Matrix k = singular_vectors(q, nu);
  if (k.cols() == 0) return 0;
  std::vector<Weight> below;
  Rational depth;
  for (const auto& x : band) {
    if (x == nu) continue;
    Rational d = q.alg->height(nu) - q.alg->height(x);
    if (sgn(d) <= 0) continue;
    below.push_back(x);
    depth = std::max(depth, d);
  }
  if (below.empty()) return static_cast<int>(k.cols());
  auto dv = detail::has_odd(q) ? build_verma(a, nu, depth) : build_verma_even(a, nu, depth);
  auto rad = radical(dv);
  detail::WordImages img(q, k, qi);
  Matrix constraints(0, k.cols());
  for (const auto& x : below) {
    const int xi = dv.find(x);
    if (xi < 0 || rad[static_cast<std::size_t>(xi)].cols() == 0) continue;
    const int target = q.find(x);
    if (target < 0) {
      if (q.locate(x) == kOutside) throw band_violation("weight " + render(x) + " outside the band");
      continue;
    }
    const auto& words = dv.words[static_cast<std::size_t>(xi)];
    std::vector<Matrix> images;
    for (const auto& w : words) {
      auto [t, mat] = img.image(w);
      images.push_back(t == target ? mat : Matrix(q.dims[static_cast<std::size_t>(target)], k.cols()));
    }
    const Matrix& r = rad[static_cast<std::size_t>(xi)];
    for (std::size_t c = 0; c < r.cols(); ++c) {
      Matrix sum(q.dims[static_cast<std::size_t>(target)], k.cols());
      for (std::size_t b = 0; b < words.size(); ++b) {
        if (sgn(r(b, c)) == 0) continue;
        Matrix t = images[b];
        t *= r(b, c);
        sum += t;
      }
      constraints = Matrix::vstack(constraints, sum);
    }
  }
  return static_cast<int>(k.cols() - rank(constraints));
}

// Socle of q, given a superset of its composition factor highest weights.
inline SimpleMultiset socle_constituents(const TruncatedModule& q, const std::vector<Weight>& cands) {
  auto band = candidates_in_band(q, cands);
  SimpleMultiset out;
  for (const auto& nu : band) {
    int d = hom_from_simple(q, nu, band);
    if (d > 0) out[nu] = d;
  }
  return out;
}

// Δ(λ) (or Δ0(λ) when `even`) modulo the image of Δ(γ), built deep enough to
// hold every candidate of λ. Requires a one-dimensional Hom space.
inline TruncatedModule verma_quotient(const AlgebraDescriptor& a, const Weight& lambda, const Weight& gamma, bool even, const std::vector<Weight>& cands) {
  auto g = algebra_of(a);
  Rational depth = candidate_depth(a, lambda, cands) + detail::margin(*g);
  auto m = even ? build_verma_even(a, lambda, depth) : build_verma(a, lambda, depth);
  if (sgn(m.depth_of(gamma)) < 0) throw precondition_failed("no map from the Verma module of " + render(gamma));
  Matrix sv = singular_vectors(m, gamma);
  if (sv.cols() != 1) throw precondition_failed("Hom space from the Verma module of " + render(gamma) + " has dimension " + std::to_string(sv.cols()));
  auto sub = submodule_generated(m, {{m.find(gamma), sv.column(0)}});
  return quotient(m, sub);
}

// soc(Δ(λ)/Δ(γ)) by direct computation.
inline SimpleMultiset socle_of_verma_quotient(const AlgebraDescriptor& a, const Weight& lambda, const Weight& gamma, bool even = false) {
  auto cands = even ? linkage_orbit(a, lambda) : verma_candidates(a, lambda);
  auto q = verma_quotient(a, lambda, gamma, even || !a.super(), cands);
  return socle_constituents(q, cands);
}

inline SimpleMultiset socle_of_verma(const AlgebraDescriptor& a, const Weight& lambda) {
  auto cands = verma_candidates(a, lambda);
  auto m = build_verma(a, lambda, candidate_depth(a, lambda, cands) + generator_margin(a));
  return socle_constituents(m, cands);
}

// dim of singular vectors of weight μ in Δ(λ) (Δ0 for gl(n)).
inline int hom_dim_oracle(const AlgebraDescriptor& a, const Weight& mu, const Weight& lambda) {
  a.check(mu);
  auto g = algebra_of(a);
  Rational d = g->height(lambda) - g->height(mu);
  if (sgn(d) < 0) return 0;
  auto m = build_verma(a, lambda, d + detail::margin(*g));
  return static_cast<int>(singular_vectors(m, mu).cols());
}

// Characters of simple modules L(ν) = Δ(ν)/rad within a band.
inline std::map<Weight, std::size_t> simple_character(const AlgebraDescriptor& a, const Weight& nu, const Rational& depth, bool even) {
  auto m = even ? build_verma_even(a, nu, depth) : build_verma(a, nu, depth);
  auto rad = radical(m);
  std::map<Weight, std::size_t> ch;
  for (std::size_t w = 0; w < m.weights.size(); ++w) {
    std::size_t d = m.dims[w] - rad[w].cols();
    if (d) ch[m.weights[w]] = d;
  }
  return ch;
}

// Composition multiplicities of m by peeling simple characters from the top.
// Every composition factor must have its highest weight among `cands`.
inline SimpleMultiset composition_multiplicities(const TruncatedModule& m, const std::vector<Weight>& cands) {
  const auto& a = m.alg->descriptor();
  const bool even = !detail::has_odd(m);
  auto band = candidates_in_band(m, cands);
  std::set<Weight> allowed(band.begin(), band.end());
  std::map<Weight, long> ch;
  for (std::size_t w = 0; w < m.weights.size(); ++w)
    if (m.dims[w]) ch[m.weights[w]] = static_cast<long>(m.dims[w]);
  SimpleMultiset out;
  for (int w : m.by_depth()) {
    const Weight& x = m.weights[static_cast<std::size_t>(w)];
    long c = ch[x];
    if (c == 0) continue;
    if (c < 0) throw precondition_failed("negative character coefficient at " + render(x));
    if (!allowed.count(x)) throw precondition_failed("composition factor " + render(x) + " is not a candidate");
    out[x] = static_cast<int>(c);
    for (const auto& [y, d] : simple_character(a, x, m.depth_bound - m.depth_of(x), even)) ch[y] -= c * static_cast<long>(d);
  }
  return out;
}

inline bool kac_is_simple(const AlgebraDescriptor& a, const Weight& lambda) {
  auto cands = verma_candidates(a, lambda);
  const bool finite = even_simple_is_finite(a, lambda);
  auto k = finite ? build_kac(a, lambda) : build_kac(a, lambda, candidate_depth(a, lambda, cands) + generator_margin(a));
  for (const auto& c : candidates_in_band(k, cands))
    if (!(c == lambda) && k.find(c) >= 0 && singular_vectors(k, c).cols() > 0) return false;
  return true;
}

// [K(μ) : L(ν)] for all ν.
inline SimpleMultiset kac_composition(const AlgebraDescriptor& a, const Weight& mu) {
  auto cands = verma_candidates(a, mu);
  const bool finite = even_simple_is_finite(a, mu);
  auto k = finite ? build_kac(a, mu) : build_kac(a, mu, candidate_depth(a, mu, cands) + generator_margin(a));
  return composition_multiplicities(k, cands);
}

// dim(ker x ∩ M_ν) - rank(x : M_{ν - wt x} -> M_ν).
inline int x_homology_probe(const TruncatedModule& m, int x, const Weight& nu) {
  const auto& g = *m.alg;
  const auto& b = g[static_cast<std::size_t>(x)];
  if (b.parity != 1) throw invalid_parameter(b.name + " is not odd");
  if (!g.bracket(static_cast<std::size_t>(x), static_cast<std::size_t>(x)).empty()) throw invalid_parameter("[x,x] is nonzero for " + b.name);
  if (!m.defined[static_cast<std::size_t>(x)]) throw precondition_failed(b.name + " does not act on " + m.tag);
  const int wi = m.locate(nu);
  if (wi == kOutside) throw band_violation("probe weight " + render(nu) + " outside the band");
  if (wi == kZero) return 0;
  const Action& out = m.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(wi)];
  if (out.target == kOutside) throw band_violation("probe target outside the band");
  const std::size_t dim = m.dims[static_cast<std::size_t>(wi)];
  const std::size_t ker = out.target >= 0 ? nullspace(out.m).cols() : dim;
  const int src = m.locate(nu - b.weight);
  if (src == kOutside) throw band_violation("probe source outside the band");
  std::size_t im = 0;
  if (src >= 0) {
    const Action& in = m.action[static_cast<std::size_t>(x)][static_cast<std::size_t>(src)];
    if (in.target == static_cast<int>(wi)) im = rank(in.m);
  }
  return static_cast<int>(ker) - static_cast<int>(im);
}

// Weight of the vector of L(μ) killed by n0+ and g-1.
inline Weight br_highest_weight_of_simple_pe(const AlgebraDescriptor& a, const Weight& mu) {
  if (a.kind != Kind::PE) throw invalid_parameter("needs pe(n)");
  if (a.n > 3) throw unsupported("unsupported rank: pe(" + std::to_string(a.n) + ")");
  require_integral(a, mu);
  auto g = algebra_of(a);
  const Rational span = odd_lowering_depth(a);
  auto m = build_verma(a, mu, span + detail::margin(*g));
  auto l = quotient(m, radical(m));
  auto killers = detail::select(*g, [](const BasisElement& b) { return detail::even_raising(b) || b.grade == -1; });
  std::vector<Weight> found;
  for (std::size_t w = 0; w < l.weights.size(); ++w) {
    if (l.dims[w] == 0 || l.depths[w] > span) continue;
    Matrix stack(0, l.dims[w]);
    for (int y : killers) {
      const Action& act = l.action[static_cast<std::size_t>(y)][w];
      if (act.target == kOutside) throw band_violation("b^r scan left the band");
      if (act.target >= 0) stack = Matrix::vstack(stack, act.m);
    }
    const std::size_t k = nullspace(stack).cols();
    if (k > 1) throw precondition_failed("b^r-highest weight space is not one-dimensional");
    if (k == 1) found.push_back(l.weights[w]);
  }
  if (found.size() != 1) throw precondition_failed("expected a unique b^r-highest weight for L(" + render(mu) + ")");
  return found.front();
}

// Images of the basis of Δ(ν) under the map sending its top vector to v in
// m; one matrix per weight space of Δ(ν) (columns are basis vectors).
inline std::vector<std::pair<Weight, Matrix>> verma_map_matrices(const TruncatedModule& m, const Weight& nu, const std::vector<Rational>& v, const Rational& depth) {
  const auto& a = m.alg->descriptor();
  auto src = detail::has_odd(m) ? build_verma(a, nu, depth) : build_verma_even(a, nu, depth);
  const int base = m.find(nu);
  if (base < 0) throw precondition_failed("weight " + render(nu) + " not present");
  detail::WordImages img(m, Matrix::from_columns({v}, m.dims[static_cast<std::size_t>(base)]), base);
  std::vector<std::pair<Weight, Matrix>> out;
  for (std::size_t w = 0; w < src.weights.size(); ++w) {
    const int t = m.locate(src.weights[w]);
    if (t == kOutside) throw band_violation("map image leaves the band");
    const std::size_t rows = t >= 0 ? m.dims[static_cast<std::size_t>(t)] : 0;
    Matrix cols(rows, 0);
    for (const auto& word : src.words[w]) {
      auto [ti, mat] = img.image(word);
      cols = Matrix::hstack(cols, ti == t && t >= 0 ? mat : Matrix(rows, 1));
    }
    out.emplace_back(src.weights[w], std::move(cols));
  }
  return out;
}

// Whether every column of `vecs` (a basis of M_w) lies in the span of basis
// vectors whose PBW word has no odd letter.
inline bool in_even_layer(const TruncatedModule& m, const Weight& w, const Matrix& vecs) {
  const int wi = m.find(w);
  if (wi < 0) return vecs.cols() == 0;
  const auto& words = m.words[static_cast<std::size_t>(wi)];
  for (std::size_t b = 0; b < words.size(); ++b) {
    bool odd = std::any_of(words[b].begin(), words[b].end(), [&](int y) { return (*m.alg)[static_cast<std::size_t>(y)].parity == 1; });
    if (!odd) continue;
    for (std::size_t c = 0; c < vecs.cols(); ++c)
      if (sgn(vecs(b, c)) != 0) return false;
  }
  return true;
}

}  // namespace supero

#endif

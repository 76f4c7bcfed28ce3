#ifndef SUPERO_MODULE_HPP
#define SUPERO_MODULE_HPP

// Weight-truncated modules with exact generator actions, and the induced
// module builder that produces Verma, Kac and costandard modules from a seed.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "superalgebra.hpp"
#include "weight.hpp"

namespace supero {

// Action target markers besides a weight-space index.
inline constexpr int kOutside = -1;  // target weight lies beyond the depth bound
inline constexpr int kZero = -2;     // target weight space is zero

struct Action {
  int target = kZero;
  Matrix m;  // dims[target] x dims[source] when target >= 0
};

class TruncatedModule {
 public:
  std::shared_ptr<const LieSuperalgebra> alg;
  std::string tag;
  Weight top;
  Rational depth_bound;
  bool complete = false;  // nothing lies below the band (finite-dimensional modules)

  std::vector<Weight> weights;
  std::vector<Rational> depths;
  std::vector<std::size_t> dims;
  std::map<Weight, int> index;

  std::vector<bool> defined;                // per basis element of alg
  std::vector<std::vector<Action>> action;  // [generator][weight index]

  // For induced modules: the PBW word (basis indices, leftmost first) and
  // seed vector of every basis vector.
  std::vector<std::vector<std::vector<int>>> words;
  std::vector<std::vector<int>> seeds;

  Rational depth_of(const Weight& w) const { return alg->height(top) - alg->height(w); }

  int find(const Weight& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }

  // Index of w, or kZero / kOutside.
  int locate(const Weight& w) const {
    Rational d = depth_of(w);
    if (sgn(d) < 0) return kZero;
    if (d > depth_bound) return complete ? kZero : kOutside;
    int i = find(w);
    return i < 0 ? kZero : i;
  }

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
  }

  std::size_t dim_at(const Weight& w) const {
    int i = find(w);
    return i < 0 ? 0 : dims[static_cast<std::size_t>(i)];
  }

  int add_weight(const Weight& w, std::size_t dim) {
    int i = static_cast<int>(weights.size());
    weights.push_back(w);
    depths.push_back(depth_of(w));
    dims.push_back(dim);
    index.emplace(w, i);
    return i;
  }

  // Positive / negative height generators of the domain.
  std::vector<int> raising() const { return by_sign(1); }
  std::vector<int> lowering() const { return by_sign(-1); }

  // Weight indices sorted by increasing depth.
  std::vector<int> by_depth() const {
    std::vector<int> ord(weights.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return depths[static_cast<std::size_t>(a)] < depths[static_cast<std::size_t>(b)]; });
    return ord;
  }

 private:
  std::vector<int> by_sign(int s) const {
    std::vector<int> out;
    for (std::size_t g = 0; g < alg->dim(); ++g)
      if (defined[g] && sgn((*alg)[g].height) == s) out.push_back(static_cast<int>(g));
    return out;
  }
};

// Vectors as columns, one block per weight space.
using GradedSubspace = std::vector<Matrix>;

// One-dimensional module of weight lambda over the generators in `domain`:
// Cartan elements act by lambda, everything else by zero.
inline TruncatedModule one_dim_module(std::shared_ptr<const LieSuperalgebra> alg, const Weight& lambda, const std::vector<int>& domain) {
  alg->descriptor().check(lambda);
  TruncatedModule m;
  m.alg = alg;
  m.tag = "OneDim";
  m.top = lambda;
  m.depth_bound = 0;
  m.add_weight(lambda, 1);
  m.defined.assign(alg->dim(), false);
  m.action.assign(alg->dim(), std::vector<Action>(1));
  for (int g : domain) {
    const auto& b = (*alg)[static_cast<std::size_t>(g)];
    m.defined[static_cast<std::size_t>(g)] = true;
    if (b.cartan) {
      // H_k acts by coordinate k.
      for (std::size_t k = 0; k < alg->cartan_count(); ++k)
        if (alg->cartan(k) == static_cast<std::size_t>(g)) {
          Matrix a(1, 1);
          a(0, 0) = lambda[k];
          m.action[static_cast<std::size_t>(g)][0] = {0, a};
        }
    } else if (!b.weight.is_zero()) {
      m.action[static_cast<std::size_t>(g)][0] = {kZero, {}};
    } else {
      throw precondition_failed("zero-weight non-Cartan generator");
    }
  }
  return m;
}

namespace detail {

struct InducedBuilder {
  const LieSuperalgebra& g;
  const TruncatedModule& seed;
  std::vector<int> order;        // complement basis indices in PBW order
  std::vector<int> pos;          // basis index -> position in order, or -1
  std::vector<int> seed_offset;  // per seed weight index
  std::vector<std::pair<int, int>> seed_of;  // global seed id -> (weight idx, k)

  std::map<std::pair<std::vector<int>, int>, int> state_id;
  std::vector<std::pair<std::vector<int>, int>> states;
  std::map<std::pair<int, int>, SparseVec> memo;

  InducedBuilder(const LieSuperalgebra& alg, const TruncatedModule& s, const std::vector<int>& complement)
      : g(alg), seed(s), order(complement), pos(alg.dim(), -1) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& x = g[static_cast<std::size_t>(a)];
      const auto& y = g[static_cast<std::size_t>(b)];
      if (x.parity != y.parity) return x.parity > y.parity;
      if (x.height != y.height) return x.height > y.height;
      return a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    int off = 0;
    for (std::size_t w = 0; w < seed.weights.size(); ++w) {
      seed_offset.push_back(off);
      for (std::size_t k = 0; k < seed.dims[w]; ++k) seed_of.emplace_back(static_cast<int>(w), static_cast<int>(k));
      off += static_cast<int>(seed.dims[w]);
    }
  }

  int intern(std::vector<int> word, int sid) {
    auto key = std::make_pair(std::move(word), sid);
    auto it = state_id.find(key);
    if (it != state_id.end()) return it->second;
    int id = static_cast<int>(states.size());
    states.push_back(key);
    state_id.emplace(std::move(key), id);
    return id;
  }

  static void axpy(std::map<int, Rational>& acc, const Rational& c, const SparseVec& v) {
    for (const auto& [k, x] : v) {
      auto& slot = acc[k];
      slot += c * x;
    }
  }

  static SparseVec finish(const std::map<int, Rational>& acc) {
    SparseVec out;
    for (const auto& [k, x] : acc)
      if (sgn(x) != 0) out.emplace_back(k, x);
    return out;
  }

  // y . (word ⊗ seed)
  SparseVec act(int y, int sid) {
    auto key = std::make_pair(y, sid);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SparseVec result = compute(y, sid);
    memo.emplace(key, result);
    return result;
  }

  SparseVec compute(int y, int sid) {
    const auto word = states[static_cast<std::size_t>(sid)].first;
    const int seed_id = states[static_cast<std::size_t>(sid)].second;
    const int py = pos[static_cast<std::size_t>(y)];
    const int ypar = g[static_cast<std::size_t>(y)].parity;
    if (word.empty()) {
      if (py >= 0) return {{intern({py}, seed_id), Rational(1)}};
      if (!seed.defined[static_cast<std::size_t>(y)]) throw precondition_failed("generator " + g[static_cast<std::size_t>(y)].name + " not defined on seed");
      auto [w, k] = seed_of[static_cast<std::size_t>(seed_id)];
      const Action& a = seed.action[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)];
      if (a.target == kZero) return {};
      if (a.target == kOutside) throw band_violation("seed module too shallow for induction");
      SparseVec out;
      for (std::size_t r = 0; r < a.m.rows(); ++r) {
        const Rational& c = a.m(r, static_cast<std::size_t>(k));
        if (sgn(c) != 0) out.emplace_back(intern({}, seed_offset[static_cast<std::size_t>(a.target)] + static_cast<int>(r)), c);
      }
      return out;
    }
    const int c1 = word.front();
    const int cy = order[static_cast<std::size_t>(c1)];
    std::vector<int> rest(word.begin() + 1, word.end());
    if (py >= 0 && (py < c1 || (py == c1 && ypar == 0))) {
      std::vector<int> w2;
      w2.reserve(word.size() + 1);
      w2.push_back(py);
      w2.insert(w2.end(), word.begin(), word.end());
      return {{intern(std::move(w2), seed_id), Rational(1)}};
    }
    const int rid = intern(rest, seed_id);
    std::map<int, Rational> acc;
    if (py == c1) {
      // y odd: y y = [y, y] / 2.
      for (const auto& [z, c] : g.bracket(static_cast<std::size_t>(y), static_cast<std::size_t>(y))) axpy(acc, c / 2, act(z, rid));
      return finish(acc);
    }
    // y c1 = (-1)^{|y||c1|} c1 y + [y, c1]
    const int sign = (ypar && g[static_cast<std::size_t>(cy)].parity) ? -1 : 1;
    SparseVec inner = act(y, rid);
    for (const auto& [t, c] : inner) axpy(acc, Rational(sign) * c, act(cy, t));
    for (const auto& [z, c] : g.bracket(static_cast<std::size_t>(y), static_cast<std::size_t>(cy))) axpy(acc, c, act(z, rid));
    return finish(acc);
  }
};

}  // namespace detail

// U(g') ⊗_{U(s)} seed, where g' is spanned by `complement` together with the
// seed's domain s. Basis: ordered PBW words in the complement (odd letters
// first and never repeated) times seed vectors, truncated at `depth` below
// the top weight. A nonzero `max_basis` caps the number of basis vectors.
inline TruncatedModule induce(const TruncatedModule& seed, const std::vector<int>& complement, const Rational& depth, std::string tag, std::size_t max_basis = 0) {
  const auto& g = *seed.alg;
  detail::InducedBuilder B(g, seed, complement);
  for (int c : complement) {
    if (seed.defined[static_cast<std::size_t>(c)]) throw precondition_failed("complement overlaps the seed domain");
    if (g[static_cast<std::size_t>(c)].parity == 0 && sgn(g[static_cast<std::size_t>(c)].height) >= 0) {
      throw precondition_failed("even complement generators must be lowering");
    }
  }
  TruncatedModule m;
  m.alg = seed.alg;
  m.tag = std::move(tag);
  m.top = seed.top;
  for (int c : complement)
    if (sgn(g[static_cast<std::size_t>(c)].height) > 0) m.top += g[static_cast<std::size_t>(c)].weight;
  m.depth_bound = depth;
  if (sgn(depth) < 0) throw invalid_parameter("negative depth");

  // Enumerate retained states: odd subsets, then even multisets, then seed vectors.
  const std::size_t nodd = static_cast<std::size_t>(std::count_if(B.order.begin(), B.order.end(), [&](int c) { return g[static_cast<std::size_t>(c)].parity == 1; }));
  std::map<Weight, std::vector<int>> by_weight;
  std::size_t count = 0;
  const Rational top_h = g.height(m.top);
  std::function<void(std::size_t, std::vector<int>&, Weight&)> rec_even;
  auto emit = [&](const std::vector<int>& word, const Weight& ww) {
    for (std::size_t w = 0; w < seed.weights.size(); ++w) {
      Weight total = ww + seed.weights[w];
      if (top_h - g.height(total) > depth) continue;
      if (sgn(top_h - g.height(total)) < 0) throw precondition_failed("induced module has weights above its top");
      for (std::size_t k = 0; k < seed.dims[w]; ++k) by_weight[total].push_back(B.intern(word, B.seed_offset[w] + static_cast<int>(k)));
      count += seed.dims[w];
      if (max_basis && count > max_basis) throw resource_exceeded(m.tag + " module exceeds the basis cap of " + std::to_string(max_basis));
    }
  };
  rec_even = [&](std::size_t from, std::vector<int>& word, Weight& ww) {
    emit(word, ww);
    for (std::size_t p = from; p < B.order.size(); ++p) {
      const auto& b = g[static_cast<std::size_t>(B.order[p])];
      ww += b.weight;
      // Seed vectors never lie above the seed's top, so this prunes safely.
      if (top_h - g.height(ww + seed.top) <= depth) {
        word.push_back(static_cast<int>(p));
        rec_even(p, word, ww);
        word.pop_back();
      }
      ww -= b.weight;
    }
  };
  for (unsigned mask = 0; mask < (1u << nodd); ++mask) {
    std::vector<int> word;
    Weight ww = Weight::zero(g.descriptor().basis);
    for (std::size_t p = 0; p < nodd; ++p)
      if (mask & (1u << p)) {
        word.push_back(static_cast<int>(p));
        ww += g[static_cast<std::size_t>(B.order[p])].weight;
      }
    rec_even(nodd, word, ww);
  }

  std::map<int, std::pair<int, int>> where;  // state id -> (weight idx, position)
  for (auto& [w, ids] : by_weight) {
    int wi = m.add_weight(w, ids.size());
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return B.states[static_cast<std::size_t>(a)] < B.states[static_cast<std::size_t>(b)]; });
    std::vector<std::vector<int>> ws;
    std::vector<int> ss;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      where[ids[k]] = {wi, static_cast<int>(k)};
      std::vector<int> letters;
      for (int p : B.states[static_cast<std::size_t>(ids[k])].first) letters.push_back(B.order[static_cast<std::size_t>(p)]);
      ws.push_back(std::move(letters));
      ss.push_back(B.states[static_cast<std::size_t>(ids[k])].second);
    }
    m.words.push_back(std::move(ws));
    m.seeds.push_back(std::move(ss));
  }

  m.defined.assign(g.dim(), false);
  for (std::size_t y = 0; y < g.dim(); ++y) m.defined[y] = seed.defined[y] || B.pos[y] >= 0;
  m.action.assign(g.dim(), std::vector<Action>(m.weights.size()));
  for (std::size_t y = 0; y < g.dim(); ++y) {
    if (!m.defined[y]) continue;
    for (std::size_t wi = 0; wi < m.weights.size(); ++wi) {
      const int t = m.locate(m.weights[wi] + g[y].weight);
      Action& a = m.action[y][wi];
      a.target = t;
      if (t < 0) continue;
      a.m = Matrix(m.dims[static_cast<std::size_t>(t)], m.dims[wi]);
      const auto& ids = by_weight[m.weights[wi]];
      for (std::size_t k = 0; k < ids.size(); ++k)
        for (const auto& [s, c] : B.act(static_cast<int>(y), ids[k])) {
          auto it = where.find(s);
          if (it == where.end() || it->second.first != t) throw precondition_failed("straightening produced an unretained state");
          a.m(static_cast<std::size_t>(it->second.second), k) += c;
        }
    }
  }
  return m;
}

// Declares that m has no weights below its band, e.g. a finite-dimensional
// module built in full.
inline void mark_complete(TruncatedModule& m) {
  m.complete = true;
  for (auto& row : m.action)
    for (auto& a : row)
      if (a.target == kOutside) a = {kZero, {}};
}

// Generators in `gens` become defined and act by zero.
inline void set_zero_action(TruncatedModule& m, const std::vector<int>& gens) {
  for (int g : gens) {
    m.defined[static_cast<std::size_t>(g)] = true;
    for (auto& a : m.action[static_cast<std::size_t>(g)]) a = {kZero, {}};
  }
}

// Basis index tau(x) and scalar with x^T = c * b_{tau(x)}, for the transpose
// anti-involution.
inline std::vector<std::pair<int, Rational>> transpose_map(const LieSuperalgebra& g) {
  std::vector<std::pair<int, Rational>> out(g.dim(), {-1, Rational(0)});
  for (std::size_t x = 0; x < g.dim(); ++x) {
    Matrix t = g[x].matrix.transpose();
    for (std::size_t y = 0; y < g.dim(); ++y) {
      const Matrix& b = g[y].matrix;
      Rational c;
      bool ok = true, set = false;
      for (std::size_t i = 0; i < b.rows() && ok; ++i)
        for (std::size_t j = 0; j < b.cols() && ok; ++j) {
          if (sgn(b(i, j)) == 0) {
            if (sgn(t(i, j)) != 0) ok = false;
            continue;
          }
          Rational r = t(i, j) / b(i, j);
          if (!set) {
            c = r;
            set = true;
          } else if (r != c) {
            ok = false;
          }
        }
      if (ok && set && sgn(c) != 0) {
        out[x] = {static_cast<int>(y), c};
        break;
      }
    }
  }
  return out;
}

// Twisted dual M^tau over the even generators: (x f)(v) = f(tau(x) v).
// Weight spaces are kept; each is identified with its dual through the
// dual basis.
inline TruncatedModule twisted_dual(const TruncatedModule& src) {
  const auto& g = *src.alg;
  const auto tau = transpose_map(g);
  TruncatedModule m = src;
  m.tag = "Dual(" + src.tag + ")";
  m.words.clear();
  m.seeds.clear();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    m.defined[x] = false;
    if (g[x].parity != 0 || tau[x].first < 0 || !src.defined[static_cast<std::size_t>(tau[x].first)]) continue;
    m.defined[x] = true;
    const std::size_t y = static_cast<std::size_t>(tau[x].first);
    for (std::size_t wi = 0; wi < m.weights.size(); ++wi) {
      const int t = src.locate(src.weights[wi] + g[x].weight);
      Action& a = m.action[x][wi];
      a.target = t;
      a.m = Matrix();
      if (t < 0) continue;
      const Action& back = src.action[y][static_cast<std::size_t>(t)];
      if (back.target != static_cast<int>(wi)) {
        if (back.target == kZero) {
          a.m = Matrix(src.dims[static_cast<std::size_t>(t)], src.dims[wi]);
          continue;
        }
        throw precondition_failed("twisted dual: inconsistent weights");
      }
      a.m = back.m.transpose();
      a.m *= tau[x].second;
    }
  }
  return m;
}

// Exact check of u(v b) - (-1)^{|u||v|} v(u b) = [u, v] b on every triple
// whose intermediate and final weights are retained. Returns the number of
// triples checked; throws on the first violation.
inline std::size_t check_relations(const TruncatedModule& m) {
  const auto& g = *m.alg;
  std::size_t checked = 0;
  auto apply = [&](int y, int w) -> std::pair<int, const Matrix*> {
    const Action& a = m.action[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)];
    return {a.target, &a.m};
  };
  for (std::size_t u = 0; u < g.dim(); ++u) {
    if (!m.defined[u]) continue;
    for (std::size_t v = u; v < g.dim(); ++v) {
      if (!m.defined[v]) continue;
      bool br_defined = true;
      for (const auto& [z, c] : g.bracket(u, v))
        if (!m.defined[static_cast<std::size_t>(z)]) br_defined = false;
      if (!br_defined) continue;
      const int sign = (g[u].parity && g[v].parity) ? -1 : 1;
      for (std::size_t w = 0; w < m.weights.size(); ++w) {
        if (m.dims[w] == 0) continue;
        const int t = m.locate(m.weights[w] + g[u].weight + g[v].weight);
        if (t < 0) continue;
        Matrix lhs(m.dims[static_cast<std::size_t>(t)], m.dims[w]);
        bool ok = true;
        auto path = [&](std::size_t first, std::size_t second, const Rational& coef) {
          auto [t1, a1] = apply(static_cast<int>(first), static_cast<int>(w));
          if (t1 == kOutside) {
            ok = false;
            return;
          }
          if (t1 == kZero) return;
          auto [t2, a2] = apply(static_cast<int>(second), t1);
          if (t2 == kOutside) {
            ok = false;
            return;
          }
          if (t2 == kZero) return;
          Matrix p = (*a2) * (*a1);
          p *= coef;
          lhs += p;
        };
        path(v, u, Rational(1));
        path(u, v, Rational(-sign));
        if (!ok) continue;
        Matrix rhs(m.dims[static_cast<std::size_t>(t)], m.dims[w]);
        for (const auto& [z, c] : g.bracket(u, v)) {
          auto [tz, az] = apply(z, static_cast<int>(w));
          if (tz == kOutside) {
            ok = false;
            break;
          }
          if (tz == kZero) continue;
          Matrix p = *az;
          p *= c;
          rhs += p;
        }
        if (!ok) continue;
        if (!(lhs == rhs)) {
          throw precondition_failed("relation [" + g[u].name + "," + g[v].name + "] fails on " + m.tag + " at weight " + render(m.weights[w]));
        }
        ++checked;
      }
    }
  }
  return checked;
}

// Quotient by a graded subspace (columns per weight index).
inline TruncatedModule quotient(const TruncatedModule& m, const GradedSubspace& sub) {
  TruncatedModule q = m;
  q.tag = "Quotient(" + m.tag + ")";
  q.words.clear();
  q.seeds.clear();
  std::vector<QuotientMaps> maps;
  for (std::size_t w = 0; w < m.weights.size(); ++w) {
    maps.push_back(quotient_maps(sub[w], m.dims[w]));
    q.dims[w] = maps.back().project.rows();
  }
  for (std::size_t y = 0; y < m.alg->dim(); ++y) {
    if (!m.defined[y]) continue;
    for (std::size_t w = 0; w < m.weights.size(); ++w) {
      Action& a = q.action[y][w];
      if (a.target < 0) continue;
      a.m = maps[static_cast<std::size_t>(a.target)].project * (m.action[y][w].m * maps[w].lift);
    }
  }
  return q;
}

inline GradedSubspace zero_subspace(const TruncatedModule& m) {
  GradedSubspace s;
  for (auto d : m.dims) s.emplace_back(d, 0);
  return s;
}

inline std::size_t subspace_dim(const GradedSubspace& s) {
  std::size_t t = 0;
  for (const auto& b : s) t += b.cols();
  return t;
}

namespace detail {

// Add columns of v to block w; returns the genuinely new directions.
inline Matrix extend(Matrix& block, const Matrix& v) {
  if (v.cols() == 0) return Matrix(block.rows(), 0);
  std::size_t before = block.cols();
  Matrix merged = column_basis(Matrix::hstack(block, v));
  if (merged.cols() == before) return Matrix(block.rows(), 0);
  block = merged;
  return v;
}

}  // namespace detail

// U(g) v for weight vectors v given as (weight index, column): close upward
// under raising generators, then downward under lowering generators. Lowering
// past the depth bound is dropped, which is exact inside the band.
inline GradedSubspace submodule_generated(const TruncatedModule& m, const std::vector<std::pair<int, std::vector<Rational>>>& gens) {
  GradedSubspace s = zero_subspace(m);
  auto close = [&](const std::vector<int>& ops, std::vector<std::pair<int, Matrix>> work) {
    while (!work.empty()) {
      auto [w, v] = std::move(work.back());
      work.pop_back();
      for (int y : ops) {
        const Action& a = m.action[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)];
        if (a.target < 0) continue;
        Matrix img = a.m * v;
        if (img.is_zero()) continue;
        Matrix fresh = detail::extend(s[static_cast<std::size_t>(a.target)], img);
        if (fresh.cols()) work.emplace_back(a.target, std::move(fresh));
      }
    }
  };
  std::vector<std::pair<int, Matrix>> work;
  for (const auto& [w, vec] : gens) {
    Matrix v = Matrix::from_columns({vec}, m.dims[static_cast<std::size_t>(w)]);
    Matrix fresh = detail::extend(s[static_cast<std::size_t>(w)], v);
    if (fresh.cols()) work.emplace_back(w, fresh);
  }
  close(m.raising(), work);
  work.clear();
  for (std::size_t w = 0; w < s.size(); ++w)
    if (s[w].cols()) work.emplace_back(static_cast<int>(w), s[w]);
  close(m.lowering(), work);
  return s;
}

// Maximal proper submodule of a module generated by its one-dimensional top
// weight space, computed from the top down.
inline GradedSubspace radical(const TruncatedModule& m) {
  GradedSubspace rad = zero_subspace(m);
  std::vector<Matrix> proj(m.weights.size());
  const auto up = m.raising();
  for (int w : m.by_depth()) {
    const std::size_t wi = static_cast<std::size_t>(w);
    if (m.dims[wi] == 0) {
      proj[wi] = Matrix(0, 0);
      continue;
    }
    if (m.weights[wi] == m.top) {
      if (m.dims[wi] != 1) throw precondition_failed("top weight space is not one-dimensional");
      proj[wi] = Matrix::identity(1);
      continue;
    }
    Matrix stack(0, m.dims[wi]);
    for (int y : up) {
      const Action& a = m.action[static_cast<std::size_t>(y)][wi];
      if (a.target < 0) continue;
      stack = Matrix::vstack(stack, proj[static_cast<std::size_t>(a.target)] * a.m);
    }
    rad[wi] = nullspace(stack);
    proj[wi] = quotient_maps(rad[wi], m.dims[wi]).project;
  }
  return rad;
}

// Vectors of M_w killed by every raising generator.
inline Matrix singular_vectors(const TruncatedModule& m, const Weight& w) {
  const int wi = m.find(w);
  if (wi < 0) {
    if (m.locate(w) == kOutside) throw band_violation("weight " + render(w) + " lies outside the retained band");
    return Matrix(0, 0);
  }
  Matrix stack(0, m.dims[static_cast<std::size_t>(wi)]);
  for (int y : m.raising()) {
    const Action& a = m.action[static_cast<std::size_t>(y)][static_cast<std::size_t>(wi)];
    if (a.target == kOutside) throw band_violation("raising target outside the band");
    if (a.target < 0) continue;
    stack = Matrix::vstack(stack, a.m);
  }
  return nullspace(stack);
}

}  // namespace supero

#endif

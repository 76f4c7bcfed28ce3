#ifndef SUPERO_SUPERALGEBRA_HPP
#define SUPERO_SUPERALGEBRA_HPP

// Lie (super)algebras given by explicit matrices. Structure constants are
// obtained by decomposing super-commutators of the realizing matrices against
// the chosen basis; nothing is transcribed by hand.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "weight.hpp"

namespace supero {

using SparseVec = std::vector<std::pair<int, Rational>>;

struct BasisElement {
  std::string name;
  Matrix matrix;
  int parity = 0;  // 0 even, 1 odd
  int grade = 0;   // Z-grading of type I: -1, 0, 1
  Weight weight;
  Rational height;  // value of a functional positive on positive roots
  bool cartan = false;
};

class LieSuperalgebra {
 public:
  const AlgebraDescriptor& descriptor() const { return desc_; }
  std::size_t dim() const { return basis_.size(); }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  // [x_i, x_j] as a combination of basis elements.
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return bracket_[i * basis_.size() + j]; }

  // Cartan element dual to coordinate k.
  std::size_t cartan(std::size_t k) const { return cartan_[k]; }
  std::size_t cartan_count() const { return cartan_.size(); }

  Rational height(const Weight& w) const {
    Rational h;
    for (std::size_t i = 0; i < w.size(); ++i) h += height_coeffs_[i] * w[i];
    return h;
  }

  int find(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  // The basis element of the given weight and parity (root spaces are
  // one-dimensional in every algebra built here).
  int root_vector(const Weight& w, int parity) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!basis_[i].cartan && basis_[i].parity == parity && basis_[i].weight == w) return static_cast<int>(i);
    return -1;
  }

  friend std::shared_ptr<const LieSuperalgebra> realize(const AlgebraDescriptor& a);

 private:
  void finish();

  AlgebraDescriptor desc_;
  std::vector<BasisElement> basis_;
  std::vector<SparseVec> bracket_;
  std::vector<std::size_t> cartan_;
  std::vector<Rational> height_coeffs_;
};

namespace detail {

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py) {
  Matrix a = x * y;
  Matrix b = y * x;
  if (px * py) return a + b;
  return a - b;
}

}  // namespace detail

inline void LieSuperalgebra::finish() {
  const std::size_t d = basis_.size();
  const std::size_t N = basis_.front().matrix.rows();
  // Flattened basis matrices as columns; decompositions are solved against it.
  Matrix flat(N * N, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) flat(i * N + j, k) = basis_[k].matrix(i, j);
  if (rank(flat) != d) throw precondition_failed("realization basis of " + desc_.name() + " is not independent");
  auto decompose = [&](const Matrix& m) {
    std::vector<Rational> rhs(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) rhs[i * N + j] = m(i, j);
    std::vector<Rational> x;
    if (!solve(flat, rhs, x)) throw precondition_failed("bracket leaves the span of the basis of " + desc_.name());
    SparseVec out;
    for (std::size_t k = 0; k < d; ++k)
      if (sgn(x[k]) != 0) out.emplace_back(static_cast<int>(k), x[k]);
    return out;
  };
  bracket_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      bracket_[i * d + j] = decompose(detail::supercommutator(basis_[i].matrix, basis_[i].parity, basis_[j].matrix, basis_[j].parity));

  // Weights from the adjoint action of the Cartan elements.
  for (auto& b : basis_) {
    std::vector<Rational> c(cartan_.size());
    for (std::size_t k = 0; k < cartan_.size(); ++k) {
      const auto& br = detail::supercommutator(basis_[cartan_[k]].matrix, 0, b.matrix, b.parity);
      // br must equal c * b.matrix
      Rational coef;
      bool set = false;
      for (std::size_t i = 0; i < N && !set; ++i)
        for (std::size_t j = 0; j < N && !set; ++j)
          if (sgn(b.matrix(i, j)) != 0) {
            coef = br(i, j) / b.matrix(i, j);
            set = true;
          }
      Matrix check = b.matrix;
      check *= coef;
      if (!(check == br)) throw precondition_failed("basis element " + b.name + " is not a weight vector");
      c[k] = coef;
    }
    b.weight = Weight(desc_.basis, std::move(c));
    b.height = height(b.weight);
  }
}

// Matrix realization of gl(n), pe(n), osp(2|2n) or gl(m|n).
inline std::shared_ptr<const LieSuperalgebra> realize(const AlgebraDescriptor& a) {
  auto g = std::make_shared<LieSuperalgebra>();
  g->desc_ = a;
  auto& B = g->basis_;
  using detail::unit_matrix;
  auto add = [&](std::string name, Matrix m, int parity, int grade, bool cartan = false) {
    B.push_back({std::move(name), std::move(m), parity, grade, Weight(), Rational(), cartan});
    if (cartan) g->cartan_.push_back(B.size() - 1);
  };
  auto idx = [](int i) { return std::to_string(i); };
  switch (a.kind) {
    case Kind::GL: {
      const std::size_t n = static_cast<std::size_t>(a.n);
      for (std::size_t i = 0; i < n; ++i) add("H" + idx(int(i) + 1), unit_matrix(n, i, i), 0, 0, true);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) add("E" + idx(int(i) + 1) + idx(int(j) + 1), unit_matrix(n, i, j), 0, 0);
      for (int i = 0; i < a.n; ++i) g->height_coeffs_.emplace_back(a.n - i);
      break;
    }
    case Kind::PE: {
      const std::size_t n = static_cast<std::size_t>(a.n), N = 2 * n;
      for (std::size_t i = 0; i < n; ++i) add("H" + idx(int(i) + 1), unit_matrix(N, i, i) - unit_matrix(N, n + i, n + i), 0, 0, true);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) add("E" + idx(int(i) + 1) + idx(int(j) + 1), unit_matrix(N, i, j) - unit_matrix(N, n + j, n + i), 0, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Matrix x = i == j ? unit_matrix(N, i, n + i) : unit_matrix(N, i, n + j) + unit_matrix(N, j, n + i);
          add("X" + idx(int(i) + 1) + idx(int(j) + 1), std::move(x), 1, 1);
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          add("Y" + idx(int(i) + 1) + idx(int(j) + 1), unit_matrix(N, n + i, j) - unit_matrix(N, n + j, i), 1, -1);
      for (int i = 0; i < a.n; ++i) g->height_coeffs_.emplace_back(a.n - i);
      break;
    }
    case Kind::OSP2: {
      // Rows 0,1 even; 2..1+n and 2+n..1+2n odd.
      const std::size_t n = static_cast<std::size_t>(a.n), N = 2 + 2 * n;
      auto p = [](std::size_t i) { return 2 + i; };
      auto q = [n](std::size_t i) { return 2 + n + i; };
      add("He", unit_matrix(N, 0, 0) - unit_matrix(N, 1, 1), 0, 0, true);
      for (std::size_t i = 0; i < n; ++i) add("H" + idx(int(i) + 1), unit_matrix(N, p(i), p(i)) - unit_matrix(N, q(i), q(i)), 0, 0, true);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) add("A" + idx(int(i) + 1) + idx(int(j) + 1), unit_matrix(N, p(i), p(j)) - unit_matrix(N, q(j), q(i)), 0, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Matrix b = i == j ? unit_matrix(N, p(i), q(i)) : unit_matrix(N, p(i), q(j)) + unit_matrix(N, p(j), q(i));
          Matrix c = i == j ? unit_matrix(N, q(i), p(i)) : unit_matrix(N, q(i), p(j)) + unit_matrix(N, q(j), p(i));
          add("B" + idx(int(i) + 1) + idx(int(j) + 1), std::move(b), 0, 0);
          add("C" + idx(int(i) + 1) + idx(int(j) + 1), std::move(c), 0, 0);
        }
      for (std::size_t i = 0; i < n; ++i) {
        add("Xm" + idx(int(i) + 1), unit_matrix(N, 0, p(i)) + unit_matrix(N, q(i), 1), 1, 1);  // eps - delta_i
        add("Xp" + idx(int(i) + 1), unit_matrix(N, 0, q(i)) - unit_matrix(N, p(i), 1), 1, 1);  // eps + delta_i
        add("Ym" + idx(int(i) + 1), unit_matrix(N, 1, p(i)) + unit_matrix(N, q(i), 0), 1, -1);  // -eps - delta_i
        add("Yp" + idx(int(i) + 1), unit_matrix(N, 1, q(i)) - unit_matrix(N, p(i), 0), 1, -1);  // -eps + delta_i
      }
      g->height_coeffs_.emplace_back(a.n + 1);
      for (int i = 0; i < a.n; ++i) g->height_coeffs_.emplace_back(a.n - i);
      break;
    }
    case Kind::GLmn: {
      const std::size_t m = static_cast<std::size_t>(a.m), n = static_cast<std::size_t>(a.n), N = m + n;
      for (std::size_t i = 0; i < N; ++i) add("H" + idx(int(i) + 1), unit_matrix(N, i, i), 0, 0, true);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          if (i == j) continue;
          const bool odd = (i < m) != (j < m);
          const int grade = !odd ? 0 : (i < m ? 1 : -1);
          add("E" + idx(int(i) + 1) + "_" + idx(int(j) + 1), unit_matrix(N, i, j), odd ? 1 : 0, grade);
        }
      for (std::size_t i = 0; i < m; ++i) g->height_coeffs_.emplace_back(static_cast<long>(m + n - 1 - i));
      for (std::size_t i = 0; i < n; ++i) g->height_coeffs_.emplace_back(static_cast<long>(n - 1 - i));
      break;
    }
  }
  g->finish();
  return g;
}

}  // namespace supero

#endif

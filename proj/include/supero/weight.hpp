#ifndef SUPERO_WEIGHT_HPP
#define SUPERO_WEIGHT_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace supero {

// EpsilonN(n) has delta < 0; EpsilonDelta(m, n) keeps m epsilon coordinates
// followed by n delta coordinates.
struct BasisTag {
  int eps = 0;
  int delta = -1;

  static BasisTag epsilon(int n) { return {n, -1}; }
  static BasisTag epsilon_delta(int m, int n) { return {m, n}; }

  bool split() const { return delta >= 0; }
  std::size_t rank() const { return static_cast<std::size_t>(eps + (split() ? delta : 0)); }

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

inline std::string to_string(const BasisTag& b) {
  if (!b.split()) return "EpsilonN(" + std::to_string(b.eps) + ")";
  return "EpsilonDelta(" + std::to_string(b.eps) + "," + std::to_string(b.delta) + ")";
}

class Weight {
 public:
  Weight() = default;
  Weight(BasisTag basis, std::vector<Rational> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.rank()) {
      throw invalid_parameter("weight has " + std::to_string(coeffs_.size()) + " coefficients but " +
                              to_string(basis_) + " needs " + std::to_string(basis_.rank()));
    }
  }

  static Weight zero(BasisTag basis) { return Weight(basis, std::vector<Rational>(basis.rank())); }

  static Weight of(BasisTag basis, std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return Weight(basis, std::move(c));
  }

  const BasisTag& basis() const { return basis_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool all_integer() const {
    for (const auto& c : coeffs_)
      if (!is_integer(c)) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Weight& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

  // Lexicographic on coefficients; used only to key ordered containers.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.basis_.eps != b.basis_.eps) return a.basis_.eps < b.basis_.eps;
    if (a.basis_.delta != b.basis_.delta) return a.basis_.delta < b.basis_.delta;
    return a.coeffs_ < b.coeffs_;
  }

  void check_same(const Weight& o) const {
    if (!(basis_ == o.basis_)) {
      throw basis_mismatch("weights over " + to_string(basis_) + " and " + to_string(o.basis_));
    }
  }

 private:
  BasisTag basis_;
  std::vector<Rational> coeffs_;
};

// "2,0,-1" or, for a split basis, "1 | 2,0".
inline std::string render(const Weight& w) {
  std::string out;
  const auto& b = w.basis();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (b.split() && i == static_cast<std::size_t>(b.eps)) {
      out += " | ";
    } else if (i > 0) {
      out += ",";
    }
    out += to_string(w[i]);
  }
  if (b.split() && b.delta == 0) out += " |";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << "(" << render(w) << ")"; }

namespace detail {

inline std::vector<Rational> parse_list(std::string_view text) {
  std::vector<Rational> out;
  auto b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Weight parse_weight(std::string_view text, BasisTag basis) {
  std::vector<Rational> coeffs;
  auto bar = text.find('|');
  if (basis.split()) {
    if (bar == std::string_view::npos) throw parse_error("expected 'eps | delta' in weight '" + std::string(text) + "'");
    auto e = detail::parse_list(text.substr(0, bar));
    auto d = detail::parse_list(text.substr(bar + 1));
    if (e.size() != static_cast<std::size_t>(basis.eps) || d.size() != static_cast<std::size_t>(basis.delta)) {
      throw parse_error("weight '" + std::string(text) + "' does not match " + to_string(basis));
    }
    coeffs = std::move(e);
    coeffs.insert(coeffs.end(), d.begin(), d.end());
  } else {
    if (bar != std::string_view::npos) throw parse_error("unexpected '|' in weight '" + std::string(text) + "'");
    coeffs = detail::parse_list(text);
    if (coeffs.size() != basis.rank()) {
      throw parse_error("weight '" + std::string(text) + "' does not match " + to_string(basis));
    }
  }
  return Weight(basis, std::move(coeffs));
}

}  // namespace supero

#endif

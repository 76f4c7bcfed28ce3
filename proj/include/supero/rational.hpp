#ifndef SUPERO_RATIONAL_HPP
#define SUPERO_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace supero {

using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw invalid_parameter("rational " + q.get_str() + " is not a machine integer");
  }
  return q.get_num().get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "3", "-2", "1/2", "-7/3" with optional surrounding blanks.
inline Rational parse_rational(std::string_view text) {
  auto b = text.find_first_not_of(" \t");
  auto e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw parse_error("empty number");
  std::string s(text.substr(b, e - b + 1));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      throw parse_error("malformed number '" + s + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw parse_error("malformed number '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace supero

#endif

#pragma once

#include <string>
#include <vector>

#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

/// Display names of coordinates. Jet atoms print as u_xt, opaque-function
/// derivatives as g'(x) (one argument) or alpha_xt(x,t).
struct Symbols {
  std::vector<std::string> independents;
  std::vector<std::string> dependents;
  std::vector<std::string> auxiliaries;

  /// x (or x, t, y, z); u (or u1, u2, ...); w (or w1, w2, ...).
  static Symbols defaults(std::size_t p, std::size_t q, std::size_t r);

  std::string subscript(const MultiIndex& J) const;
};

std::string to_string(const Atom& a, const Symbols& s);
std::string to_string(const Polynomial& p, const Symbols& s);
/// Canonical text: terms in graded-lex descending order, denominators split
/// into squarefree factors.
std::string to_string(const Expression& e, const Symbols& s);

}  // namespace twistkit

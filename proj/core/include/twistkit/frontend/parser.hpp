#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistkit/jet/jet_space.hpp"
#include "twistkit/symbolic/matrix.hpp"
#include "twistkit/symbolic/printer.hpp"

namespace twistkit {

/// Opaque function g(args) with its declared argument names.
struct FunctionDecl {
  std::string name;
  std::vector<std::string> args;
  friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

/// Symbol table shared by the expression parser and the printer.
struct Declarations {
  std::vector<std::string> independents;
  std::vector<std::string> dependents;
  std::vector<std::string> auxiliaries;
  std::vector<std::string> constants;
  std::vector<FunctionDecl> functions;

  /// DuplicateDeclaration if `name` is already taken.
  void declare_independent(const std::string& name);
  void declare_dependent(const std::string& name);
  void declare_auxiliary(const std::string& name);
  void declare_constant(const std::string& name);
  void declare_function(FunctionDecl f);

  bool is_declared(const std::string& name) const;
  const FunctionDecl* function(const std::string& name) const;
  /// Order-zero coordinate named `name`, if any.
  std::optional<Atom> coordinate(const std::string& name) const;

  Symbols symbols() const;
  JetSpace space(unsigned n) const;

  friend bool operator==(const Declarations&, const Declarations&) = default;
};

/// Canonical text of e in the names of `decl`.
std::string print(const Expression& e, const Declarations& decl);
std::string print(const Matrix& m, const Declarations& decl);

/// Precedence ^ (right-associative) > unary minus > * / > + -. Jets are
/// written u_xt (subscript order is irrelevant), function derivatives g'(x)
/// or alpha_xt(x,t), a declared function without arguments stands for its
/// declared argument list. `line` and `column` offset error positions.
Expression parse_expression(std::string_view src, const Declarations& decl, std::size_t line = 1,
                            std::size_t column = 1);

/// Matrix literal [[a, b], [c, d]].
Matrix parse_matrix(std::string_view src, const Declarations& decl, std::size_t line = 1, std::size_t column = 1);

}  // namespace twistkit

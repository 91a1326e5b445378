#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistkit/frontend/parser.hpp"
#include "twistkit/jet/equation_system.hpp"
#include "twistkit/jet/matrix_one_form.hpp"
#include "twistkit/jet/vector_field.hpp"

namespace twistkit {

/// `lhs = rhs`, or a bare residual when lhs is absent.
struct EquationLine {
  std::optional<Expression> lhs;
  Expression rhs;
  Expression residual() const { return lhs ? *lhs - rhs : rhs; }
  friend bool operator==(const EquationLine&, const EquationLine&) = default;
};

struct EquationDecl {
  std::string name;
  std::vector<EquationLine> lines;
  EquationSystem system() const;
  friend bool operator==(const EquationDecl&, const EquationDecl&) = default;
};

/// w^b_i = value.
struct AuxRule {
  std::size_t aux;
  std::size_t direction;
  Expression value;
  friend bool operator==(const AuxRule&, const AuxRule&) = default;
};

/// Either first-order aux rules or a matrix pair W_x = A W, W_t = B W.
struct CoveringDecl {
  std::string name;
  std::string base;
  std::vector<AuxRule> rules;
  std::optional<Matrix> A;
  std::optional<Matrix> B;
  bool is_matrix() const noexcept { return A.has_value(); }
  friend bool operator==(const CoveringDecl&, const CoveringDecl&) = default;
};

struct FieldDecl {
  std::string name;
  VectorField field;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct LambdaDecl {
  std::string name;
  Expression value;
  friend bool operator==(const LambdaDecl&, const LambdaDecl&) = default;
};

struct MuDecl {
  std::string name;
  MatrixOneForm mu;
  friend bool operator==(const MuDecl&, const MuDecl&) = default;
};

struct GaugeDecl {
  std::string name;
  Matrix R;
  friend bool operator==(const GaugeDecl&, const GaugeDecl&) = default;
};

/// One `[task kind]` section. References are names of the sections above.
struct TaskDecl {
  std::string kind;
  std::string name;
  std::string field;
  std::string equation;
  std::string covering;
  std::string mode;
  std::string lambda;
  std::string mu;
  std::string gauge;
  std::optional<unsigned> order;
  std::optional<Expression> eta;
  std::optional<Expression> zeta;
  std::optional<Matrix> G;
  friend bool operator==(const TaskDecl&, const TaskDecl&) = default;
};

struct ProblemDocument {
  Declarations decl;
  std::vector<EquationDecl> equations;
  std::vector<CoveringDecl> coverings;
  std::vector<FieldDecl> fields;
  std::vector<LambdaDecl> lambdas;
  std::vector<MuDecl> mus;
  std::vector<GaugeDecl> gauges;
  std::vector<TaskDecl> tasks;

  const EquationDecl& equation(const std::string& name) const;
  const CoveringDecl& covering(const std::string& name) const;
  const FieldDecl& field(const std::string& name) const;
  const LambdaDecl& lambda(const std::string& name) const;
  const MuDecl& mu(const std::string& name) const;
  const GaugeDecl& gauge(const std::string& name) const;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Task kinds understood by execute().
const std::vector<std::string>& task_kinds();

/// Sectioned text format; `#` starts a comment. Declarations must precede
/// their use. Throws the parser errors plus UndeclaredReference and
/// DuplicateDeclaration.
ProblemDocument parse_problem(std::string_view src);

/// Canonical text; parse_problem(render_problem(d)) == d.
std::string render_problem(const ProblemDocument& doc);

}  // namespace twistkit

#pragma once

#include <functional>
#include <optional>

#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

/// Derivation of the expression field. The rule supplies the derivative of
/// atoms it knows about; atoms it leaves unmapped are handled by the built-in
/// chain rules (exp, power, opaque functions) or derive to zero.
class Derivation {
 public:
  using Rule = std::function<std::optional<Expression>(const Atom&)>;

  explicit Derivation(Rule rule) : rule_(std::move(rule)) {}

  Expression operator()(const Expression& e) const;
  Expression of_atom(const Atom& a) const;

 private:
  Rule rule_;
};

Expression derive(const Expression& e, const Derivation& d);

/// Partial derivative in a coordinate atom, looking through exp/power/function
/// atoms via the chain rule.
Expression partial(const Expression& e, const Atom& coordinate);

}  // namespace twistkit

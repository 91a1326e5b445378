#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "twistkit/jet/jet_space.hpp"

namespace twistkit {

/// leading = rhs, where rhs is free of leading and of its derivatives.
struct SolvedRule {
  Atom leading;
  Expression rhs;
};

/// Residuals F^l with one solved rule each.
class EquationSystem {
 public:
  EquationSystem() = default;
  static EquationSystem from_residuals(const std::vector<Expression>& residuals);

  /// Solves F for its leading jet; NoSolvedRule if F is not linear in it.
  void add_residual(const Expression& F);
  /// Adds leading = rhs; the residual is leading - rhs.
  void add_rule(const Atom& leading, const Expression& rhs);

  const std::vector<Expression>& residuals() const noexcept { return residuals_; }
  const std::vector<SolvedRule>& rules() const noexcept { return rules_; }
  unsigned order() const;
  bool empty() const noexcept { return rules_.empty(); }

 private:
  std::vector<Expression> residuals_;
  std::vector<SolvedRule> rules_;
};

/// Highest-ranked jet of F: higher order first, then lower dependent index,
/// then more derivatives in earlier directions. NoSolvedRule if F has no jet.
Atom leading_jet(const Expression& F);

/// Reduces modulo a system and all differential consequences of its rules.
/// Replacements are memoized; reuse one instance for many expressions.
class Reducer {
 public:
  Reducer(EquationSystem system, JetSpace space);

  Expression operator()(const Expression& e);
  /// True if some rule's leading jet divides `a` (same variable, J <= K).
  bool reducible(const Atom& a) const;

 private:
  const SolvedRule* rule_for(const Atom& a) const;
  const Expression& replacement(const Atom& a);

  EquationSystem system_;
  JetSpace space_;
  std::vector<Derivation> D_;
  std::map<Atom, Expression> cache_;
  std::set<Atom> in_progress_;
};

Expression reduce_mod_system(const Expression& e, const EquationSystem& sys, const JetSpace& space);

}  // namespace twistkit

#include "twistkit/jet/equation_system.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

// True if a ranks strictly above b.
bool ranks_above(const Atom& a, const Atom& b) {
  if (a.order() != b.order()) return a.order() > b.order();
  if (a.index() != b.index()) return a.index() < b.index();
  return a.multi().counts() > b.multi().counts();
}

}  // namespace

Atom leading_jet(const Expression& F) {
  std::optional<Atom> best;
  for (const auto& c : F.coordinates()) {
    if (c.kind() != AtomKind::Jet || c.order() == 0) continue;
    if (!best || ranks_above(c, *best)) best = c;
  }
  if (!best) throw Error(ErrorKind::NoSolvedRule, "equation contains no derivative to solve for");
  return *best;
}

EquationSystem EquationSystem::from_residuals(const std::vector<Expression>& residuals) {
  EquationSystem out;
  for (const auto& F : residuals) out.add_residual(F);
  return out;
}

void EquationSystem::add_residual(const Expression& F) {
  Atom L = leading_jet(F);
  for (const auto& a : F.atoms()) {
    if (a == L || a.is_coordinate()) continue;
    Expression probe(a);
    if (probe.coordinates().contains(L))
      throw Error(ErrorKind::NoSolvedRule, "leading jet occurs inside a transcendental atom");
  }
  if (F.den().degree_in(L) > 0) throw Error(ErrorKind::NoSolvedRule, "leading jet occurs in a denominator");
  auto coeffs = F.num().coefficients_in(L);
  if (coeffs.size() != 2) throw Error(ErrorKind::NoSolvedRule, "equation is not linear in its leading jet");
  Expression rhs = -Expression::fraction(coeffs[0], coeffs[1]);
  residuals_.push_back(F);
  rules_.push_back({L, rhs});
}

void EquationSystem::add_rule(const Atom& leading, const Expression& rhs) {
  if (!leading.is_coordinate() || leading.order() == 0)
    throw Error(ErrorKind::InvalidArgument, "a solved rule must have a derivative on its left side");
  if (rhs.coordinates().contains(leading))
    throw Error(ErrorKind::InvalidArgument, "rule right side contains its own leading jet");
  residuals_.push_back(Expression(leading) - rhs);
  rules_.push_back({leading, rhs});
}

unsigned EquationSystem::order() const {
  unsigned n = 0;
  for (const auto& F : residuals_) n = std::max(n, F.jet_order());
  return n;
}

Reducer::Reducer(EquationSystem system, JetSpace space) : system_(std::move(system)), space_(space) {
  for (std::size_t i = 0; i < space_.p(); ++i) D_.push_back(total_derivation(i, space_));
}

const SolvedRule* Reducer::rule_for(const Atom& a) const {
  if (a.kind() != AtomKind::Jet && a.kind() != AtomKind::AuxJet) return nullptr;
  for (const auto& r : system_.rules()) {
    if (r.leading.kind() == a.kind() && r.leading.index() == a.index() && r.leading.multi().below(a.multi()))
      return &r;
  }
  return nullptr;
}

bool Reducer::reducible(const Atom& a) const { return rule_for(a) != nullptr; }

const Expression& Reducer::replacement(const Atom& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  const SolvedRule* rule = rule_for(a);
  if (!in_progress_.insert(a).second)
    throw Error(ErrorKind::NoSolvedRule, "solved rules are cyclic");
  Expression value;
  if (rule->leading == a) {
    value = (*this)(rule->rhs);
  } else {
    const auto& J = rule->leading.multi();
    const auto& K = a.multi();
    std::size_t i = 0;
    while (K[i] <= J[i]) ++i;
    Atom parent = a.kind() == AtomKind::Jet ? Atom::jet(a.index(), *K.lowered(i)) : Atom::aux(a.index(), *K.lowered(i));
    Expression derived = D_[i](replacement(parent));
    value = (*this)(derived);
  }
  in_progress_.erase(a);
  return cache_.emplace(a, std::move(value)).first->second;
}

Expression Reducer::operator()(const Expression& e) {
  if (system_.empty()) return e;
  std::map<Atom, Expression> sigma;
  for (const auto& c : e.coordinates())
    if (reducible(c)) sigma.emplace(c, replacement(c));
  if (sigma.empty()) return e;
  return substitute(e, sigma);
}

Expression reduce_mod_system(const Expression& e, const EquationSystem& sys, const JetSpace& space) {
  Reducer r(sys, space);
  return r(e);
}

}  // namespace twistkit

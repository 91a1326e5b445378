#include "twistkit/symbolic/derivation.hpp"

#include <map>

namespace twistkit {

namespace {

class Worker {
 public:
  explicit Worker(const Derivation::Rule& rule) : rule_(rule) {}

  const Expression& atom(const Atom& a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    Expression out = compute(a);
    return cache_.emplace(a, std::move(out)).first->second;
  }

  Expression poly(const Polynomial& p) {
    Expression out;
    for (const auto& a : p.atoms()) {
      const Expression& da = atom(a);
      if (da.is_zero()) continue;
      out += Expression(p.partial(a)) * da;
    }
    return out;
  }

  Expression apply(const Expression& e) {
    Expression dn = poly(e.num());
    if (e.is_polynomial()) return dn;
    Expression dd = poly(e.den());
    if (dd.is_zero()) return dn / Expression(e.den());
    Expression den(e.den());
    return (dn * den - Expression(e.num()) * dd) / (den * den);
  }

 private:
  Expression compute(const Atom& a) {
    if (auto r = rule_(a)) return *r;
    switch (a.kind()) {
      case AtomKind::Exp:
        return Expression(a) * apply(a.payload());
      case AtomKind::Power: {
        Expression db = apply(a.payload());
        if (db.is_zero()) return Expression();
        return a.exponent() * Expression(a) * db / a.payload();
      }
      case AtomKind::Function: {
        Expression out;
        for (std::size_t k = 0; k < a.args().size(); ++k) {
          const Expression& dk = atom(a.args()[k]);
          if (dk.is_zero()) continue;
          out += Expression(a.function_derivative(k)) * dk;
        }
        return out;
      }
      default:
        return Expression();
    }
  }

  const Derivation::Rule& rule_;
  std::map<Atom, Expression> cache_;
};

}  // namespace

Expression Derivation::operator()(const Expression& e) const {
  Worker w(rule_);
  return w.apply(e);
}

Expression Derivation::of_atom(const Atom& a) const {
  Worker w(rule_);
  return w.atom(a);
}

Expression derive(const Expression& e, const Derivation& d) { return d(e); }

Expression partial(const Expression& e, const Atom& coordinate) {
  Derivation d([&coordinate](const Atom& a) -> std::optional<Expression> {
    if (a.is_coordinate()) return Expression(a == coordinate ? 1 : 0);
    return std::nullopt;
  });
  return d(e);
}

}  // namespace twistkit

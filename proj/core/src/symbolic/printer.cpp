#include "twistkit/symbolic/printer.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

Symbols Symbols::defaults(std::size_t p, std::size_t q, std::size_t r) {
  Symbols s;
  static const char* const base[] = {"x", "t", "y", "z"};
  for (std::size_t i = 0; i < p; ++i) {
    if (p == 1) s.independents.emplace_back("x");
    else if (p <= 4) s.independents.emplace_back(base[i]);
    else s.independents.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t a = 0; a < q; ++a) s.dependents.push_back(q == 1 ? "u" : "u" + std::to_string(a + 1));
  for (std::size_t b = 0; b < r; ++b) s.auxiliaries.push_back(r == 1 ? "w" : "w" + std::to_string(b + 1));
  return s;
}

std::string Symbols::subscript(const MultiIndex& J) const {
  std::string out;
  for (std::size_t i = 0; i < J.dims(); ++i)
    for (unsigned k = 0; k < J[i]; ++k) out += independents.at(i);
  return out;
}

namespace {

std::string name_at(const std::vector<std::string>& names, std::size_t i, const char* what) {
  if (i >= names.size()) throw Error(ErrorKind::UnknownSymbol, std::string("no name for ") + what + " " + std::to_string(i));
  return names[i];
}

std::string rational_text(const Rational& c) { return c.get_str(); }

bool is_single_atom(const Expression& e) {
  if (!e.is_polynomial() || e.num().size() != 1) return false;
  const auto& t = e.num().leading();
  return t.coef == 1 && t.mono.degree() == 1;
}

// Atom text that may need parentheses when raised to a power.
bool prints_as_power(const Atom& a) { return a.kind() == AtomKind::Power; }

std::string factor_text(const Atom& a, unsigned e, const Symbols& s) {
  std::string base = to_string(a, s);
  if (e == 1) return base;
  if (prints_as_power(a)) base = "(" + base + ")";
  return base + "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m, const Symbols& s) {
  std::string out;
  for (const auto& [atom, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += factor_text(atom, e, s);
  }
  return out;
}

std::string term_text(const Term& t, const Symbols& s, bool absolute) {
  Rational c = absolute ? Rational(abs(t.coef)) : t.coef;
  if (t.mono.is_one()) return rational_text(c);
  std::string m = monomial_text(t.mono, s);
  if (c == 1) return m;
  if (c == -1) return "-" + m;
  return rational_text(c) + "*" + m;
}

}  // namespace

std::string to_string(const Atom& a, const Symbols& s) {
  switch (a.kind()) {
    case AtomKind::Independent:
      return name_at(s.independents, a.index(), "independent variable");
    case AtomKind::Jet:
    case AtomKind::AuxJet: {
      std::string n = a.kind() == AtomKind::Jet ? name_at(s.dependents, a.index(), "dependent variable")
                                                : name_at(s.auxiliaries, a.index(), "auxiliary variable");
      if (a.order() == 0) return n;
      return n + "_" + s.subscript(a.multi());
    }
    case AtomKind::Constant:
      return a.name();
    case AtomKind::Function: {
      std::string args;
      for (const auto& arg : a.args()) {
        if (!args.empty()) args += ",";
        args += to_string(arg, s);
      }
      const auto& K = a.multi();
      std::string head = a.name();
      if (K.order() > 0) {
        if (a.args().size() == 1) {
          head += std::string(K.order(), '\'');
        } else {
          head += "_";
          for (std::size_t k = 0; k < K.dims(); ++k)
            for (unsigned c = 0; c < K[k]; ++c) head += to_string(a.args()[k], s);
        }
      }
      return head + "(" + args + ")";
    }
    case AtomKind::Power: {
      std::string base = to_string(a.payload(), s);
      if (!is_single_atom(a.payload()) || a.payload().atoms().begin()->kind() == AtomKind::Power)
        base = "(" + base + ")";
      std::string ex = to_string(a.exponent(), s);
      if (!(is_single_atom(a.exponent()))) ex = "(" + ex + ")";
      return base + "^" + ex;
    }
    case AtomKind::Exp:
      return "exp(" + to_string(a.payload(), s) + ")";
  }
  return "?";
}

std::string to_string(const Polynomial& p, const Symbols& s) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      out += term_text(t, s, false);
      first = false;
    } else {
      out += t.coef < 0 ? " - " : " + ";
      out += term_text(t, s, true);
    }
  }
  return out;
}

std::string to_string(const Expression& e, const Symbols& s) {
  if (e.is_polynomial()) return to_string(e.num(), s);
  std::string num = to_string(e.num(), s);
  if (e.num().size() > 1) num = "(" + num + ")";

  std::vector<std::string> factors;
  Monomial content = e.den().monomial_content();
  for (const auto& [atom, k] : content.factors()) factors.push_back(factor_text(atom, k, s));
  Polynomial rest = e.den().divide_monomial(content);
  if (!rest.is_constant()) {
    for (const auto& [f, k] : squarefree_decomposition(rest)) {
      std::string text = to_string(f, s);
      bool single = f.size() == 1 && f.leading().coef == 1 && f.leading().mono.degree() == 1;
      if (f.size() > 1 || (!single && k > 1)) text = "(" + text + ")";
      if (single && k > 1 && prints_as_power(f.leading().mono.factors()[0].first)) text = "(" + text + ")";
      if (k > 1) text += "^" + std::to_string(k);
      factors.push_back(text);
    }
  }
  std::string den;
  for (const auto& f : factors) den += (den.empty() ? "" : "*") + f;
  if (factors.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace twistkit

#include "twistkit/frontend/problem.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

EquationSystem EquationDecl::system() const {
  EquationSystem sys;
  for (const auto& l : lines) sys.add_residual(l.residual());
  return sys;
}

namespace {

template <class T>
const T& lookup(const std::vector<T>& items, const std::string& name, const char* what) {
  for (const auto& it : items)
    if (it.name == name) return it;
  throw Error(ErrorKind::UndeclaredReference, std::string(what) + " " + name);
}

}  // namespace

const EquationDecl& ProblemDocument::equation(const std::string& n) const { return lookup(equations, n, "equation"); }
const CoveringDecl& ProblemDocument::covering(const std::string& n) const { return lookup(coverings, n, "covering"); }
const FieldDecl& ProblemDocument::field(const std::string& n) const { return lookup(fields, n, "field"); }
const LambdaDecl& ProblemDocument::lambda(const std::string& n) const { return lookup(lambdas, n, "lambda"); }
const MuDecl& ProblemDocument::mu(const std::string& n) const { return lookup(mus, n, "mu"); }
const GaugeDecl& ProblemDocument::gauge(const std::string& n) const { return lookup(gauges, n, "gauge"); }

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds = {
      "prolong",           "check-symmetry",           "check-covering",      "check-matrix-covering",
      "check-mch",         "gauge-diagram",            "check-augmented-symmetry",
      "check-semiclassical", "reconstruct",            "check-ibdp",
  };
  return kinds;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Line {
  std::size_t number;
  std::string raw;   // comment stripped
  std::string text;  // trimmed
};

// key = value with the 1-based column of value within the raw line.
struct Assignment {
  std::string key;
  std::string value;
  std::size_t column;
};

[[noreturn]] void syntax(const Line& l, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(l.number) + ": " + msg);
}

std::optional<Assignment> split_assignment(const Line& l) {
  auto eq = l.raw.find('=');
  if (eq == std::string::npos) return std::nullopt;
  if (l.raw.find('=', eq + 1) != std::string::npos) syntax(l, "more than one '='");
  Assignment a;
  a.key = trim(std::string_view(l.raw).substr(0, eq));
  std::size_t v = eq + 1;
  while (v < l.raw.size() && std::isspace(static_cast<unsigned char>(l.raw[v]))) ++v;
  a.value = trim(std::string_view(l.raw).substr(v));
  a.column = v + 1;
  if (a.key.empty()) syntax(l, "missing key before '='");
  if (a.value.empty()) syntax(l, "missing value after '='");
  return a;
}

Assignment require_assignment(const Line& l) {
  auto a = split_assignment(l);
  if (!a) syntax(l, "expected 'key = value'");
  return *a;
}

std::size_t leading_column(const Line& l) {
  std::size_t c = 0;
  while (c < l.raw.size() && std::isspace(static_cast<unsigned char>(l.raw[c]))) ++c;
  return c + 1;
}

template <class T>
void require_unique(const std::vector<T>& items, const std::string& name, const char* what) {
  for (const auto& it : items)
    if (it.name == name) throw Error(ErrorKind::DuplicateDeclaration, std::string(what) + " " + name);
}

std::optional<std::size_t> index_of(const std::vector<std::string>& v, const std::string& s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

class DocumentParser {
 public:
  ProblemDocument run(std::string_view src) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::istringstream in{std::string(src)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::string text = trim(raw);
      if (text.empty()) continue;
      lines.push_back({number, raw, text});
    }

    std::size_t k = 0;
    while (k < lines.size()) {
      const Line& header = lines[k];
      if (header.text.front() != '[' || header.text.back() != ']') syntax(header, "expected a [section] header");
      auto words = split_names(header.text.substr(1, header.text.size() - 2));
      if (words.empty()) syntax(header, "empty section header");
      std::vector<Line> body;
      for (++k; k < lines.size() && !(lines[k].text.front() == '[' && lines[k].text.back() == ']' &&
                                       lines[k].text.rfind("[[", 0) != 0);
           ++k)
        body.push_back(lines[k]);
      section(header, words, body);
    }
    validate();
    return std::move(doc_);
  }

 private:
  void section(const Line& header, const std::vector<std::string>& words, const std::vector<Line>& body) {
    const std::string& kind = words[0];
    auto declaration = [&](auto&& declare) {
      if (words.size() != 1) syntax(header, "[" + kind + "] takes no name");
      for (const auto& l : body)
        for (const auto& n : split_names(l.text)) {
          if (!valid_symbol(n)) syntax(l, "invalid name '" + n + "'");
          declare(n);
        }
    };
    if (kind == "vars") return declaration([&](const std::string& n) { doc_.decl.declare_independent(n); });
    if (kind == "deps") return declaration([&](const std::string& n) { doc_.decl.declare_dependent(n); });
    if (kind == "aux") return declaration([&](const std::string& n) { doc_.decl.declare_auxiliary(n); });
    if (kind == "constants") return declaration([&](const std::string& n) { doc_.decl.declare_constant(n); });
    if (kind == "functions") {
      if (words.size() != 1) syntax(header, "[functions] takes no name");
      for (const auto& l : body) function_line(l);
      return;
    }
    if (kind == "task") {
      if (words.size() != 2) syntax(header, "expected [task <kind>]");
      return task(header, words[1], body);
    }
    if (words.size() != 2 || !valid_name(words[1])) syntax(header, "expected [" + kind + " <name>]");
    const std::string& name = words[1];
    if (kind == "equation") return equation(name, body);
    if (kind == "covering") return covering(header, name, body);
    if (kind == "field") return field(name, body);
    if (kind == "lambda") return lambda(header, name, body);
    if (kind == "mu") return mu(name, body);
    if (kind == "gauge") return gauge(header, name, body);
    syntax(header, "unknown section '" + kind + "'");
  }

  void function_line(const Line& l) {
    auto open = l.text.find('(');
    if (open == std::string::npos || l.text.back() != ')') syntax(l, "expected 'name(arg, ...)'");
    FunctionDecl f;
    f.name = trim(std::string_view(l.text).substr(0, open));
    if (!valid_symbol(f.name)) syntax(l, "invalid function name '" + f.name + "'");
    f.args = split_names(l.text.substr(open + 1, l.text.size() - open - 2));
    doc_.decl.declare_function(std::move(f));
  }

  Expression expr(const Line& l, const std::string& text, std::size_t column) const {
    return parse_expression(text, doc_.decl, l.number, column);
  }
  Matrix matrix(const Line& l, const std::string& text, std::size_t column) const {
    return parse_matrix(text, doc_.decl, l.number, column);
  }

  void equation(const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.equations, name, "equation");
    EquationDecl eq{name, {}};
    for (const auto& l : body) {
      if (auto a = split_assignment(l)) {
        eq.lines.push_back({expr(l, a->key, leading_column(l)), expr(l, a->value, a->column)});
      } else {
        eq.lines.push_back({std::nullopt, expr(l, l.text, leading_column(l))});
      }
    }
    if (eq.lines.empty()) throw Error(ErrorKind::InvalidArgument, "equation " + name + " is empty");
    doc_.equations.push_back(std::move(eq));
  }

  void covering(const Line& header, const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.coverings, name, "covering");
    CoveringDecl c;
    c.name = name;
    const auto& d = doc_.decl;
    for (const auto& l : body) {
      auto a = require_assignment(l);
      if (a.key == "base") {
        if (!c.base.empty()) throw Error(ErrorKind::DuplicateDeclaration, "base of covering " + name);
        c.base = a.value;
      } else if (a.key == "A" || a.key == "B") {
        auto& slot = a.key == "A" ? c.A : c.B;
        if (slot) throw Error(ErrorKind::DuplicateDeclaration, a.key + " of covering " + name);
        slot = matrix(l, a.value, a.column);
      } else {
        auto cut = a.key.find('_');
        std::string var = a.key.substr(0, cut);
        auto b = index_of(d.auxiliaries, var);
        if (!b) throw Error(ErrorKind::UndeclaredReference, var);
        auto dir = cut == std::string::npos ? std::nullopt : index_of(d.independents, a.key.substr(cut + 1));
        if (!dir) syntax(l, "expected an aux rule '" + var + "_<variable> = ...'");
        for (const auto& r : c.rules)
          if (r.aux == *b && r.direction == *dir) throw Error(ErrorKind::DuplicateDeclaration, a.key);
        c.rules.push_back({*b, *dir, expr(l, a.value, a.column)});
      }
    }
    if (c.base.empty()) syntax(header, "covering " + name + " needs 'base = <equation>'");
    if (c.A.has_value() != c.B.has_value()) syntax(header, "matrix covering " + name + " needs both A and B");
    if (c.A && !c.rules.empty()) syntax(header, "covering " + name + " mixes aux rules and matrices");
    if (!c.A) {
      if (c.rules.empty()) syntax(header, "covering " + name + " has no rules");
      for (std::size_t b = 0; b < d.auxiliaries.size(); ++b)
        for (std::size_t i = 0; i < d.independents.size(); ++i) {
          bool found = std::any_of(c.rules.begin(), c.rules.end(),
                                   [&](const AuxRule& r) { return r.aux == b && r.direction == i; });
          if (!found)
            throw Error(ErrorKind::InvalidArgument,
                        "covering " + name + " lacks " + d.auxiliaries[b] + "_" + d.independents[i]);
        }
      std::sort(c.rules.begin(), c.rules.end(), [](const AuxRule& x, const AuxRule& y) {
        return std::tie(x.aux, x.direction) < std::tie(y.aux, y.direction);
      });
    }
    doc_.coverings.push_back(std::move(c));
  }

  void field(const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.fields, name, "field");
    const auto& d = doc_.decl;
    VectorField X{std::vector<Expression>(d.independents.size()), std::vector<Expression>(d.dependents.size()),
                  std::vector<Expression>(d.auxiliaries.size())};
    std::vector<std::string> seen;
    for (const auto& l : body) {
      auto a = require_assignment(l);
      if (std::find(seen.begin(), seen.end(), a.key) != seen.end())
        throw Error(ErrorKind::DuplicateDeclaration, "component " + a.key + " of field " + name);
      seen.push_back(a.key);
      Expression v = expr(l, a.value, a.column);
      if (auto i = index_of(d.independents, a.key)) X.xi[*i] = v;
      else if (auto u = index_of(d.dependents, a.key)) X.phi[*u] = v;
      else if (auto w = index_of(d.auxiliaries, a.key)) X.eta[*w] = v;
      else throw Error(ErrorKind::UndeclaredReference, a.key);
    }
    doc_.fields.push_back({name, std::move(X)});
  }

  void lambda(const Line& header, const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.lambdas, name, "lambda");
    if (body.size() != 1) syntax(header, "lambda " + name + " needs exactly one 'value = ...' line");
    auto a = require_assignment(body[0]);
    if (a.key != "value") syntax(body[0], "expected 'value = ...'");
    doc_.lambdas.push_back({name, expr(body[0], a.value, a.column)});
  }

  void mu(const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.mus, name, "mu");
    const auto& d = doc_.decl;
    const std::size_t q = d.dependents.size();
    MatrixOneForm m;
    m.lambdas.assign(d.independents.size(), Matrix::zero(q));
    std::vector<bool> seen(d.independents.size(), false);
    for (const auto& l : body) {
      auto a = require_assignment(l);
      auto i = index_of(d.independents, a.key);
      if (!i) throw Error(ErrorKind::UndeclaredReference, a.key);
      if (seen[*i]) throw Error(ErrorKind::DuplicateDeclaration, "direction " + a.key + " of mu " + name);
      seen[*i] = true;
      Matrix L = matrix(l, a.value, a.column);
      if (L.rows() != q || L.cols() != q)
        throw Error(ErrorKind::DimensionMismatch, "mu " + name + " needs " + std::to_string(q) + "x" +
                                                      std::to_string(q) + " matrices");
      m.lambdas[*i] = std::move(L);
    }
    doc_.mus.push_back({name, std::move(m)});
  }

  void gauge(const Line& header, const std::string& name, const std::vector<Line>& body) {
    require_unique(doc_.gauges, name, "gauge");
    if (body.size() != 1) syntax(header, "gauge " + name + " needs exactly one 'R = [[...]]' line");
    auto a = require_assignment(body[0]);
    if (a.key != "R") syntax(body[0], "expected 'R = [[...]]'");
    Matrix R = matrix(body[0], a.value, a.column);
    const std::size_t q = doc_.decl.dependents.size();
    if (R.rows() != q || R.cols() != q)
      throw Error(ErrorKind::DimensionMismatch, "gauge " + name + " needs a " + std::to_string(q) + "x" +
                                                    std::to_string(q) + " matrix");
    doc_.gauges.push_back({name, std::move(R)});
  }

  void task(const Line& header, const std::string& kind, const std::vector<Line>& body) {
    const auto& kinds = task_kinds();
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) syntax(header, "unknown task kind '" + kind + "'");
    TaskDecl t;
    t.kind = kind;
    std::vector<std::string> seen;
    for (const auto& l : body) {
      auto a = require_assignment(l);
      if (std::find(seen.begin(), seen.end(), a.key) != seen.end())
        throw Error(ErrorKind::DuplicateDeclaration, "task key " + a.key);
      seen.push_back(a.key);
      auto reference = [&](std::string& slot) {
        if (!valid_name(a.value)) syntax(l, "invalid reference '" + a.value + "'");
        slot = a.value;
      };
      if (a.key == "name") t.name = a.value;
      else if (a.key == "field") reference(t.field);
      else if (a.key == "equation") reference(t.equation);
      else if (a.key == "covering") reference(t.covering);
      else if (a.key == "lambda") reference(t.lambda);
      else if (a.key == "mu") reference(t.mu);
      else if (a.key == "gauge") reference(t.gauge);
      else if (a.key == "mode") {
        if (a.value != "standard" && a.value != "lambda" && a.value != "mu")
          syntax(l, "mode must be standard, lambda or mu");
        t.mode = a.value;
      } else if (a.key == "order") {
        if (a.value.empty() || a.value.size() > 3 ||
            !std::all_of(a.value.begin(), a.value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          syntax(l, "order must be a small non-negative integer");
        t.order = static_cast<unsigned>(std::stoul(a.value));
      } else if (a.key == "eta") t.eta = expr(l, a.value, a.column);
      else if (a.key == "zeta") t.zeta = expr(l, a.value, a.column);
      else if (a.key == "G") t.G = matrix(l, a.value, a.column);
      else syntax(l, "unknown task key '" + a.key + "'");
    }
    if (t.name.empty()) t.name = kind;
    doc_.tasks.push_back(std::move(t));
  }

  void validate() const {
    for (const auto& c : doc_.coverings) (void)doc_.equation(c.base);
    for (const auto& t : doc_.tasks) {
      if (!t.field.empty()) (void)doc_.field(t.field);
      if (!t.equation.empty()) (void)doc_.equation(t.equation);
      if (!t.covering.empty()) (void)doc_.covering(t.covering);
      if (!t.lambda.empty()) (void)doc_.lambda(t.lambda);
      if (!t.mu.empty()) (void)doc_.mu(t.mu);
      if (!t.gauge.empty()) (void)doc_.gauge(t.gauge);
    }
  }

  ProblemDocument doc_;
};

}  // namespace

ProblemDocument parse_problem(std::string_view src) { return DocumentParser().run(src); }

std::string render_problem(const ProblemDocument& doc) {
  const auto& d = doc.decl;
  std::ostringstream out;
  auto names = [&](const char* header, const std::vector<std::string>& v) {
    if (v.empty()) return;
    out << "[" << header << "]\n";
    for (const auto& n : v) out << n << "\n";
    out << "\n";
  };
  names("vars", d.independents);
  names("deps", d.dependents);
  names("aux", d.auxiliaries);
  names("constants", d.constants);
  if (!d.functions.empty()) {
    out << "[functions]\n";
    for (const auto& f : d.functions) {
      out << f.name << "(";
      for (std::size_t k = 0; k < f.args.size(); ++k) out << (k ? ", " : "") << f.args[k];
      out << ")\n";
    }
    out << "\n";
  }
  for (const auto& e : doc.equations) {
    out << "[equation " << e.name << "]\n";
    for (const auto& l : e.lines) {
      if (l.lhs) out << print(*l.lhs, d) << " = ";
      out << print(l.rhs, d) << "\n";
    }
    out << "\n";
  }
  for (const auto& c : doc.coverings) {
    out << "[covering " << c.name << "]\nbase = " << c.base << "\n";
    if (c.A) out << "A = " << print(*c.A, d) << "\nB = " << print(*c.B, d) << "\n";
    for (const auto& r : c.rules)
      out << d.auxiliaries.at(r.aux) << "_" << d.independents.at(r.direction) << " = " << print(r.value, d) << "\n";
    out << "\n";
  }
  for (const auto& f : doc.fields) {
    out << "[field " << f.name << "]\n";
    auto component = [&](const std::vector<std::string>& n, const std::vector<Expression>& v) {
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out << n.at(k) << " = " << print(v[k], d) << "\n";
    };
    component(d.independents, f.field.xi);
    component(d.dependents, f.field.phi);
    component(d.auxiliaries, f.field.eta);
    out << "\n";
  }
  for (const auto& l : doc.lambdas) out << "[lambda " << l.name << "]\nvalue = " << print(l.value, d) << "\n\n";
  for (const auto& m : doc.mus) {
    out << "[mu " << m.name << "]\n";
    for (std::size_t i = 0; i < m.mu.lambdas.size(); ++i)
      out << d.independents.at(i) << " = " << print(m.mu.lambdas[i], d) << "\n";
    out << "\n";
  }
  for (const auto& g : doc.gauges) out << "[gauge " << g.name << "]\nR = " << print(g.R, d) << "\n\n";
  for (const auto& t : doc.tasks) {
    out << "[task " << t.kind << "]\nname = " << t.name << "\n";
    auto ref = [&](const char* key, const std::string& v) {
      if (!v.empty()) out << key << " = " << v << "\n";
    };
    ref("field", t.field);
    ref("equation", t.equation);
    ref("covering", t.covering);
    ref("mode", t.mode);
    ref("lambda", t.lambda);
    ref("mu", t.mu);
    ref("gauge", t.gauge);
    if (t.G) out << "G = " << print(*t.G, d) << "\n";
    if (t.order) out << "order = " << *t.order << "\n";
    if (t.eta) out << "eta = " << print(*t.eta, d) << "\n";
    if (t.zeta) out << "zeta = " << print(*t.zeta, d) << "\n";
    out << "\n";
  }
  std::string text = out.str();
  while (text.size() >= 2 && text[text.size() - 1] == '\n' && text[text.size() - 2] == '\n') text.pop_back();
  return text;
}

}  // namespace twistkit

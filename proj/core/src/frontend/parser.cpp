#include "twistkit/frontend/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

void require_fresh(const Declarations& d, const std::string& name) {
  if (name.empty()) throw Error(ErrorKind::SyntaxError, "empty name");
  if (name == "exp") throw Error(ErrorKind::DuplicateDeclaration, "exp is reserved");
  if (d.is_declared(name)) throw Error(ErrorKind::DuplicateDeclaration, name);
}

std::size_t find_index(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? names.size() : static_cast<std::size_t>(it - names.begin());
}

}  // namespace

void Declarations::declare_independent(const std::string& name) {
  require_fresh(*this, name);
  independents.push_back(name);
}
void Declarations::declare_dependent(const std::string& name) {
  require_fresh(*this, name);
  dependents.push_back(name);
}
void Declarations::declare_auxiliary(const std::string& name) {
  require_fresh(*this, name);
  auxiliaries.push_back(name);
}
void Declarations::declare_constant(const std::string& name) {
  require_fresh(*this, name);
  constants.push_back(name);
}
void Declarations::declare_function(FunctionDecl f) {
  require_fresh(*this, f.name);
  if (f.args.empty()) throw Error(ErrorKind::ArityError, f.name + " needs at least one argument");
  for (const auto& a : f.args)
    if (!coordinate(a)) throw Error(ErrorKind::UndeclaredReference, a);
  functions.push_back(std::move(f));
}

bool Declarations::is_declared(const std::string& name) const {
  auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), name) != v.end(); };
  return in(independents) || in(dependents) || in(auxiliaries) || in(constants) || function(name) != nullptr;
}

const FunctionDecl* Declarations::function(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

std::optional<Atom> Declarations::coordinate(const std::string& name) const {
  const std::size_t p = independents.size();
  if (auto i = find_index(independents, name); i < p) return Atom::independent(i);
  if (auto a = find_index(dependents, name); a < dependents.size()) return Atom::jet(a, MultiIndex(p));
  if (auto b = find_index(auxiliaries, name); b < auxiliaries.size()) return Atom::aux(b, MultiIndex(p));
  return std::nullopt;
}

Symbols Declarations::symbols() const { return Symbols{independents, dependents, auxiliaries}; }

JetSpace Declarations::space(unsigned n) const {
  return JetSpace(independents.size(), dependents.size(), auxiliaries.size(), n);
}

std::string print(const Expression& e, const Declarations& decl) { return to_string(e, decl.symbols()); }

std::string print(const Matrix& m, const Declarations& decl) {
  auto s = decl.symbols();
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j), s);
    }
    out += "]";
  }
  return out + "]";
}

namespace {

enum class Tok { Number, Ident, Op, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line, std::size_t column) : src_(src), line_(line), col_(column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        t.kind = Tok::Number;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
          t.text += take();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += take();
        while (pos_ < src_.size() && src_[pos_] == '\'') t.text += take();
      } else if (std::string_view("+-*/^(),[]").find(c) != std::string_view::npos) {
        t.kind = Tok::Op;
        t.text = take();
      } else {
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                                                ": unexpected character '" + std::string(1, c) + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
};

Rational parse_number(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(text);
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.find('.') != std::string::npos) return Rational(-1);  // flagged by caller
  mpz_class scale = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
  mpz_class n(whole.empty() ? "0" : whole);
  mpz_class f(frac.empty() ? "0" : frac);
  Rational r(n * scale + f, scale);
  r.canonicalize();
  return r;
}

// Splits `sub` into a sequence of names, longest names tried first.
std::optional<std::vector<std::size_t>> decompose(const std::string& sub, const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return names[a].size() > names[b].size(); });
  std::vector<std::size_t> picked;
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == sub.size()) return true;
    for (std::size_t i : order) {
      const auto& n = names[i];
      if (n.empty() || sub.compare(pos, n.size(), n) != 0) continue;
      picked.push_back(i);
      if (rec(pos + n.size())) return true;
      picked.pop_back();
    }
    return false;
  };
  if (sub.empty() || !rec(0)) return std::nullopt;
  return picked;
}

std::optional<MultiIndex> multi_index_of(const std::string& sub, const std::vector<std::string>& names) {
  auto parts = decompose(sub, names);
  if (!parts) return std::nullopt;
  MultiIndex J(names.size());
  for (std::size_t i : *parts) J = J.bumped(i);
  return J;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Declarations& decl) : toks_(std::move(toks)), decl_(decl) {}

  Expression parse_all() {
    Expression e = expr();
    expect_end();
    return e;
  }

  Matrix parse_matrix_all() {
    expect("[");
    std::vector<std::vector<Expression>> rows;
    do {
      expect("[");
      std::vector<Expression> row;
      row.push_back(expr());
      while (accept(",")) row.push_back(expr());
      expect("]");
      if (!rows.empty() && rows.front().size() != row.size()) fail(toks_[pos_ - 1], "ragged matrix rows");
      rows.push_back(std::move(row));
    } while (accept(","));
    expect("]");
    expect_end();
    return Matrix::from_rows(rows);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
  bool accept(const char* op) {
    if (!is_op(op)) return false;
    ++pos_;
    return true;
  }
  void expect(const char* op) {
    if (!accept(op)) fail(peek(), std::string("expected '") + op + "'" + found());
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
  }
  std::string found() const { return peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"; }

  Expression expr() {
    Expression e = term();
    while (true) {
      if (accept("+")) e += term();
      else if (accept("-")) e -= term();
      else return e;
    }
  }

  Expression term() {
    Expression e = unary();
    while (true) {
      if (accept("*")) {
        e *= unary();
      } else if (is_op("/")) {
        ++pos_;
        e /= unary();
      } else {
        return e;
      }
    }
  }

  Expression unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power_expr();
  }

  Expression power_expr() {
    Expression base = primary();
    if (!is_op("^")) return base;
    const Token& at = peek();
    ++pos_;
    Expression exponent = unary();
    if (auto c = exponent.constant_value(); c && c->get_den() == 1) {
      if (!c->get_num().fits_slong_p()) fail(at, "exponent out of range");
      return pow(base, c->get_num().get_si());
    }
    try {
      return power(base, exponent);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidArgument) throw;
      fail(at, e.detail());
    }
  }

  Expression primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        if (std::count(t.text.begin(), t.text.end(), '.') > 1) fail(t, "malformed number '" + t.text + "'");
        return Expression(parse_number(t.text));
      }
      case Tok::Ident:
        ++pos_;
        return identifier(t);
      case Tok::Op:
        if (t.text == "(") {
          ++pos_;
          Expression e = expr();
          expect(")");
          return e;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Tok::End:
        fail(t, "unexpected end of input");
    }
    fail(t, "unexpected token");
  }

  std::vector<Atom> call_arguments(const Token& head) {
    std::vector<Atom> args;
    expect("(");
    if (is_op(")")) fail(peek(), "empty argument list");
    do {
      const Token at = peek();
      Expression e = expr();
      auto atoms = e.atoms();
      if (atoms.size() != 1 || !(e == Expression(*atoms.begin())) || !atoms.begin()->is_coordinate() ||
          atoms.begin()->order() != 0)
        fail(at, "arguments of " + head.text + " must be order-zero coordinates");
      args.push_back(*atoms.begin());
    } while (accept(","));
    expect(")");
    return args;
  }

  std::vector<Atom> declared_arguments(const FunctionDecl& f) const {
    std::vector<Atom> args;
    for (const auto& a : f.args) args.push_back(*decl_.coordinate(a));
    return args;
  }

  std::vector<std::string> argument_names(const std::vector<Atom>& args) const {
    auto s = decl_.symbols();
    std::vector<std::string> names;
    for (const auto& a : args) names.push_back(to_string(a, s));
    return names;
  }

  Expression apply_function(const Token& t, const FunctionDecl& f, const std::string& sub, std::size_t primes) {
    std::vector<Atom> args = is_op("(") ? call_arguments(t) : declared_arguments(f);
    if (args.size() != f.args.size())
      throw Error(ErrorKind::ArityError, f.name + " takes " + std::to_string(f.args.size()) + " argument(s), got " +
                                             std::to_string(args.size()));
    MultiIndex K(args.size());
    if (primes > 0) {
      if (args.size() != 1) fail(t, "primes need a one-argument function");
      for (std::size_t k = 0; k < primes; ++k) K = K.bumped(0);
    } else if (!sub.empty()) {
      auto J = multi_index_of(sub, argument_names(args));
      if (!J) fail(t, "subscript '" + sub + "' does not match the arguments of " + f.name);
      K = *J;
    }
    return Expression(Atom::function(f.name, std::move(args), std::move(K)));
  }

  Expression identifier(const Token& t) {
    std::string name = t.text;
    std::size_t primes = 0;
    while (!name.empty() && name.back() == '\'') {
      name.pop_back();
      ++primes;
    }

    if (name == "exp" && primes == 0) {
      expect("(");
      Expression arg = expr();
      expect(")");
      return twistkit::exp(arg);
    }
    if (const auto* f = decl_.function(name)) return apply_function(t, *f, "", primes);
    if (primes > 0) {
      if (decl_.is_declared(name)) fail(t, "primes apply to functions only");
      throw Error(ErrorKind::UnknownSymbol, name);
    }
    if (auto c = decl_.coordinate(name)) return Expression(*c);
    if (std::find(decl_.constants.begin(), decl_.constants.end(), name) != decl_.constants.end())
      return Expression(Atom::constant(name));

    for (std::size_t cut = name.find('_'); cut != std::string::npos; cut = name.find('_', cut + 1)) {
      std::string head = name.substr(0, cut);
      std::string sub = name.substr(cut + 1);
      if (const auto* f = decl_.function(head)) return apply_function(t, *f, sub, 0);
      auto a = find_index(decl_.dependents, head);
      auto b = find_index(decl_.auxiliaries, head);
      if (a == decl_.dependents.size() && b == decl_.auxiliaries.size()) continue;
      auto J = multi_index_of(sub, decl_.independents);
      if (!J) fail(t, "subscript '" + sub + "' is not a word in the independent variables");
      return Expression(a < decl_.dependents.size() ? Atom::jet(a, *J) : Atom::aux(b, *J));
    }
    throw Error(ErrorKind::UnknownSymbol, name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Declarations& decl_;
};

}  // namespace

Expression parse_expression(std::string_view src, const Declarations& decl, std::size_t line, std::size_t column) {
  return Parser(Lexer(src, line, column).run(), decl).parse_all();
}

Matrix parse_matrix(std::string_view src, const Declarations& decl, std::size_t line, std::size_t column) {
  return Parser(Lexer(src, line, column).run(), decl).parse_matrix_all();
}

}  // namespace twistkit

#include "twistkit/symbolic/expression.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  auto q = p.divide_exact(d);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact division in rational arithmetic");
  return *q;
}

}  // namespace

Expression Expression::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator is identically zero");
  Expression out;
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    out.num_ = num.scaled(Rational(1) / den.constant_value());
    return out;
  }
  Polynomial g = gcd(num, den);
  Polynomial n = g.is_constant() ? num : exact_div(num, g);
  Polynomial d = g.is_constant() ? den : exact_div(den, g);
  Rational lc = d.leading().coef;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

std::optional<Rational> Expression::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_value();
}

std::set<Atom> Expression::atoms() const {
  auto out = num_.atoms();
  auto d = den_.atoms();
  out.insert(d.begin(), d.end());
  return out;
}

namespace {

void collect_coordinates(const Atom& a, std::set<Atom>& out) {
  switch (a.kind()) {
    case AtomKind::Independent:
    case AtomKind::Jet:
    case AtomKind::AuxJet:
      out.insert(a);
      break;
    case AtomKind::Constant:
      break;
    case AtomKind::Function:
      for (const auto& arg : a.args()) out.insert(arg);
      break;
    case AtomKind::Power:
    case AtomKind::Exp:
      for (const auto& inner : a.payload().atoms()) collect_coordinates(inner, out);
      break;
  }
}

}  // namespace

std::set<Atom> Expression::coordinates() const {
  std::set<Atom> out;
  for (const auto& a : atoms()) collect_coordinates(a, out);
  return out;
}

bool Expression::has_transcendental() const {
  for (const auto& a : atoms())
    if (a.is_transcendental()) return true;
  return false;
}

unsigned Expression::jet_order() const {
  unsigned n = 0;
  for (const auto& c : coordinates()) n = std::max(n, c.order());
  return n;
}

Expression Expression::operator-() const {
  Expression out = *this;
  out.num_ = -out.num_;
  return out;
}

Expression& Expression::operator+=(const Expression& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const bool c1 = den_.is_constant();
  const bool c2 = o.den_.is_constant();
  if (c1 && c2) {
    num_ += o.num_;
    return *this;
  }
  if (c2) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (c1) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    return *this = fraction(n, den_);
  }
  Polynomial g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  Polynomial d1 = exact_div(den_, g);
  Polynomial d2 = exact_div(o.den_, g);
  Polynomial n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = Expression();
  Polynomial g2 = gcd(n, g);
  if (g2.is_constant()) {
    num_ = std::move(n);
    den_ = d1 * o.den_;
  } else {
    num_ = exact_div(n, g2);
    den_ = d1 * exact_div(o.den_, g2);
  }
  return *this;
}

Expression& Expression::operator-=(const Expression& o) { return *this += -o; }

Expression& Expression::operator*=(const Expression& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Expression();
  const bool c1 = den_.is_constant();
  const bool c2 = o.den_.is_constant();
  if (c1 && c2) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial n1 = num_;
  Polynomial d2 = o.den_;
  if (!c2) {
    Polynomial g1 = gcd(num_, o.den_);
    if (!g1.is_constant()) {
      n1 = exact_div(num_, g1);
      d2 = exact_div(o.den_, g1);
    }
  }
  Polynomial n2 = o.num_;
  Polynomial d1 = den_;
  if (!c1) {
    Polynomial g2 = gcd(o.num_, den_);
    if (!g2.is_constant()) {
      n2 = exact_div(o.num_, g2);
      d1 = exact_div(den_, g2);
    }
  }
  Polynomial n = n1 * n2;
  Polynomial d = d1 * d2;
  Rational lc = d.leading().coef;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Expression& Expression::operator/=(const Expression& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by an identically zero expression");
  Expression inv;
  Rational lc = o.num_.leading().coef;
  inv.num_ = o.den_.scaled(Rational(1) / lc);
  inv.den_ = o.num_.scaled(Rational(1) / lc);
  return *this *= inv;
}

std::strong_ordering compare(const Expression& a, const Expression& b) {
  if (auto c = compare(a.num_, b.num_); c != 0) return c;
  return compare(a.den_, b.den_);
}

Expression pow(const Expression& e, long k) {
  if (k == 0) return Expression(1);
  if (k < 0) return pow(Expression(1) / e, -k);
  if (k == 1) return e;
  return Expression::fraction(e.num().pow(static_cast<unsigned>(k)), e.den().pow(static_cast<unsigned>(k)));
}

namespace {

// Splits |c| into its integer part and the fractional part in [0, 1), so that
// c and -c share generators.
struct SplitRational {
  bool negative;
  long whole;
  Rational frac;
};

SplitRational split_rational(const Rational& c) {
  Rational mag = abs(c);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), mag.get_num_mpz_t(), mag.get_den_mpz_t());
  if (!fl.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "exponent out of range");
  return {c < 0, fl.get_si(), mag - Rational(fl)};
}

Expression signed_factor(const SplitRational& s, const Expression& whole, const Expression& frac) {
  Expression f(1);
  if (s.whole != 0) f *= pow(whole, s.whole);
  if (s.frac != 0) f *= frac;
  return s.negative ? Expression(1) / f : f;
}

}  // namespace

Expression exp(const Expression& arg) {
  if (arg.is_zero()) return Expression(1);
  if (!arg.is_polynomial()) {
    if (arg.num().leading().coef < 0) return Expression(1) / Expression(Atom::exp_raw(-arg));
    return Expression(Atom::exp_raw(arg));
  }
  Expression result(1);
  for (const auto& t : arg.num().terms()) {
    auto sp = split_rational(t.coef);
    Expression whole(Atom::exp_raw(Expression(Polynomial(t.mono, Rational(1)))));
    Expression frac = sp.frac == 0 ? Expression(1) : Expression(Atom::exp_raw(Expression(Polynomial(t.mono, sp.frac))));
    result *= signed_factor(sp, whole, frac);
  }
  return result;
}

Expression power(const Expression& base, const Expression& exponent) {
  if (!exponent.is_polynomial())
    throw Error(ErrorKind::InvalidArgument, "exponent must be linear in constant symbols");
  for (const auto& t : exponent.num().terms()) {
    if (t.mono.is_one()) continue;
    if (t.mono.degree() != 1 || t.mono.factors()[0].first.kind() != AtomKind::Constant)
      throw Error(ErrorKind::InvalidArgument, "exponent must be linear in constant symbols");
  }
  if (auto c = exponent.constant_value(); c && c->get_den() == 1) {
    if (!c->get_num().fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "exponent out of range");
    return pow(base, c->get_num().get_si());
  }
  if (base.is_zero()) throw Error(ErrorKind::InvalidArgument, "symbolic power of zero");
  if (base == Expression(1)) return Expression(1);
  if (!base.is_polynomial())
    return power(Expression(base.num()), exponent) / power(Expression(base.den()), exponent);
  Expression result(1);
  for (const auto& t : exponent.num().terms()) {
    auto sp = split_rational(t.coef);
    Expression whole = t.mono.is_one() ? base : Expression(Atom::power_raw(base, Expression(Polynomial(t.mono, Rational(1)))));
    Expression frac =
        sp.frac == 0 ? Expression(1) : Expression(Atom::power_raw(base, Expression(Polynomial(t.mono, sp.frac))));
    result *= signed_factor(sp, whole, frac);
  }
  return result;
}

namespace {

struct Substituter {
  const std::map<Atom, Expression>& sigma;
  std::map<Atom, std::optional<Expression>> cache;  // nullopt = unchanged

  const std::optional<Expression>& replacement(const Atom& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    std::optional<Expression> r;
    if (auto s = sigma.find(a); s != sigma.end()) {
      r = s->second;
    } else {
      switch (a.kind()) {
        case AtomKind::Exp: {
          Expression arg = apply(a.payload());
          if (!(arg == a.payload())) r = twistkit::exp(arg);
          break;
        }
        case AtomKind::Power: {
          Expression base = apply(a.payload());
          if (!(base == a.payload())) r = twistkit::power(base, a.exponent());
          break;
        }
        case AtomKind::Function: {
          bool changed = false;
          std::vector<Atom> args;
          for (const auto& arg : a.args()) {
            auto s2 = sigma.find(arg);
            if (s2 == sigma.end()) {
              args.push_back(arg);
              continue;
            }
            const auto& value = s2->second;
            auto atoms = value.atoms();
            if (!value.is_polynomial() || value.num().size() != 1 || atoms.size() != 1 ||
                value.num().leading().coef != 1 || value.num().leading().mono.degree() != 1 ||
                !atoms.begin()->is_coordinate() || atoms.begin()->order() != 0) {
              throw Error(ErrorKind::InvalidArgument,
                          "cannot substitute a non-coordinate into the argument of " + a.name());
            }
            args.push_back(*atoms.begin());
            changed = true;
          }
          if (changed) r = Expression(Atom::function(a.name(), args, a.multi()));
          break;
        }
        default:
          break;
      }
    }
    return cache.emplace(a, std::move(r)).first->second;
  }

  // Substitutes into a polynomial, returning the canonical rational result.
  Expression apply_poly(const Polynomial& p) {
    std::map<Atom, unsigned> changed;  // atom -> max degree in p
    for (const auto& t : p.terms()) {
      for (const auto& [atom, e] : t.mono.factors()) {
        if (!replacement(atom)) continue;
        auto& d = changed[atom];
        d = std::max(d, e);
      }
    }
    if (changed.empty()) return Expression(p);

    std::map<std::pair<Atom, unsigned>, Polynomial> num_pows;
    std::map<std::pair<Atom, unsigned>, Polynomial> den_pows;
    auto num_pow = [&](const Atom& a, unsigned k) -> const Polynomial& {
      auto key = std::make_pair(a, k);
      auto it = num_pows.find(key);
      if (it != num_pows.end()) return it->second;
      return num_pows.emplace(key, replacement(a)->num().pow(k)).first->second;
    };
    auto den_pow = [&](const Atom& a, unsigned k) -> const Polynomial& {
      auto key = std::make_pair(a, k);
      auto it = den_pows.find(key);
      if (it != den_pows.end()) return it->second;
      return den_pows.emplace(key, replacement(a)->den().pow(k)).first->second;
    };

    Polynomial numerator;
    for (const auto& t : p.terms()) {
      Monomial kept;
      Polynomial factor(Monomial(), t.coef);
      std::map<Atom, unsigned> used;
      for (const auto& [atom, e] : t.mono.factors()) {
        if (changed.contains(atom)) {
          used[atom] = e;
        } else {
          kept = kept * Monomial::of(atom, e);
        }
      }
      for (const auto& [atom, kmax] : changed) {
        unsigned e = used.contains(atom) ? used[atom] : 0;
        if (e > 0) factor = factor * num_pow(atom, e);
        if (kmax > e && !replacement(atom)->is_polynomial()) factor = factor * den_pow(atom, kmax - e);
      }
      numerator += factor.times(kept);
    }
    Polynomial denominator(1);
    for (const auto& [atom, kmax] : changed)
      if (!replacement(atom)->is_polynomial()) denominator = denominator * den_pow(atom, kmax);
    return Expression::fraction(numerator, denominator);
  }

  Expression apply(const Expression& e) {
    Expression n = apply_poly(e.num());
    if (e.is_polynomial()) return n;
    Expression d = apply_poly(e.den());
    if (d.is_zero()) {
      std::string which;
      for (const auto& a : e.den().atoms())
        if (sigma.contains(a)) which += (which.empty() ? "" : ", ") + std::to_string(static_cast<int>(a.kind())) + "#" + std::to_string(a.index());
      throw Error(ErrorKind::DivisionByZero, "substitution makes the denominator vanish (substituted atoms: " + which + ")");
    }
    return n / d;
  }
};

}  // namespace

Expression substitute(const Expression& e, const std::map<Atom, Expression>& sigma) {
  if (sigma.empty()) return e;
  Substituter s{sigma, {}};
  return s.apply(e);
}

bool is_zero(const Expression& e) { return e.is_zero(); }

}  // namespace twistkit

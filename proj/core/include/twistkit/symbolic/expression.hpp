#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>

#include "twistkit/symbolic/atom.hpp"
#include "twistkit/symbolic/polynomial.hpp"

namespace twistkit {

/// Canonical rational function num/den: gcd(num, den) = 1 and den is monic.
/// Two expressions are equal iff their canonical fields coincide.
class Expression {
 public:
  Expression() : den_(1) {}
  Expression(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Expression(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Expression(const Atom& a) : num_(a), den_(1) {}
  explicit Expression(const Polynomial& p) : num_(p), den_(1) {}

  /// Canonicalizes; throws DivisionByZero when den is the zero polynomial.
  static Expression fraction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> constant_value() const;

  /// Atoms occurring at top level of num or den.
  std::set<Atom> atoms() const;
  /// Coordinates x / u_J / w_J the expression depends on, looking inside
  /// exp arguments, power bases and function arguments.
  std::set<Atom> coordinates() const;
  bool has_transcendental() const;
  /// Max jet order over Jet and AuxJet coordinates (0 if none).
  unsigned jet_order() const;

  Expression operator-() const;
  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const Expression& o);
  Expression& operator/=(const Expression& o);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(Expression a, const Expression& b) { return a *= b; }
  friend Expression operator/(Expression a, const Expression& b) { return a /= b; }

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering compare(const Expression& a, const Expression& b);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Integer power, negative exponents allowed (DivisionByZero on 0^-k).
Expression pow(const Expression& e, long k);

/// exp(arg) in canonical form: polynomial arguments split term by term into
/// exp(monomial) generators, so exp(a)*exp(-a) == 1.
Expression exp(const Expression& arg);

/// base^exponent for an exponent linear in constant symbols. Integer parts
/// are expanded, so u^(m+1) == u * u^m.
Expression power(const Expression& base, const Expression& exponent);

/// Simultaneous replacement of atoms, followed by canonicalization. Atoms
/// nested in exp/power payloads are substituted recursively; opaque-function
/// arguments may only be replaced by other coordinates.
Expression substitute(const Expression& e, const std::map<Atom, Expression>& sigma);

bool is_zero(const Expression& e);

}  // namespace twistkit

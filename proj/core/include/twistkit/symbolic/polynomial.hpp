#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "twistkit/symbolic/atom.hpp"

namespace twistkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Product of atom powers, factors kept in ascending atom order.
class Monomial {
 public:
  using Factor = std::pair<Atom, unsigned>;

  Monomial() = default;
  static Monomial of(const Atom& a, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree_in(const Atom& a) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(): other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(const Atom& a) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Graded lexicographic; earlier atoms are more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are sorted by descending
/// graded-lex order and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Atom& a);
  Polynomial(const Monomial& m, const Rational& c);

  /// Takes arbitrary terms, sorts and merges them.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;

  unsigned degree_in(const Atom& a) const;
  std::set<Atom> atoms() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  /// q with q * d == *this, if it exists.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  /// Generalized division with remainder against several divisors.
  std::pair<std::vector<Polynomial>, Polynomial> reduce_by(const std::vector<Polynomial>& divisors) const;

  /// Monic in the graded-lex leading coefficient (zero stays zero).
  Polynomial monic() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  Polynomial divide_monomial(const Monomial& m) const;

  /// Coefficients in `a`: result[k] multiplies a^k.
  std::vector<Polynomial> coefficients_in(const Atom& a) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, const Atom& a);
  /// Plain partial derivative treating atoms as independent indeterminates.
  Polynomial partial(const Atom& a) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

/// Monic gcd over Q (zero iff both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Content of `p` with respect to `a` (monic gcd of its coefficients in `a`).
Polynomial content_in(const Polynomial& p, const Atom& a);

/// Squarefree decomposition of a monic polynomial: p = prod f_i^{k_i} with the
/// f_i monic, squarefree, pairwise coprime, k_i distinct and increasing.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p);

}  // namespace twistkit

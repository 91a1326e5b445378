#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twistkit/jet/jet_space.hpp"

namespace twistkit {

/// Field expanded in coordinate directions: sum of coeff(c) d/dc over
/// coordinate atoms c. Zero coefficients are never stored.
class CoordinateField {
 public:
  CoordinateField() = default;

  void set(const Atom& coordinate, const Expression& coeff);
  void add(const Atom& coordinate, const Expression& coeff);
  /// Zero when the direction is absent.
  Expression at(const Atom& coordinate) const;
  const std::map<Atom, Expression>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Directional derivative of e along the field.
  Expression apply(const Expression& e) const;
  CoordinateField map(const std::function<Expression(const Expression&)>& f) const;

  CoordinateField operator-() const;
  friend CoordinateField operator+(const CoordinateField& a, const CoordinateField& b);
  friend CoordinateField operator-(const CoordinateField& a, const CoordinateField& b);
  friend CoordinateField operator*(const Expression& s, const CoordinateField& f);
  friend bool operator==(const CoordinateField& a, const CoordinateField& b) = default;

 private:
  std::map<Atom, Expression> coeffs_;
};

/// [A, B]^c = A(B^c) - B(A^c).
CoordinateField bracket(const CoordinateField& a, const CoordinateField& b);

/// xi^i d_i + phi^a d_a + eta^b d_b.
struct VectorField {
  std::vector<Expression> xi;
  std::vector<Expression> phi;
  std::vector<Expression> eta;

  static VectorField zero(const JetSpace& space);
  bool is_vertical() const;
  CoordinateField as_coordinate_field(const JetSpace& space) const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

using JetKey = std::pair<std::size_t, MultiIndex>;

/// xi^i d_i + psi^a_J d_a^J + chi^b_J d_b^J, with |J| <= order.
struct ProlongedField {
  unsigned order = 0;
  std::vector<Expression> xi;
  std::map<JetKey, Expression> psi;
  std::map<JetKey, Expression> chi;

  const Expression& psi_at(std::size_t a, const MultiIndex& J) const;
  const Expression& chi_at(std::size_t b, const MultiIndex& J) const;
  /// Coefficients of order <= k.
  ProlongedField truncated(unsigned k) const;
  CoordinateField as_coordinate_field(const JetSpace& space) const;
  friend bool operator==(const ProlongedField&, const ProlongedField&) = default;
};

}  // namespace twistkit

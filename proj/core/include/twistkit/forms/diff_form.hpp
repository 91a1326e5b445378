#pragma once

#include <map>
#include <vector>

#include "twistkit/jet/vector_field.hpp"

namespace twistkit {

/// Homogeneous exterior form on jet space. A basis k-form is a strictly
/// increasing tuple of coordinate atoms, each standing for its differential.
class DiffForm {
 public:
  using Basis = std::vector<Atom>;

  explicit DiffForm(unsigned degree = 0) : degree_(degree) {}
  static DiffForm function(const Expression& f);
  /// dc for a coordinate atom c.
  static DiffForm differential_of(const Atom& coordinate);

  unsigned degree() const noexcept { return degree_; }
  const std::map<Basis, Expression>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Expression coefficient(const Basis& b) const;

  /// Adds c * (d b_1 ^ ... ^ d b_k), sorting the factors with sign.
  void add(Basis b, const Expression& c);

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Expression& s, const DiffForm& a);
  DiffForm map(const std::function<Expression(const Expression&)>& f) const;
  friend bool operator==(const DiffForm& a, const DiffForm& b);

 private:
  unsigned degree_;
  std::map<Basis, Expression> terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
/// Differential over all coordinates, jet variables included.
DiffForm exterior_d(const DiffForm& a);
DiffForm interior(const CoordinateField& Y, const DiffForm& a);
/// Cartan formula d(Y _| a) + Y _| da.
DiffForm lie_derivative(const CoordinateField& Y, const DiffForm& a);

/// du^a_J - u^a_{J,i} dx^i; OrderTooHigh unless |J| < n.
DiffForm contact_form(std::size_t a, const MultiIndex& J, const JetSpace& space);

/// Rewrites du_K = theta_K + u_{K,i} dx^i wherever theta_K exists on the space
/// and accepts iff every remaining term contains a contact factor. Degrees 1
/// and 2 only (UnsupportedDegree otherwise; degree 0 is a member iff zero).
bool is_in_contact_ideal(const DiffForm& w, const JetSpace& space);

}  // namespace twistkit

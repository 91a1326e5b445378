#include "twistkit/jet/vector_field.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

void CoordinateField::set(const Atom& coordinate, const Expression& coeff) {
  if (!coordinate.is_coordinate()) throw Error(ErrorKind::InvalidArgument, "field direction must be a coordinate");
  if (coeff.is_zero()) coeffs_.erase(coordinate);
  else coeffs_[coordinate] = coeff;
}

void CoordinateField::add(const Atom& coordinate, const Expression& coeff) { set(coordinate, at(coordinate) + coeff); }

Expression CoordinateField::at(const Atom& coordinate) const {
  auto it = coeffs_.find(coordinate);
  return it == coeffs_.end() ? Expression() : it->second;
}

Expression CoordinateField::apply(const Expression& e) const {
  Derivation d([this](const Atom& a) -> std::optional<Expression> {
    if (a.is_coordinate()) return at(a);
    return std::nullopt;
  });
  return d(e);
}

CoordinateField CoordinateField::map(const std::function<Expression(const Expression&)>& f) const {
  CoordinateField out;
  for (const auto& [c, e] : coeffs_) out.set(c, f(e));
  return out;
}

CoordinateField CoordinateField::operator-() const {
  CoordinateField out = *this;
  for (auto& [c, e] : out.coeffs_) e = -e;
  return out;
}

CoordinateField operator+(const CoordinateField& a, const CoordinateField& b) {
  CoordinateField out = a;
  for (const auto& [c, e] : b.coeffs_) out.add(c, e);
  return out;
}

CoordinateField operator-(const CoordinateField& a, const CoordinateField& b) { return a + (-b); }

CoordinateField operator*(const Expression& s, const CoordinateField& f) {
  CoordinateField out;
  for (const auto& [c, e] : f.coeffs_) out.set(c, s * e);
  return out;
}

CoordinateField bracket(const CoordinateField& a, const CoordinateField& b) {
  std::set<Atom> dirs;
  for (const auto& [c, e] : a.coefficients()) dirs.insert(c);
  for (const auto& [c, e] : b.coefficients()) dirs.insert(c);
  CoordinateField out;
  for (const auto& c : dirs) out.set(c, a.apply(b.at(c)) - b.apply(a.at(c)));
  return out;
}

VectorField VectorField::zero(const JetSpace& space) {
  return VectorField{std::vector<Expression>(space.p()), std::vector<Expression>(space.q()),
                     std::vector<Expression>(space.r())};
}

bool VectorField::is_vertical() const {
  for (const auto& e : xi)
    if (!e.is_zero()) return false;
  return true;
}

CoordinateField VectorField::as_coordinate_field(const JetSpace& space) const {
  if (xi.size() != space.p() || phi.size() != space.q() || eta.size() > space.r())
    throw Error(ErrorKind::DimensionMismatch, "vector field does not fit the jet space");
  CoordinateField out;
  for (std::size_t i = 0; i < xi.size(); ++i) out.set(space.x(i), xi[i]);
  for (std::size_t a = 0; a < phi.size(); ++a) out.set(space.u(a), phi[a]);
  for (std::size_t b = 0; b < eta.size(); ++b) out.set(space.w(b), eta[b]);
  return out;
}

const Expression& ProlongedField::psi_at(std::size_t a, const MultiIndex& J) const {
  auto it = psi.find({a, J});
  if (it == psi.end()) throw Error(ErrorKind::OrderTooHigh, "prolonged coefficient not available");
  return it->second;
}

const Expression& ProlongedField::chi_at(std::size_t b, const MultiIndex& J) const {
  auto it = chi.find({b, J});
  if (it == chi.end()) throw Error(ErrorKind::OrderTooHigh, "prolonged coefficient not available");
  return it->second;
}

ProlongedField ProlongedField::truncated(unsigned k) const {
  ProlongedField out;
  out.order = std::min(k, order);
  out.xi = xi;
  for (const auto& [key, e] : psi)
    if (key.second.order() <= k) out.psi.emplace(key, e);
  for (const auto& [key, e] : chi)
    if (key.second.order() <= k) out.chi.emplace(key, e);
  return out;
}

CoordinateField ProlongedField::as_coordinate_field(const JetSpace& space) const {
  CoordinateField out;
  for (std::size_t i = 0; i < xi.size(); ++i) out.set(space.x(i), xi[i]);
  for (const auto& [key, e] : psi) out.set(Atom::jet(key.first, key.second), e);
  for (const auto& [key, e] : chi) out.set(Atom::aux(key.first, key.second), e);
  return out;
}

}  // namespace twistkit

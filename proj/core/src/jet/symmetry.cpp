#include "twistkit/jet/symmetry.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

SymmetryReport check_symmetry(const VectorField& X, const EquationSystem& sys, const Twisting& mode, unsigned n,
                              const JetSpace& space) {
  if (n < sys.order())
    throw Error(ErrorKind::InvalidArgument, "prolongation order is below the order of the system");
  JetSpace work = space.n() >= n ? space : space.with_order(n);
  CoordinateField Y = prolong(X, mode, n, work).as_coordinate_field(work);
  Reducer reduce(sys, work);
  SymmetryReport report;
  report.pass = true;
  for (const auto& F : sys.residuals()) {
    Expression r = reduce(Y.apply(F));
    if (!r.is_zero()) report.pass = false;
    report.residuals.push_back(std::move(r));
  }
  return report;
}

CoordinateField commutator(const CoordinateField& a, const CoordinateField& b) { return bracket(a, b); }

VectorField to_vector_field(const CoordinateField& f, const JetSpace& space) {
  VectorField out = VectorField::zero(space);
  for (const auto& [c, e] : f.coefficients()) {
    if (c.order() != 0) throw Error(ErrorKind::InvalidArgument, "field has a jet direction");
    switch (c.kind()) {
      case AtomKind::Independent: out.xi.at(c.index()) = e; break;
      case AtomKind::Jet: out.phi.at(c.index()) = e; break;
      case AtomKind::AuxJet: out.eta.at(c.index()) = e; break;
      default: break;
    }
  }
  return out;
}

IbdpReport check_ibdp(const VectorField& X, const Twisting& twist, const Expression& eta, const Expression& zeta,
                      const JetSpace& space) {
  if (eta.jet_order() != 0) throw Error(ErrorKind::NotInvariant, "eta: must be of order zero");
  const unsigned k = zeta.jet_order();
  JetSpace work = space.with_order(std::max(space.n(), k + 1));
  CoordinateField Y = prolong(X, twist, k + 1, work).as_coordinate_field(work);
  if (!Y.apply(eta).is_zero()) throw Error(ErrorKind::NotInvariant, "eta: not annihilated by the field");
  if (!Y.apply(zeta).is_zero()) throw Error(ErrorKind::NotInvariant, "zeta: not annihilated by the prolonged field");
  Derivation Dx = total_derivation(0, work);
  Expression den = Dx(eta);
  if (den.is_zero()) throw Error(ErrorKind::NotInvariant, "eta: total derivative vanishes");
  IbdpReport report;
  report.zeta_order = k;
  report.quotient = Dx(zeta) / den;
  report.image = Y.apply(report.quotient);
  report.pass = report.image.is_zero();
  return report;
}

}  // namespace twistkit

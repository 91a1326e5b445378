#pragma once

#include <vector>

#include "twistkit/jet/equation_system.hpp"
#include "twistkit/jet/prolongation.hpp"

namespace twistkit {

struct SymmetryReport {
  bool pass = false;
  /// Y[F^l] reduced modulo the system, one per residual.
  std::vector<Expression> residuals;
};

/// Prolongs X with the given twisting to order n and applies it to every
/// residual of sys, reducing on the solution manifold.
SymmetryReport check_symmetry(const VectorField& X, const EquationSystem& sys, const Twisting& mode, unsigned n,
                              const JetSpace& space);

/// Coefficientwise bracket [A, B].
CoordinateField commutator(const CoordinateField& a, const CoordinateField& b);

/// Order-zero field back from its coordinate expansion; InvalidArgument if a
/// jet direction is present.
VectorField to_vector_field(const CoordinateField& f, const JetSpace& space);

struct IbdpReport {
  bool pass = false;
  unsigned zeta_order = 0;
  /// D_x zeta / D_x eta and the prolonged field applied to it.
  Expression quotient;
  Expression image;
};

/// Checks that D_x zeta / D_x eta is annihilated by the (k+1)-th twisted
/// prolongation, where eta is an order-0 and zeta an order-k invariant.
/// NotInvariant("eta"/"zeta") when a precondition fails.
IbdpReport check_ibdp(const VectorField& X, const Twisting& twist, const Expression& eta, const Expression& zeta,
                      const JetSpace& space);

}  // namespace twistkit

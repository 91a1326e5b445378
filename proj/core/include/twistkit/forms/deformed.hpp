#pragma once

#include <vector>

#include "twistkit/forms/diff_form.hpp"
#include "twistkit/jet/matrix_one_form.hpp"

namespace twistkit {

/// Entry (a, b) of mu as the scalar one-form sum_i (Lambda_i)^a_b dx^i.
DiffForm entry_form(const MatrixOneForm& mu, std::size_t a, std::size_t b, const JetSpace& space);

/// d_mu a = da + mu ^ a for a scalar one-form mu.
DiffForm d_mu(const DiffForm& a, const DiffForm& mu);
/// Vector-valued version: (d_mu a)^a = d a^a + mu^a_b ^ a^b.
std::vector<DiffForm> d_mu(const std::vector<DiffForm>& a, const MatrixOneForm& mu, const JetSpace& space);

/// dmu + mu ^ mu as a q x q array of two-forms.
std::vector<std::vector<DiffForm>> curvature(const MatrixOneForm& mu, const JetSpace& space);

/// L^mu_X a = L_X a + mu ^ (X _| a).
DiffForm lie_mu(const CoordinateField& X, const DiffForm& a, const DiffForm& mu);
std::vector<DiffForm> lie_mu(const CoordinateField& X, const std::vector<DiffForm>& a, const MatrixOneForm& mu,
                             const JetSpace& space);
/// L^mu_X Y = [X, Y] - (Y _| mu) X.
CoordinateField lie_mu(const CoordinateField& X, const CoordinateField& Y, const DiffForm& mu);

struct MchReport {
  bool pass = true;
  std::vector<MchResidual> residuals;
};

/// Horizontal Maurer-Cartan check; vacuous for p = 1.
MchReport check_MCH(const MatrixOneForm& mu, const JetSpace& space);

/// nabla_i v = D_i v + Lambda_i v.
std::vector<Expression> nabla_apply(const MatrixOneForm& mu, std::size_t i, const std::vector<Expression>& v,
                                    const JetSpace& space);

struct MuProlongationReport {
  bool pass = false;
  /// xi and psi_0 depend on (x, u) only.
  bool projectable = false;
  /// (a, J) whose deformed Lie derivative leaves the contact ideal.
  std::vector<JetKey> failures;
};

/// Accepts Y iff it projects to (x, u) and L^mu_Y theta_J stays in the contact
/// ideal for every |J| < n.
MuProlongationReport check_mu_prolongation(const ProlongedField& Y, const MatrixOneForm& mu, const JetSpace& space);

}  // namespace twistkit

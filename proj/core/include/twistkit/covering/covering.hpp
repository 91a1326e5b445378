#pragma once

#include <optional>
#include <vector>

#include "twistkit/jet/symmetry.hpp"
#include "twistkit/symbolic/matrix.hpp"

namespace twistkit {

/// Base system plus first-order auxiliary rules w^b_i = H[b][i].
class CoveringSystem {
 public:
  /// `space` is the augmented space (r >= 1). DimensionMismatch unless H is
  /// r x p; InvalidArgument if some H contains w-derivatives.
  CoveringSystem(EquationSystem base, std::vector<std::vector<Expression>> H, JetSpace space);

  const EquationSystem& base() const noexcept { return base_; }
  const std::vector<std::vector<Expression>>& H() const noexcept { return H_; }
  const JetSpace& space() const noexcept { return space_; }
  JetSpace base_space() const { return JetSpace(space_.p(), space_.q(), 0, space_.n()); }
  CoveringSystem with_order(unsigned n) const { return CoveringSystem(base_, H_, space_.with_order(n)); }

  /// Aux rules only, and aux rules together with the base rules.
  const EquationSystem& aux_system() const noexcept { return aux_; }
  const EquationSystem& joint_system() const noexcept { return joint_; }

 private:
  EquationSystem base_;
  std::vector<std::vector<Expression>> H_;
  JetSpace space_;
  EquationSystem aux_;
  EquationSystem joint_;
};

/// D~_i e = D_i e with every w-derivative replaced through the aux rules.
Expression augmented_total_derivative(const Expression& e, std::size_t i, const CoveringSystem& cov);

/// Writes a residual as sum_l c_l F^l by exact division of its numerator by
/// the base numerators; nullopt when a remainder is left.
std::optional<std::vector<Expression>> cofactors(const Expression& residual, const EquationSystem& base);

struct CompatibilityResidual {
  std::size_t beta;
  std::size_t i;
  std::size_t j;
  /// D~_i H_j - D~_j H_i.
  Expression value;
  /// One cofactor per base residual.
  std::vector<Expression> cofactors;
};

struct CompatibilityReport {
  bool pass = false;
  /// All residuals vanish identically: the base is not properly embedded.
  bool trivial = false;
  std::vector<CompatibilityResidual> residuals;
};

/// Residuals for i > j. NoDecomposition if one does not decompose over the base.
CompatibilityReport check_compatibility(const CoveringSystem& cov);

/// W_x = A W, W_t = B W.
struct MatrixCovering {
  Matrix A;
  Matrix B;
};

struct MatrixCoveringReport {
  bool pass = false;
  bool trivial = false;
  /// Z = D_t A - D_x B + A B - B A, its reduction, and per-entry cofactors
  /// (empty when the entry does not decompose).
  Matrix Z;
  Matrix reduced;
  std::vector<std::vector<Expression>> cofactors;
};

MatrixCoveringReport check_matrix_covering(const MatrixCovering& mc, const EquationSystem& base, const JetSpace& space);

struct AugmentedSymmetryReport {
  bool pass = false;
  /// Base residuals first, then w^b_i - H^b_i ordered by (b, i).
  std::vector<Expression> residuals;
};

/// Standard prolongation in the augmented space, applied to all residuals of
/// the joint system and reduced on it.
AugmentedSymmetryReport check_augmented_symmetry(const VectorField& X, const CoveringSystem& cov, unsigned n);

struct SemiClassicalReport {
  bool is_semiclassical = false;
  bool exponential_form = false;
  std::vector<Expression> xi0;
  std::vector<Expression> phi0;
  std::vector<Expression> eta0;
};

/// Semi-classical shape test and, for r = 1, the exponential-form test
/// [d_w, X] = X with extraction of the e^{-w} rescaled coefficients.
SemiClassicalReport check_semiclassical(const VectorField& X, const CoveringSystem& cov);

struct ReconstructionReport {
  bool matched = false;
  VectorField X0;
  MatrixOneForm mu;
  /// Rescaled restriction of the augmented prolongation, on the base space.
  ProlongedField restricted;
  /// The twisted prolongation of X0 it is compared with.
  ProlongedField expected;
  bool mch_pass = true;
};

/// Requires p = 1, r = 1 and a single rule w_x = lambda. NotExponentialForm
/// unless [d_w, X] = X.
ReconstructionReport reconstruct_lambda(const VectorField& X, const CoveringSystem& cov, unsigned n);

/// X vertical with phi = G(w) phi0(x, u). M_i = G^{-1} w^b_i dG/dw^b is
/// restricted through the aux rules to Lambda_i. MCH is checked modulo the base.
ReconstructionReport reconstruct_mu(const VectorField& X, const Matrix& G, const CoveringSystem& cov, unsigned n);

}  // namespace twistkit

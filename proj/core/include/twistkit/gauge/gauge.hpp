#pragma once

#include "twistkit/jet/prolongation.hpp"
#include "twistkit/symbolic/matrix.hpp"

namespace twistkit {

/// Pointwise invertible R(x, u), acting blockwise on every jet level.
class GaugeMap {
 public:
  /// SingularMatrix when det R vanishes; InvalidArgument if R depends on jets.
  explicit GaugeMap(Matrix R);

  const Matrix& R() const noexcept { return R_; }
  const Matrix& Rinv() const noexcept { return Rinv_; }
  std::size_t q() const noexcept { return R_.rows(); }
  GaugeMap inverse() const;

 private:
  GaugeMap(Matrix R, Matrix Rinv) : R_(std::move(R)), Rinv_(std::move(Rinv)) {}
  Matrix R_;
  Matrix Rinv_;
};

Matrix matrix_inverse(const Matrix& m);

/// Lambda_i = R (D_i R^-1); also computed as -(D_i R) R^-1 and compared.
MatrixOneForm mu_from_gauge(const GaugeMap& g, const JetSpace& space);
/// Both expressions of Lambda_i, for consistency checks.
std::pair<MatrixOneForm, MatrixOneForm> mu_from_gauge_both(const GaugeMap& g, const JetSpace& space);

/// phi -> R phi; NotVertical if xi != 0.
VectorField apply_gauge(const GaugeMap& g, const VectorField& V);
/// psi_J -> R psi_J for every J; NotVertical if xi != 0.
ProlongedField apply_gauge(const GaugeMap& g, const ProlongedField& V);

struct GaugeDiagramReport {
  bool pass = false;
  MatrixOneForm mu;
  /// prolong_mu(gauge(X), mu) and gauge(prolong_standard(X)).
  ProlongedField twisted_path;
  ProlongedField standard_path;
};

GaugeDiagramReport check_gauge_diagram(const GaugeMap& g, const VectorField& X, unsigned n, const JetSpace& space);

}  // namespace twistkit

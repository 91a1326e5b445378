#pragma once

#include <utility>
#include <vector>

#include "twistkit/jet/jet_space.hpp"
#include "twistkit/symbolic/matrix.hpp"

namespace twistkit {

/// Horizontal matrix one-form mu = Lambda_i dx^i, one q x q matrix per direction.
struct MatrixOneForm {
  std::vector<Matrix> lambdas;

  static MatrixOneForm zero(const JetSpace& space);
  /// lambda * identity on one direction, zero elsewhere.
  static MatrixOneForm scalar(const JetSpace& space, const Expression& lambda, std::size_t direction = 0);

  std::size_t p() const noexcept { return lambdas.size(); }
  std::size_t q() const noexcept { return lambdas.empty() ? 0 : lambdas.front().rows(); }
  /// DimensionMismatch unless p matrices of size q x q.
  void validate(const JetSpace& space) const;
  friend bool operator==(const MatrixOneForm&, const MatrixOneForm&) = default;
};

struct MchResidual {
  std::size_t i;
  std::size_t j;
  Matrix value;
};

/// R_ij = D_i Lambda_j - D_j Lambda_i + [Lambda_i, Lambda_j] for i < j.
std::vector<MchResidual> mch_residuals(const MatrixOneForm& mu, const JetSpace& space);

}  // namespace twistkit

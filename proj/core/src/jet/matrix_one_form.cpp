#include "twistkit/jet/matrix_one_form.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

MatrixOneForm MatrixOneForm::zero(const JetSpace& space) {
  return MatrixOneForm{std::vector<Matrix>(space.p(), Matrix::zero(space.q()))};
}

MatrixOneForm MatrixOneForm::scalar(const JetSpace& space, const Expression& lambda, std::size_t direction) {
  MatrixOneForm out = zero(space);
  out.lambdas.at(direction) = Matrix::scalar(space.q(), lambda);
  return out;
}

void MatrixOneForm::validate(const JetSpace& space) const {
  if (lambdas.size() != space.p()) throw Error(ErrorKind::DimensionMismatch, "mu needs one matrix per independent variable");
  for (const auto& m : lambdas)
    if (m.rows() != space.q() || m.cols() != space.q())
      throw Error(ErrorKind::DimensionMismatch, "mu matrices must be q x q");
}

std::vector<MchResidual> mch_residuals(const MatrixOneForm& mu, const JetSpace& space) {
  mu.validate(space);
  std::vector<MchResidual> out;
  for (std::size_t i = 0; i < space.p(); ++i)
    for (std::size_t j = i + 1; j < space.p(); ++j) {
      Derivation Di = total_derivation(i, space);
      Derivation Dj = total_derivation(j, space);
      Matrix r = mu.lambdas[j].map([&](const Expression& e) { return Di(e); }) -
                 mu.lambdas[i].map([&](const Expression& e) { return Dj(e); }) +
                 commutator(mu.lambdas[i], mu.lambdas[j]);
      out.push_back({i, j, std::move(r)});
    }
  return out;
}

}  // namespace twistkit

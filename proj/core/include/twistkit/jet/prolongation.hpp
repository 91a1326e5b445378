#pragma once

#include <map>
#include <vector>

#include "twistkit/jet/matrix_one_form.hpp"
#include "twistkit/jet/vector_field.hpp"

namespace twistkit {

/// Which prolongation recursion to use.
struct Twisting {
  enum class Kind { Standard, Lambda, Mu };

  Kind kind = Kind::Standard;
  Expression lambda;
  MatrixOneForm mu;

  static Twisting standard() { return {}; }
  static Twisting with_lambda(Expression l) { return {Kind::Lambda, std::move(l), {}}; }
  static Twisting with_mu(MatrixOneForm m) { return {Kind::Mu, Expression(), std::move(m)}; }
};

struct ProlongOptions {
  /// Reject mu failing the horizontal Maurer-Cartan equation (p > 1).
  bool enforce_mch = false;
};

/// psi^a_{J,i} = D_i psi^a_J - u^a_{J,k} D_i xi^k + T_i(Q_J) with
/// Q^a_J = psi^a_J - u^a_{J,k} xi^k and T_i = 0, lambda, or Lambda_i.
/// Auxiliary coefficients chi follow the untwisted recursion.
ProlongedField prolong(const VectorField& X, const Twisting& twist, unsigned n, const JetSpace& space,
                       ProlongOptions options = {});

ProlongedField prolong_standard(const VectorField& X, unsigned n, const JetSpace& space);
/// NotScalarBase unless p == 1.
ProlongedField prolong_lambda(const VectorField& X, const Expression& lambda, unsigned n, const JetSpace& space);
ProlongedField prolong_mu(const VectorField& X, const MatrixOneForm& mu, unsigned n, const JetSpace& space,
                          ProlongOptions options = {});

/// Q^a = phi^a - u^a_i xi^i.
std::vector<Expression> evolutionary_representative(const VectorField& X, const JetSpace& space);

/// F^a_J = (psi^a_J)_mu - (psi^a_J)_0 for |J| <= n.
std::map<JetKey, Expression> mu_deviation(const VectorField& X, const MatrixOneForm& mu, unsigned n,
                                          const JetSpace& space);

}  // namespace twistkit

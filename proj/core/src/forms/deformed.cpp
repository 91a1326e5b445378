#include "twistkit/forms/deformed.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

DiffForm entry_form(const MatrixOneForm& mu, std::size_t a, std::size_t b, const JetSpace& space) {
  mu.validate(space);
  DiffForm out(1);
  for (std::size_t i = 0; i < space.p(); ++i) out.add({space.x(i)}, mu.lambdas[i](a, b));
  return out;
}

DiffForm d_mu(const DiffForm& a, const DiffForm& mu) {
  if (!mu.is_zero() && mu.degree() != 1) throw Error(ErrorKind::DimensionMismatch, "mu must be a one-form");
  DiffForm out = exterior_d(a);
  out += wedge(mu, a);
  return out;
}

std::vector<DiffForm> d_mu(const std::vector<DiffForm>& a, const MatrixOneForm& mu, const JetSpace& space) {
  if (a.size() != space.q()) throw Error(ErrorKind::DimensionMismatch, "vector form needs q components");
  std::vector<DiffForm> out;
  for (std::size_t r = 0; r < space.q(); ++r) {
    DiffForm v = exterior_d(a[r]);
    for (std::size_t c = 0; c < space.q(); ++c) v += wedge(entry_form(mu, r, c, space), a[c]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<DiffForm>> curvature(const MatrixOneForm& mu, const JetSpace& space) {
  const std::size_t q = space.q();
  std::vector<std::vector<DiffForm>> out(q, std::vector<DiffForm>(q, DiffForm(2)));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      DiffForm v = exterior_d(entry_form(mu, a, b, space));
      for (std::size_t c = 0; c < q; ++c) v += wedge(entry_form(mu, a, c, space), entry_form(mu, c, b, space));
      out[a][b] = std::move(v);
    }
  return out;
}

DiffForm lie_mu(const CoordinateField& X, const DiffForm& a, const DiffForm& mu) {
  DiffForm out = lie_derivative(X, a);
  out += wedge(mu, interior(X, a));
  return out;
}

std::vector<DiffForm> lie_mu(const CoordinateField& X, const std::vector<DiffForm>& a, const MatrixOneForm& mu,
                             const JetSpace& space) {
  if (a.size() != space.q()) throw Error(ErrorKind::DimensionMismatch, "vector form needs q components");
  std::vector<DiffForm> contracted;
  for (const auto& f : a) contracted.push_back(interior(X, f));
  std::vector<DiffForm> out;
  for (std::size_t r = 0; r < space.q(); ++r) {
    DiffForm v = lie_derivative(X, a[r]);
    for (std::size_t c = 0; c < space.q(); ++c) v += wedge(entry_form(mu, r, c, space), contracted[c]);
    out.push_back(std::move(v));
  }
  return out;
}

CoordinateField lie_mu(const CoordinateField& X, const CoordinateField& Y, const DiffForm& mu) {
  Expression contraction = interior(Y, mu).coefficient({});
  return bracket(X, Y) - contraction * X;
}

MchReport check_MCH(const MatrixOneForm& mu, const JetSpace& space) {
  MchReport report;
  report.residuals = mch_residuals(mu, space);
  for (const auto& r : report.residuals)
    if (!r.value.is_zero()) report.pass = false;
  return report;
}

std::vector<Expression> nabla_apply(const MatrixOneForm& mu, std::size_t i, const std::vector<Expression>& v,
                                    const JetSpace& space) {
  mu.validate(space);
  if (v.size() != space.q()) throw Error(ErrorKind::DimensionMismatch, "nabla acts on q-vectors");
  Derivation Di = total_derivation(i, space);
  std::vector<Expression> out = mu.lambdas.at(i).apply(v);
  for (std::size_t a = 0; a < v.size(); ++a) out[a] += Di(v[a]);
  return out;
}

MuProlongationReport check_mu_prolongation(const ProlongedField& Y, const MatrixOneForm& mu, const JetSpace& space) {
  mu.validate(space);
  MuProlongationReport report;
  report.projectable = true;
  auto base_only = [](const Expression& e) {
    for (const auto& c : e.coordinates())
      if (c.kind() == AtomKind::AuxJet || c.order() > 0) return false;
    return true;
  };
  for (const auto& e : Y.xi)
    if (!base_only(e)) report.projectable = false;
  for (std::size_t a = 0; a < space.q(); ++a)
    if (!base_only(Y.psi_at(a, space.zero()))) report.projectable = false;

  CoordinateField field = Y.as_coordinate_field(space);
  const unsigned top = std::min(Y.order, space.n());
  for (unsigned k = 0; k < top; ++k) {
    for (const auto& J : MultiIndex::of_order(space.p(), k)) {
      std::vector<DiffForm> theta;
      for (std::size_t a = 0; a < space.q(); ++a) theta.push_back(contact_form(a, J, space));
      auto image = lie_mu(field, theta, mu, space);
      for (std::size_t a = 0; a < space.q(); ++a)
        if (!is_in_contact_ideal(image[a], space)) report.failures.push_back({a, J});
    }
  }
  report.pass = report.projectable && report.failures.empty();
  return report;
}

}  // namespace twistkit

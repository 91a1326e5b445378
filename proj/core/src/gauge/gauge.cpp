#include "twistkit/gauge/gauge.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

GaugeMap::GaugeMap(Matrix R) : R_(std::move(R)) {
  if (!R_.is_square()) throw Error(ErrorKind::DimensionMismatch, "gauge matrix must be square");
  for (const auto& e : R_.entries())
    for (const auto& c : e.coordinates())
      if (c.order() > 0 || c.kind() == AtomKind::AuxJet)
        throw Error(ErrorKind::InvalidArgument, "gauge matrix may depend on (x, u) only");
  Rinv_ = twistkit::inverse(R_);
}

GaugeMap GaugeMap::inverse() const { return GaugeMap(Rinv_, R_); }

Matrix matrix_inverse(const Matrix& m) { return twistkit::inverse(m); }

std::pair<MatrixOneForm, MatrixOneForm> mu_from_gauge_both(const GaugeMap& g, const JetSpace& space) {
  if (g.q() != space.q()) throw Error(ErrorKind::DimensionMismatch, "gauge matrix size differs from q");
  MatrixOneForm first, second;
  for (std::size_t i = 0; i < space.p(); ++i) {
    Derivation Di = total_derivation(i, space);
    auto D = [&Di](const Expression& e) { return Di(e); };
    first.lambdas.push_back(g.R() * g.Rinv().map(D));
    second.lambdas.push_back(-(g.R().map(D) * g.Rinv()));
  }
  return {std::move(first), std::move(second)};
}

MatrixOneForm mu_from_gauge(const GaugeMap& g, const JetSpace& space) {
  auto [first, second] = mu_from_gauge_both(g, space);
  if (!(first == second)) throw Error(ErrorKind::InvalidArgument, "R (D R^-1) and -(D R) R^-1 disagree");
  return first;
}

VectorField apply_gauge(const GaugeMap& g, const VectorField& V) {
  if (!V.is_vertical()) throw Error(ErrorKind::NotVertical, "gauge maps act on vertical fields only");
  VectorField out = V;
  out.phi = g.R().apply(V.phi);
  return out;
}

ProlongedField apply_gauge(const GaugeMap& g, const ProlongedField& V) {
  for (const auto& e : V.xi)
    if (!e.is_zero()) throw Error(ErrorKind::NotVertical, "gauge maps act on vertical fields only");
  ProlongedField out = V;
  std::map<MultiIndex, std::vector<Expression>> blocks;
  for (const auto& [key, e] : V.psi) {
    auto& v = blocks[key.second];
    if (v.size() < g.q()) v.resize(g.q());
    v.at(key.first) = e;
  }
  for (const auto& [J, v] : blocks) {
    auto image = g.R().apply(v);
    for (std::size_t a = 0; a < image.size(); ++a) out.psi[{a, J}] = image[a];
  }
  return out;
}

GaugeDiagramReport check_gauge_diagram(const GaugeMap& g, const VectorField& X, unsigned n, const JetSpace& space) {
  if (!X.is_vertical()) throw Error(ErrorKind::NotVertical, "the gauge diagram needs a vertical field");
  GaugeDiagramReport report;
  report.mu = mu_from_gauge(g, space);
  report.twisted_path = prolong_mu(apply_gauge(g, X), report.mu, n, space);
  report.standard_path = apply_gauge(g, prolong_standard(X, n, space));
  report.pass = report.twisted_path == report.standard_path;
  return report;
}

}  // namespace twistkit

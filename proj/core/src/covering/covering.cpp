#include "twistkit/covering/covering.hpp"

#include <algorithm>

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

bool free_of_aux(const Expression& e) {
  for (const auto& c : e.coordinates())
    if (c.kind() == AtomKind::AuxJet) return false;
  return true;
}

bool depends_on_order_zero_only(const Expression& e) {
  for (const auto& c : e.coordinates())
    if (c.order() > 0) return false;
  return true;
}

}  // namespace

CoveringSystem::CoveringSystem(EquationSystem base, std::vector<std::vector<Expression>> H, JetSpace space)
    : base_(std::move(base)), H_(std::move(H)), space_(space) {
  if (space_.r() == 0) throw Error(ErrorKind::DimensionMismatch, "a covering needs auxiliary variables");
  if (H_.size() != space_.r()) throw Error(ErrorKind::DimensionMismatch, "one rule family per auxiliary variable");
  for (const auto& row : H_) {
    if (row.size() != space_.p())
      throw Error(ErrorKind::DimensionMismatch, "every auxiliary variable needs a rule per direction");
    for (const auto& h : row)
      for (const auto& c : h.coordinates())
        if (c.kind() == AtomKind::AuxJet && c.order() > 0)
          throw Error(ErrorKind::InvalidArgument, "auxiliary rules may not contain w-derivatives");
  }
  joint_ = base_;
  for (std::size_t b = 0; b < space_.r(); ++b)
    for (std::size_t i = 0; i < space_.p(); ++i) {
      aux_.add_rule(space_.w(b, space_.unit(i)), H_[b][i]);
      joint_.add_rule(space_.w(b, space_.unit(i)), H_[b][i]);
    }
}

Expression augmented_total_derivative(const Expression& e, std::size_t i, const CoveringSystem& cov) {
  Reducer reduce(cov.aux_system(), cov.space());
  return reduce(total_derivative(e, i, cov.space()));
}

std::optional<std::vector<Expression>> cofactors(const Expression& residual, const EquationSystem& base) {
  std::vector<Expression> out(base.residuals().size());
  if (residual.is_zero()) return out;
  std::vector<Polynomial> divisors;
  for (const auto& F : base.residuals()) divisors.push_back(F.num());
  auto [quotients, remainder] = residual.num().reduce_by(divisors);
  if (!remainder.is_zero()) return std::nullopt;
  for (std::size_t l = 0; l < divisors.size(); ++l) {
    if (quotients[l].is_zero()) continue;
    out[l] = Expression::fraction(quotients[l] * base.residuals()[l].den(), residual.den());
  }
  return out;
}

CompatibilityReport check_compatibility(const CoveringSystem& cov) {
  CompatibilityReport report;
  const JetSpace& s = cov.space();
  if (s.p() < 2) {
    report.pass = true;
    return report;
  }
  Reducer aux(cov.aux_system(), s);
  std::vector<Derivation> D;
  for (std::size_t i = 0; i < s.p(); ++i) D.push_back(total_derivation(i, s));
  report.trivial = true;
  for (std::size_t b = 0; b < s.r(); ++b)
    for (std::size_t i = 0; i < s.p(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Expression C = aux(D[i](cov.H()[b][j])) - aux(D[j](cov.H()[b][i]));
        auto cof = cofactors(C, cov.base());
        if (!cof) {
          Expression reduced = reduce_mod_system(C, cov.base(), s);
          throw Error(ErrorKind::NoDecomposition,
                      reduced.is_zero() ? "residual vanishes on the base but does not divide by its residuals"
                                        : "compatibility residual does not vanish on the base equation");
        }
        if (!C.is_zero()) report.trivial = false;
        report.residuals.push_back({b, i, j, std::move(C), std::move(*cof)});
      }
  report.pass = !report.trivial;
  return report;
}

MatrixCoveringReport check_matrix_covering(const MatrixCovering& mc, const EquationSystem& base, const JetSpace& space) {
  if (space.p() != 2) throw Error(ErrorKind::DimensionMismatch, "matrix coverings need two independent variables");
  if (!mc.A.is_square() || mc.A.rows() != mc.B.rows() || mc.A.cols() != mc.B.cols())
    throw Error(ErrorKind::DimensionMismatch, "A and B must be square of equal size");
  Derivation Dx = total_derivation(0, space);
  Derivation Dt = total_derivation(1, space);
  MatrixCoveringReport report;
  report.Z = mc.A.map([&](const Expression& e) { return Dt(e); }) - mc.B.map([&](const Expression& e) { return Dx(e); }) +
             commutator(mc.A, mc.B);
  Reducer reduce(base, space);
  report.reduced = report.Z.map([&](const Expression& e) { return reduce(e); });
  for (const auto& e : report.Z.entries()) {
    auto cof = cofactors(e, base);
    report.cofactors.push_back(cof ? *cof : std::vector<Expression>{});
  }
  report.trivial = report.Z.is_zero();
  report.pass = !report.trivial && report.reduced.is_zero();
  return report;
}

AugmentedSymmetryReport check_augmented_symmetry(const VectorField& X, const CoveringSystem& cov, unsigned n) {
  unsigned need = std::max(cov.base().order(), 1u);
  if (n < need) throw Error(ErrorKind::InvalidArgument, "prolongation order is below the order of the system");
  JetSpace space = cov.space().with_order(std::max(n, cov.space().n()));
  CoordinateField Y = prolong_standard(X, n, space).as_coordinate_field(space);
  Reducer reduce(cov.joint_system(), space);
  AugmentedSymmetryReport report;
  report.pass = true;
  for (const auto& F : cov.joint_system().residuals()) {
    Expression r = reduce(Y.apply(F));
    if (!r.is_zero()) report.pass = false;
    report.residuals.push_back(std::move(r));
  }
  return report;
}

SemiClassicalReport check_semiclassical(const VectorField& X, const CoveringSystem& cov) {
  const JetSpace& s = cov.space();
  SemiClassicalReport report;
  report.is_semiclassical = true;
  for (const auto& e : X.xi)
    if (!depends_on_order_zero_only(e)) report.is_semiclassical = false;
  for (const auto& e : X.phi)
    if (!depends_on_order_zero_only(e)) report.is_semiclassical = false;
  for (const auto& e : X.eta)
    for (const auto& c : e.coordinates())
      if (c.kind() == AtomKind::AuxJet && c.order() > 0) report.is_semiclassical = false;
  if (s.r() != 1) return report;

  const Atom w = s.w(0);
  const Expression damp = exp(-Expression(w));
  bool ok = true;
  auto extract = [&](const std::vector<Expression>& in, std::vector<Expression>& out) {
    for (const auto& e : in) {
      if (!(partial(e, w) == e)) {
        ok = false;
        return;
      }
      Expression e0 = damp * e;
      if (e0.coordinates().contains(w)) {
        ok = false;
        return;
      }
      out.push_back(std::move(e0));
    }
  };
  extract(X.xi, report.xi0);
  if (ok) extract(X.phi, report.phi0);
  std::vector<Expression> eta = X.eta;
  eta.resize(s.r());
  if (ok) extract(eta, report.eta0);
  report.exponential_form = ok;
  if (!ok) {
    report.xi0.clear();
    report.phi0.clear();
    report.eta0.clear();
  }
  return report;
}

namespace {

// Augmented prolongation with every w-derivative replaced through the aux rules.
ProlongedField restricted_prolongation(const VectorField& X, const CoveringSystem& cov, unsigned n) {
  JetSpace space = cov.space().with_order(std::max(n, cov.space().n()));
  ProlongedField Y = prolong_standard(X, n, space);
  Reducer aux(cov.aux_system(), space);
  for (auto& [key, e] : Y.psi) e = aux(e);
  for (auto& e : Y.xi) e = aux(e);
  return Y;
}

bool all_free_of_aux(const ProlongedField& Y) {
  for (const auto& e : Y.xi)
    if (!free_of_aux(e)) return false;
  for (const auto& [key, e] : Y.psi)
    if (!free_of_aux(e)) return false;
  return true;
}

}  // namespace

ReconstructionReport reconstruct_lambda(const VectorField& X, const CoveringSystem& cov, unsigned n) {
  const JetSpace& s = cov.space();
  if (s.p() != 1 || s.r() != 1)
    throw Error(ErrorKind::InvalidArgument, "lambda reconstruction needs p = 1 and one auxiliary variable");
  SemiClassicalReport sc = check_semiclassical(X, cov);
  if (!sc.exponential_form) throw Error(ErrorKind::NotExponentialForm, "[d_w, X] differs from X");

  JetSpace base = cov.base_space().with_order(std::max(n, s.n()));
  const Expression& lambda = cov.H()[0][0];
  ReconstructionReport report;
  report.X0 = VectorField{sc.xi0, sc.phi0, {}};
  report.mu = MatrixOneForm::scalar(base, lambda);

  ProlongedField Y = restricted_prolongation(X, cov, n);
  const Expression damp = exp(-Expression(s.w(0)));
  report.restricted.order = n;
  for (const auto& e : Y.xi) report.restricted.xi.push_back(damp * e);
  for (const auto& [key, e] : Y.psi) report.restricted.psi.emplace(key, damp * e);
  report.expected = prolong_lambda(report.X0, lambda, n, base);
  report.matched = all_free_of_aux(report.restricted) && report.restricted == report.expected;
  return report;
}

ReconstructionReport reconstruct_mu(const VectorField& X, const Matrix& G, const CoveringSystem& cov, unsigned n) {
  const JetSpace& s = cov.space();
  if (!X.is_vertical()) throw Error(ErrorKind::NotVertical, "mu reconstruction needs a vertical field");
  if (!G.is_square() || G.rows() != s.q()) throw Error(ErrorKind::DimensionMismatch, "G must be q x q");
  for (const auto& e : G.entries())
    for (const auto& c : e.coordinates())
      if (c.kind() != AtomKind::AuxJet || c.order() > 0)
        throw Error(ErrorKind::InvalidArgument, "G may depend on the auxiliary variables only");
  Matrix Ginv = inverse(G);
  std::vector<Expression> phi0 = Ginv.apply(X.phi);
  for (const auto& e : phi0)
    if (!free_of_aux(e) || !depends_on_order_zero_only(e))
      throw Error(ErrorKind::InvalidArgument, "phi is not of the form G(w) phi0(x, u)");

  JetSpace base = cov.base_space().with_order(std::max(n, s.n()));
  ReconstructionReport report;
  report.X0 = VectorField{std::vector<Expression>(s.p()), phi0, {}};
  for (std::size_t i = 0; i < s.p(); ++i) {
    Matrix dG(s.q(), s.q());
    for (std::size_t b = 0; b < s.r(); ++b) {
      const Atom w = s.w(b);
      dG += cov.H()[b][i] * G.map([&w](const Expression& e) { return partial(e, w); });
    }
    report.mu.lambdas.push_back(Ginv * dG);
  }
  bool mu_on_base = true;
  for (const auto& L : report.mu.lambdas)
    for (const auto& e : L.entries())
      if (!free_of_aux(e)) mu_on_base = false;

  ProlongedField Y = restricted_prolongation(X, cov, n);
  report.restricted.order = n;
  report.restricted.xi = std::vector<Expression>(s.p());
  std::map<MultiIndex, std::vector<Expression>> blocks;
  for (const auto& [key, e] : Y.psi) {
    auto& v = blocks[key.second];
    v.resize(s.q());
    v[key.first] = e;
  }
  for (const auto& [J, v] : blocks) {
    auto rescaled = Ginv.apply(v);
    for (std::size_t a = 0; a < s.q(); ++a) report.restricted.psi.emplace(JetKey{a, J}, rescaled[a]);
  }
  if (!mu_on_base) return report;

  report.expected = prolong_mu(report.X0, report.mu, n, base);
  Reducer reduce(cov.base(), base);
  for (const auto& r : mch_residuals(report.mu, base))
    for (const auto& e : r.value.entries())
      if (!reduce(e).is_zero()) report.mch_pass = false;
  report.matched = all_free_of_aux(report.restricted) && report.restricted == report.expected;
  return report;
}

}  // namespace twistkit

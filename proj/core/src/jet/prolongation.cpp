#include "twistkit/jet/prolongation.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

void check_field(const VectorField& X, const JetSpace& space) {
  if (X.xi.size() != space.p() || X.phi.size() != space.q() || X.eta.size() > space.r())
    throw Error(ErrorKind::DimensionMismatch, "vector field does not fit the jet space");
}

// Shared recursion for the dependent (twisted) and auxiliary (untwisted) blocks.
struct Recursion {
  const VectorField& X;
  const JetSpace& space;
  std::vector<Derivation> D;
  std::vector<std::vector<Expression>> Dxi;  // Dxi[i][k] = D_i xi^k

  Recursion(const VectorField& field, const JetSpace& s) : X(field), space(s) {
    for (std::size_t i = 0; i < s.p(); ++i) D.push_back(total_derivation(i, s));
    Dxi.assign(s.p(), {});
    for (std::size_t i = 0; i < s.p(); ++i)
      for (std::size_t k = 0; k < s.p(); ++k) Dxi[i].push_back(D[i](X.xi[k]));
  }

  // u_{J,k} xi^k summed over k, for the given coordinate family.
  Expression contact_sum(const Atom& base, const MultiIndex& J) const {
    Expression s;
    for (std::size_t k = 0; k < space.p(); ++k) {
      if (X.xi[k].is_zero()) continue;
      Atom next = base.kind() == AtomKind::Jet ? Atom::jet(base.index(), J.bumped(k)) : Atom::aux(base.index(), J.bumped(k));
      s += Expression(next) * X.xi[k];
    }
    return s;
  }

  Expression standard_step(const Expression& parent, const Atom& base, const MultiIndex& Jp, std::size_t i) const {
    Expression out = D[i](parent);
    for (std::size_t k = 0; k < space.p(); ++k) {
      if (Dxi[i][k].is_zero()) continue;
      Atom next = base.kind() == AtomKind::Jet ? Atom::jet(base.index(), Jp.bumped(k)) : Atom::aux(base.index(), Jp.bumped(k));
      space.check(next);
      out -= Expression(next) * Dxi[i][k];
    }
    return out;
  }
};

}  // namespace

ProlongedField prolong(const VectorField& X, const Twisting& twist, unsigned n, const JetSpace& space,
                       ProlongOptions options) {
  check_field(X, space);
  if (twist.kind == Twisting::Kind::Lambda && space.p() != 1)
    throw Error(ErrorKind::NotScalarBase, "lambda-prolongation needs one independent variable");
  if (twist.kind == Twisting::Kind::Mu) {
    twist.mu.validate(space);
    if (options.enforce_mch && space.p() > 1) {
      for (const auto& r : mch_residuals(twist.mu, space))
        if (!r.value.is_zero())
          throw Error(ErrorKind::MCHViolated,
                      "Maurer-Cartan residual (" + std::to_string(r.i) + "," + std::to_string(r.j) + ") is nonzero");
    }
  }

  Recursion rec(X, space);
  ProlongedField Y;
  Y.order = n;
  Y.xi = X.xi;
  const MultiIndex O = space.zero();
  for (std::size_t a = 0; a < space.q(); ++a) Y.psi.emplace(JetKey{a, O}, X.phi[a]);
  for (std::size_t b = 0; b < space.r(); ++b)
    Y.chi.emplace(JetKey{b, O}, b < X.eta.size() ? X.eta[b] : Expression());

  std::map<MultiIndex, std::vector<Expression>> Q;  // Q_J for the dependent block
  auto q_of = [&](const MultiIndex& J) -> const std::vector<Expression>& {
    auto it = Q.find(J);
    if (it != Q.end()) return it->second;
    std::vector<Expression> v;
    for (std::size_t a = 0; a < space.q(); ++a)
      v.push_back(Y.psi.at({a, J}) - rec.contact_sum(Atom::jet(a, J), J));
    return Q.emplace(J, std::move(v)).first->second;
  };

  for (unsigned k = 1; k <= n; ++k) {
    for (const auto& J : MultiIndex::of_order(space.p(), k)) {
      std::size_t i = J.first_direction();
      MultiIndex Jp = *J.lowered(i);
      std::vector<Expression> extra(space.q());
      if (twist.kind == Twisting::Kind::Lambda && !twist.lambda.is_zero()) {
        const auto& q = q_of(Jp);
        for (std::size_t a = 0; a < space.q(); ++a) extra[a] = twist.lambda * q[a];
      } else if (twist.kind == Twisting::Kind::Mu && !twist.mu.lambdas[i].is_zero()) {
        extra = twist.mu.lambdas[i].apply(q_of(Jp));
      }
      for (std::size_t a = 0; a < space.q(); ++a) {
        Expression v = rec.standard_step(Y.psi.at({a, Jp}), Atom::jet(a, Jp), Jp, i) + extra[a];
        Y.psi.emplace(JetKey{a, J}, std::move(v));
      }
      for (std::size_t b = 0; b < space.r(); ++b) {
        Expression v = rec.standard_step(Y.chi.at({b, Jp}), Atom::aux(b, Jp), Jp, i);
        Y.chi.emplace(JetKey{b, J}, std::move(v));
      }
    }
  }
  return Y;
}

ProlongedField prolong_standard(const VectorField& X, unsigned n, const JetSpace& space) {
  return prolong(X, Twisting::standard(), n, space);
}

ProlongedField prolong_lambda(const VectorField& X, const Expression& lambda, unsigned n, const JetSpace& space) {
  return prolong(X, Twisting::with_lambda(lambda), n, space);
}

ProlongedField prolong_mu(const VectorField& X, const MatrixOneForm& mu, unsigned n, const JetSpace& space,
                          ProlongOptions options) {
  return prolong(X, Twisting::with_mu(mu), n, space, options);
}

std::vector<Expression> evolutionary_representative(const VectorField& X, const JetSpace& space) {
  check_field(X, space);
  std::vector<Expression> out;
  for (std::size_t a = 0; a < space.q(); ++a) {
    Expression Qa = X.phi[a];
    for (std::size_t i = 0; i < space.p(); ++i)
      if (!X.xi[i].is_zero()) Qa -= Expression(space.u(a, space.unit(i))) * X.xi[i];
    out.push_back(std::move(Qa));
  }
  return out;
}

std::map<JetKey, Expression> mu_deviation(const VectorField& X, const MatrixOneForm& mu, unsigned n,
                                          const JetSpace& space) {
  ProlongedField twisted = prolong_mu(X, mu, n, space);
  ProlongedField plain = prolong_standard(X, n, space);
  std::map<JetKey, Expression> out;
  for (const auto& [key, e] : twisted.psi) out.emplace(key, e - plain.psi.at(key));
  return out;
}

}  // namespace twistkit

#include "suites.hpp"

#include "support.hpp"
#include "twistkit/forms/deformed.hpp"
#include "twistkit/gauge/gauge.hpp"
#include "twistkit/jet/equation_system.hpp"
#include "twistkit/jet/prolongation.hpp"
#include "twistkit/symbolic/error.hpp"

namespace twistkit::testing {

void Tally::record(bool good, const std::string& what) {
  ++total;
  if (good) ++passed;
  else if (first_failure.empty()) first_failure = what;
}

namespace {

std::string label(const char* kind, int k) { return std::string(kind) + " #" + std::to_string(k); }

DiffForm random_form(Rng& rng, const JetSpace& s, unsigned degree) {
  auto atoms = jet_atoms(s, 1);
  DiffForm out(degree);
  if (degree == 0) return DiffForm::function(random_polynomial(rng, atoms, 2, 3));
  for (int t = 0; t < 2; ++t) {
    DiffForm term = DiffForm::function(random_polynomial(rng, atoms, 2, 2));
    for (unsigned k = 0; k < degree; ++k) term = wedge(term, DiffForm::differential_of(rng.pick(atoms)));
    out += term;
  }
  return out;
}

CoordinateField random_coordinate_field(Rng& rng, const JetSpace& s) {
  auto atoms = jet_atoms(s, 1);
  CoordinateField X;
  for (const auto& a : atoms)
    if (rng.coin()) X.set(a, random_polynomial(rng, atoms, 2, 2));
  return X;
}

}  // namespace

std::vector<Tally> gauge_suite(std::uint64_t seed) {
  Tally diagram{"gauge diagram commutes"}, perturbed{"perturbed diagram fails"}, mch{"mu_from_gauge passes MCH"},
      sign{"R D(R^-1) = -(D R) R^-1"};
  Rng rng(seed);
  for (int k = 0; k < 50; ++k) {
    const std::size_t q = 1 + static_cast<std::size_t>(k % 3);
    const std::size_t p = 1 + static_cast<std::size_t>((k / 3) % 2);
    const unsigned n = 1 + static_cast<unsigned>((k / 6) % 2);
    JetSpace s(p, q, 0, n);
    auto atoms = base_atoms(s);
    Matrix R = random_unimodular(rng, q, atoms, q == 3 ? 1 : 2);
    if (q == 1) R = Matrix::scalar(1, exp(random_polynomial(rng, atoms, 1, 2)));
    GaugeMap g(R);
    auto X = random_point_field(rng, s, 2, true);
    try {
      auto report = check_gauge_diagram(g, X, n, s);
      diagram.record(report.pass, label("diagram", k));
      mch.record(check_MCH(report.mu, s).pass, label("mch", k));
      auto [lhs, rhs] = mu_from_gauge_both(g, s);
      sign.record(lhs == rhs, label("sign", k));
      if (k < 10) {
        // Bump one component of the gauged field before prolonging it.
        VectorField V = apply_gauge(g, X);
        V.phi[static_cast<std::size_t>(k) % q] += Expression(1);
        perturbed.record(!(prolong_mu(V, report.mu, n, s) == report.standard_path), label("perturbed", k));
      }
    } catch (const Error& e) {
      diagram.record(false, label("diagram", k) + ": " + e.what());
    }
  }
  return {diagram, perturbed, mch, sign};
}

std::vector<Tally> deformed_suite(std::uint64_t seed) {
  Tally dmu{"d_mu a = e^-f d(e^f a)"}, lie{"L^mu_X a = e^-f L_(e^f X) a"}, flat{"d_mu o d_mu = 0 for flat mu"};
  Rng rng(seed);
  JetSpace s(2, 1, 0, 1);
  for (int k = 0; k < 20; ++k) {
    Expression f = random_polynomial(rng, base_atoms(s), 2, 3);
    Expression ef = exp(f), emf = exp(-f);
    DiffForm mu = exterior_d(DiffForm::function(f));
    DiffForm a = random_form(rng, s, static_cast<unsigned>(k % 2));
    dmu.record(d_mu(a, mu) == emf * exterior_d(ef * a), label("d_mu", k));
    CoordinateField X = random_coordinate_field(rng, s);
    lie.record(lie_mu(X, a, mu) == emf * lie_derivative(ef * X, a), label("lie_mu", k));
  }
  // Scalar closed mu on functions.
  for (int k = 0; k < 10; ++k) {
    DiffForm mu = exterior_d(DiffForm::function(random_polynomial(rng, jet_atoms(s, 1), 2, 3)));
    DiffForm a = random_form(rng, s, 0);
    flat.record(d_mu(d_mu(a, mu), mu).is_zero(), label("scalar flat", k));
  }
  // Matrix mu = R d(R^-1) with R over the base coordinates.
  for (int k = 0; k < 10; ++k) {
    const std::size_t q = 2 + static_cast<std::size_t>(k % 2);
    JetSpace sq(2, q, 0, 1);
    std::vector<Atom> xs{sq.x(0), sq.x(1)};
    MatrixOneForm mu = mu_from_gauge(GaugeMap(random_unimodular(rng, q, xs, 1)), sq);
    std::vector<DiffForm> a;
    for (std::size_t c = 0; c < q; ++c) a.push_back(random_form(rng, sq, 0));
    bool zero = check_MCH(mu, sq).pass;
    for (const auto& component : d_mu(d_mu(a, mu, sq), mu, sq)) zero = zero && component.is_zero();
    flat.record(zero, label("matrix flat", k));
  }
  return {dmu, lie, flat};
}

std::vector<Tally> prolongation_criterion_suite(std::uint64_t seed) {
  Tally accepted{"prolong_mu output accepted"}, rejected{"perturbed prolongation rejected"};
  Rng rng(seed);
  for (int k = 0; k < 10; ++k) {
    const std::size_t q = 1 + static_cast<std::size_t>(k % 2);
    const unsigned n = 1 + static_cast<unsigned>((k / 2) % 2);
    JetSpace s(1, q, 0, n);
    auto X = random_point_field(rng, s, 2, false);
    auto mu = random_mu(rng, s, 1, k % 3 == 0);
    auto Y = prolong_mu(X, mu, n, s);
    accepted.record(check_mu_prolongation(Y, mu, s).pass, label("accept", k));

    std::vector<JetKey> keys;
    for (const auto& [key, v] : Y.psi)
      if (key.second.order() >= 1) keys.push_back(key);
    auto bumped = Y;
    bumped.psi[rng.pick(keys)] += Expression(1);
    rejected.record(!check_mu_prolongation(bumped, mu, s).pass, label("reject", k));
  }
  return {accepted, rejected};
}

Tally mu_deviation_suite(std::uint64_t seed) {
  Tally t{"mu_deviation vanishes on Q = 0"};
  Rng rng(seed);
  for (int k = 0; k < 20; ++k) {
    const std::size_t q = 1 + static_cast<std::size_t>(k % 2);
    const unsigned n = 1 + static_cast<unsigned>(k % 3);
    JetSpace s(1, q, 0, n);
    auto X = random_point_field(rng, s, 1, true);
    X.xi[0] = Expression(1) + random_polynomial(rng, base_atoms(s), 1, 2);
    if (X.xi[0].is_zero()) X.xi[0] = Expression(1);
    auto mu = random_mu(rng, s, 1, false);
    // Q^a = phi^a - u^a_x xi = 0 solved for u^a_x.
    EquationSystem sys;
    for (std::size_t a = 0; a < q; ++a) sys.add_rule(s.u(a, s.unit(0)), X.phi[a] / X.xi[0]);
    Reducer reduce(sys, s);
    bool zero = true;
    try {
      for (const auto& [key, F] : mu_deviation(X, mu, n, s)) zero = zero && reduce(F).is_zero();
    } catch (const Error& e) {
      t.record(false, label("case", k) + ": " + e.what());
      continue;
    }
    t.record(zero, label("case", k));
  }
  return t;
}

}  // namespace twistkit::testing

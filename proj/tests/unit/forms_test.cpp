#include <gtest/gtest.h>

#include "suites.hpp"
#include "support.hpp"
#include "twistkit/forms/deformed.hpp"
#include "twistkit/jet/symmetry.hpp"
#include "twistkit/symbolic/error.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

DiffForm d_of(const Atom& a) { return DiffForm::differential_of(a); }
DiffForm fn(const Expression& e) { return DiffForm::function(e); }

void expect_suite(const Tally& t) { EXPECT_TRUE(t.ok()) << t.name << ": " << t.passed << "/" << t.total << ", " << t.first_failure; }

}  // namespace

TEST(Wedge, Examples) {
  auto d = default_declarations(1, 1, 0);
  JetSpace s = d.space(1);
  auto dx = d_of(s.x(0)), du = d_of(s.u(0));
  EXPECT_TRUE(wedge(dx, dx).is_zero());
  EXPECT_EQ(wedge(dx, du), -wedge(du, dx));
  EXPECT_EQ(wedge(expr("u", d) * dx, expr("x", d) * du), expr("x*u", d) * wedge(dx, du));
}

TEST(ExteriorD, Examples) {
  auto d = default_declarations(1, 1, 0);
  JetSpace s = d.space(1);
  EXPECT_EQ(exterior_d(fn(expr("x*u", d))), expr("u", d) * d_of(s.x(0)) + expr("x", d) * d_of(s.u(0)));
  EXPECT_EQ(exterior_d(contact_form(0, s.zero(), s)), -wedge(d_of(s.u(0, {1})), d_of(s.x(0))));
}

TEST(ExteriorD, Nilpotent) {
  Rng rng(kOracleSeed);
  JetSpace s(2, 1, 0, 1);
  auto atoms = jet_atoms(s, 1);
  for (int k = 0; k < 30; ++k) {
    DiffForm a = fn(random_rational(rng, atoms, 2, 3));
    if (k % 2) a = wedge(a, d_of(rng.pick(atoms)));
    EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero()) << k;
  }
}

TEST(ContactForm, Examples) {
  auto d1 = default_declarations(1, 1, 0);
  JetSpace s1 = d1.space(2);
  EXPECT_EQ(contact_form(0, s1.zero(), s1), d_of(s1.u(0)) - expr("u_x", d1) * d_of(s1.x(0)));
  EXPECT_EQ(contact_form(0, {1}, s1), d_of(s1.u(0, {1})) - expr("u_xx", d1) * d_of(s1.x(0)));
  auto d2 = default_declarations(2, 1, 0);
  JetSpace s2 = d2.space(1);
  EXPECT_EQ(contact_form(0, s2.zero(), s2),
            d_of(s2.u(0)) - expr("u_x", d2) * d_of(s2.x(0)) - expr("u_t", d2) * d_of(s2.x(1)));
  try {
    (void)contact_form(0, {1, 0}, s2);
    ADD_FAILURE() << "expected OrderTooHigh";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooHigh);
  }
}

TEST(ContactIdeal, Membership) {
  JetSpace s(1, 1, 0, 1);
  EXPECT_TRUE(is_in_contact_ideal(contact_form(0, s.zero(), s), s));
  EXPECT_FALSE(is_in_contact_ideal(d_of(s.x(0)), s));
  auto three = wedge(wedge(d_of(s.x(0)), d_of(s.u(0))), d_of(s.u(0, {1})));
  try {
    (void)is_in_contact_ideal(three, s);
    ADD_FAILURE() << "expected UnsupportedDegree";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
  }
}

TEST(LieDerivative, Examples) {
  auto d = default_declarations(1, 1, 0);
  JetSpace s = d.space(1);
  CoordinateField ddx, udu;
  ddx.set(s.x(0), Expression(1));
  udu.set(s.u(0), expr("u", d));
  EXPECT_TRUE(lie_derivative(ddx, d_of(s.x(0))).is_zero());
  EXPECT_EQ(lie_derivative(udu, d_of(s.u(0))), d_of(s.u(0)));
}

TEST(LieDerivative, StandardProlongationPreservesContact) {
  Rng rng(kOracleSeed + 1);
  for (std::size_t p : {1u, 2u}) {
    JetSpace s(p, 2, 0, 2);
    for (int k = 0; k < 5; ++k) {
      auto Y = prolong_standard(random_point_field(rng, s, 2, false), 2, s).as_coordinate_field(s);
      for (const auto& J : s.indices_up_to(1))
        for (std::size_t a = 0; a < 2; ++a)
          EXPECT_TRUE(is_in_contact_ideal(lie_derivative(Y, contact_form(a, J, s)), s));
    }
  }
}

TEST(DeformedD, ZeroMuIsD) {
  Rng rng(kOracleSeed + 2);
  JetSpace s(1, 1, 0, 1);
  for (int k = 0; k < 5; ++k) {
    DiffForm a = fn(random_polynomial(rng, jet_atoms(s, 1), 2, 3));
    EXPECT_EQ(d_mu(a, DiffForm(1)), exterior_d(a));
  }
}

TEST(DeformedD, SquareIsCurvature) {
  // d_mu d_mu a = (d mu + mu ^ mu) a, scalar case: mu ^ mu = 0.
  Rng rng(kOracleSeed + 3);
  JetSpace s(2, 1, 0, 1);
  auto atoms = jet_atoms(s, 1);
  for (int k = 0; k < 10; ++k) {
    DiffForm mu = fn(random_polynomial(rng, atoms, 2, 2));
    mu = wedge(mu, d_of(rng.pick(atoms)));
    DiffForm a = fn(random_polynomial(rng, atoms, 2, 3));
    EXPECT_EQ(d_mu(d_mu(a, mu), mu), wedge(exterior_d(mu), a));
  }
}

TEST(DeformedCalculus, GaugedDerivativesAndFlatness) {
  for (const auto& t : deformed_suite(kOracleSeed + 7)) expect_suite(t);
}

TEST(DeformedLie, FieldExamples) {
  auto d = default_declarations(1, 1, 0);
  JetSpace s = d.space(1);
  CoordinateField X, Y;
  X.set(s.x(0), Expression(1));
  Y.set(s.u(0), Expression(1));
  EXPECT_TRUE(lie_mu(X, Y, DiffForm(1)) == commutator(X, Y));
  EXPECT_TRUE(lie_mu(X, Y, expr("u", d) * d_of(s.x(0))).is_zero());
  // (Y _| mu) = 1 for Y = d_x, mu = dx.
  EXPECT_EQ(lie_mu(Y, X, d_of(s.x(0))), -Expression(1) * Y);
}

TEST(Mch, Examples) {
  auto d = default_declarations(2, 2, 0);
  JetSpace s = d.space(1);
  EXPECT_TRUE(check_MCH(MatrixOneForm::zero(s), s).pass);
  JetSpace s1(1, 2, 0, 1);
  MatrixOneForm any{{Matrix{{expr("u1", d), Expression(1)}, {Expression(), expr("x*u2_x", d)}}}};
  EXPECT_TRUE(check_MCH(any, s1).pass);
  MatrixOneForm bad{{Matrix{{expr("t", d), Expression()}, {Expression(), Expression()}}, Matrix::zero(2)}};
  auto r = check_MCH(bad, s);
  EXPECT_FALSE(r.pass);
}

TEST(Nabla, Examples) {
  auto d = default_declarations(1, 2, 0);
  JetSpace s = d.space(1);
  std::vector<Expression> v{expr("u1", d), expr("x", d)};
  auto zero = nabla_apply(MatrixOneForm::zero(s), 0, v, s);
  EXPECT_EQ(zero[0], expr("u1_x", d));
  EXPECT_EQ(zero[1], Expression(1));
  MatrixOneForm L{{Matrix{{Expression(2), Expression(3)}, {Expression(), Expression(1)}}}};
  auto c = nabla_apply(L, 0, {Expression(1), Expression(1)}, s);
  EXPECT_EQ(c[0], Expression(5));
  EXPECT_EQ(c[1], Expression(1));
}

TEST(MuProlongation, AcceptsConstructionRejectsPerturbation) {
  for (const auto& t : prolongation_criterion_suite(kOracleSeed + 8)) {
    EXPECT_EQ(t.total, 10u);
    expect_suite(t);
  }
}

TEST(MuProlongation, ZeroMuClassicalCriterion) {
  Rng rng(kOracleSeed + 4);
  JetSpace s(1, 1, 0, 2);
  for (int k = 0; k < 5; ++k) {
    auto X = random_point_field(rng, s, 2, false);
    EXPECT_TRUE(check_mu_prolongation(prolong_standard(X, 2, s), MatrixOneForm::zero(s), s).pass);
  }
}

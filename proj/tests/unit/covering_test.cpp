#include <gtest/gtest.h>

#include "support.hpp"
#include "twistkit/covering/covering.hpp"
#include "twistkit/jet/symmetry.hpp"
#include "twistkit/symbolic/error.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

EquationSystem base_of(const std::string& residual, const Declarations& d) {
  EquationSystem sys;
  sys.add_residual(expr(residual, d));
  return sys;
}

Matrix mat(const Declarations& d, std::vector<std::vector<std::string>> rows) {
  std::vector<std::vector<Expression>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& t : r) out.back().push_back(expr(t, d));
  }
  return Matrix::from_rows(out);
}

Declarations agl(std::size_t r) {
  Declarations d = default_declarations(1, 1, r);
  d.declare_constant("m");
  d.declare_function({"g", {"x"}});
  return d;
}

const char* kAgl = "u_xx - u_x^2/u - (m*g(x)*u_x + g'(x)*u)*u^m";
const char* kAglLambda = "u_x/u + m*g(x)*u^m";

}  // namespace

TEST(AugmentedDerivative, Examples) {
  auto d = default_declarations(1, 1, 1);
  JetSpace s = d.space(1);
  CoveringSystem cov(base_of("u_x - u", d), {{expr("u*w", d)}}, s);
  EXPECT_EQ(augmented_total_derivative(expr("w", d), 0, cov), expr("u*w", d));
  EXPECT_EQ(augmented_total_derivative(expr("u", d), 0, cov), expr("u_x", d));
}

// D~_t D~_x e - D~_x D~_t e = C_tx * de/dw for the potential Burgers cover.
TEST(AugmentedDerivative, CommutatorIsCompatibilityResidual) {
  auto d = default_declarations(2, 1, 1);
  JetSpace s = d.space(3);
  CoveringSystem cov(base_of("u_t - u_xx - u*u_x", d), {{expr("u", d), expr("u_x + u^2/2", d)}}, s);
  auto report = check_compatibility(cov);
  ASSERT_EQ(report.residuals.size(), 1u);
  Expression C = report.residuals[0].value;
  Rng rng(kOracleSeed);
  JetSpace s1 = d.space(1);
  auto atoms = jet_atoms(s1, 1);
  atoms.push_back(s.w(0));
  for (int k = 0; k < 10; ++k) {
    Expression e = random_polynomial(rng, atoms, 2, 3);
    Expression lhs = augmented_total_derivative(augmented_total_derivative(e, 0, cov), 1, cov) -
                     augmented_total_derivative(augmented_total_derivative(e, 1, cov), 0, cov);
    EXPECT_EQ(lhs, C * partial(e, s.w(0))) << print(e, d);
  }
}

TEST(Cofactors, ExactDivision) {
  auto d = default_declarations(2, 1, 0);
  auto base = base_of("u_t - u_xx - u*u_x", d);
  auto c = cofactors(expr("(x + 1)*(u_t - u_xx - u*u_x)/u", d), base);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->at(0), expr("(x + 1)/u", d));
  EXPECT_FALSE(cofactors(expr("u_t - u_xx", d), base).has_value());
}

TEST(Compatibility, GibbonsTsarev) {
  auto d = default_declarations(2, 1, 1);
  JetSpace s = d.space(2);
  CoveringSystem cov(base_of("u_xx + u_t*u_xt - u_x*u_tt + 1", d),
                     {{expr("(w - u_t)/(u_x + u_t*w - w^2)", d), expr("1/(u_x + u_t*w - w^2)", d)}}, s);
  auto r = check_compatibility(cov);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.trivial);
  ASSERT_EQ(r.residuals.size(), 1u);
  const auto& res = r.residuals[0];
  EXPECT_EQ(res.i, 1u);
  EXPECT_EQ(res.j, 0u);
  EXPECT_EQ(res.value, expr("(1 - u_tt*u_x + u_t*u_xt + u_xx)/(u_x + (u_t - w)*w)^2", d));
  ASSERT_EQ(res.cofactors.size(), 1u);
  EXPECT_EQ(res.cofactors[0], expr("1/(u_x + (u_t - w)*w)^2", d));
}

TEST(Compatibility, TrivialCovering) {
  auto d = default_declarations(2, 1, 1);
  JetSpace s = d.space(2);
  auto r = check_compatibility(CoveringSystem(base_of("u_t - u_xx", d), {{expr("t", d), expr("x", d)}}, s));
  EXPECT_TRUE(r.trivial);
  EXPECT_FALSE(r.pass);
}

TEST(Compatibility, NoDecomposition) {
  auto d = default_declarations(2, 1, 1);
  JetSpace s = d.space(2);
  try {
    (void)check_compatibility(CoveringSystem(base_of("u_t - u_xx", d), {{expr("u", d), expr("u*x", d)}}, s));
    ADD_FAILURE() << "expected NoDecomposition";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoDecomposition);
  }
}

// The printed Lax pair leaves 14*eta*u_x on the diagonal; only eta = 0 closes.
TEST(MatrixCovering, BurgersLaxPair) {
  auto d = default_declarations(2, 1, 0);
  d.declare_constant("eta");
  JetSpace s = d.space(2);
  auto base = base_of("u_t - u_xx - u*u_x", d);
  MatrixCovering lax{mat(d, {{"4*eta", "2*u + 4*eta"}, {"2*u - 4*eta", "-4*eta"}}),
                     mat(d, {{"2*u*eta", "u^2 + 2*u_x + 2*u*eta"}, {"u^2 + 2*u_x - 2*u*eta", "-2*u*eta"}})};
  auto r = check_matrix_covering(lax, base, s);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.reduced(0, 0), expr("14*eta*u_x", d));
  EXPECT_EQ(r.reduced(0, 1), expr("14*eta*u_x", d));
  EXPECT_EQ(r.reduced(1, 0), expr("-14*eta*u_x", d));
  EXPECT_EQ(r.reduced(1, 1), expr("-14*eta*u_x", d));

  MatrixCovering eta0{mat(d, {{"0", "2*u"}, {"2*u", "0"}}), mat(d, {{"0", "u^2 + 2*u_x"}, {"u^2 + 2*u_x", "0"}})};
  auto r0 = check_matrix_covering(eta0, base, s);
  EXPECT_TRUE(r0.pass);
  EXPECT_FALSE(r0.trivial);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) EXPECT_TRUE(r0.reduced(a, b).is_zero());
  EXPECT_EQ(r0.Z(0, 1), expr("2*(u_t - u_xx - u*u_x)", d));
  ASSERT_EQ(r0.cofactors.size(), 4u);
  ASSERT_EQ(r0.cofactors[1].size(), 1u);
  EXPECT_EQ(r0.cofactors[1][0], Expression(2));
}

TEST(MatrixCovering, TrivialPairs) {
  auto d = default_declarations(2, 1, 0);
  JetSpace s = d.space(2);
  auto base = base_of("u_t - u_xx - u*u_x", d);
  auto zero = check_matrix_covering({Matrix::zero(2), Matrix::zero(2)}, base, s);
  EXPECT_TRUE(zero.trivial);
  EXPECT_FALSE(zero.pass);
  auto commuting = check_matrix_covering({mat(d, {{"1", "2"}, {"0", "1"}}), mat(d, {{"3", "5"}, {"0", "3"}})}, base, s);
  EXPECT_TRUE(commuting.trivial);
  EXPECT_FALSE(commuting.pass);
}

TEST(AugmentedSymmetry, AglExponentialField) {
  auto d = agl(1);
  JetSpace s = d.space(2);
  CoveringSystem cov(base_of(kAgl, d), {{expr(kAglLambda, d)}}, s);
  VectorField X{{Expression()}, {expr("exp(w)", d)}, {expr("(m + 1)*exp(w)/u", d)}};
  EXPECT_TRUE(check_augmented_symmetry(X, cov, 2).pass);
  auto sc = check_semiclassical(X, cov);
  EXPECT_TRUE(sc.is_semiclassical);
  EXPECT_TRUE(sc.exponential_form);
  EXPECT_EQ(sc.phi0.at(0), Expression(1));
  EXPECT_EQ(sc.eta0.at(0), expr("(m + 1)/u", d));
}

// The candidate field of the u_x = u, w_x = u w example is not a symmetry.
TEST(AugmentedSymmetry, LinearCoverCandidate) {
  auto d = default_declarations(1, 1, 1);
  JetSpace s = d.space(1);
  CoveringSystem cov(base_of("u_x - u", d), {{expr("u*w", d)}}, s);
  VectorField X{{Expression()}, {expr("u*w", d)}, {expr("w", d)}};
  auto r = check_augmented_symmetry(X, cov, 1);
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.residuals.size(), 2u);
  EXPECT_EQ(r.residuals[0], expr("u^2*w", d));
  EXPECT_EQ(r.residuals[1], expr("-u*w^2", d));
  auto sc = check_semiclassical(X, cov);
  EXPECT_TRUE(sc.is_semiclassical);
  EXPECT_FALSE(sc.exponential_form);
}

TEST(Semiclassical, Examples) {
  auto d = default_declarations(1, 1, 1);
  JetSpace s = d.space(1);
  CoveringSystem cov(base_of("u_x - u", d), {{expr("u", d)}}, s);
  auto r = check_semiclassical({{Expression()}, {expr("exp(w)", d)}, {Expression()}}, cov);
  EXPECT_TRUE(r.is_semiclassical);
  EXPECT_TRUE(r.exponential_form);
  EXPECT_EQ(r.phi0.at(0), Expression(1));
  auto jet = check_semiclassical({{Expression()}, {expr("u_x", d)}, {Expression()}}, cov);
  EXPECT_FALSE(jet.is_semiclassical);
}

TEST(Reconstruct, AglLambdaSymmetry) {
  auto d = agl(1);
  JetSpace s = d.space(2);
  Expression lam = expr(kAglLambda, d);
  auto base = base_of(kAgl, d);
  CoveringSystem cov(base, {{lam}}, s);
  VectorField X{{Expression()}, {expr("exp(w)", d)}, {expr("(m + 1)*exp(w)/u", d)}};
  auto r = reconstruct_lambda(X, cov, 2);
  EXPECT_TRUE(r.matched);
  EXPECT_EQ(r.X0.phi.at(0), Expression(1));
  EXPECT_TRUE(r.X0.xi.at(0).is_zero());
  EXPECT_EQ(r.restricted.psi_at(0, {1}), lam);
  EXPECT_EQ(r.restricted.psi_at(0, {2}), lam * lam + total_derivative(lam, 0, s));
  // The reconstructed field is a lambda-symmetry of the base equation.
  EXPECT_TRUE(check_symmetry(r.X0, base, Twisting::with_lambda(lam), 2, s).pass);
}

TEST(Reconstruct, ZeroLambdaIsStandard) {
  auto d = default_declarations(1, 1, 1);
  JetSpace s = d.space(2);
  CoveringSystem cov(base_of("u_xx - u", d), {{Expression()}}, s);
  auto r = reconstruct_lambda({{Expression()}, {expr("exp(w)", d)}, {Expression()}}, cov, 2);
  EXPECT_TRUE(r.matched);
  EXPECT_EQ(r.restricted.psi, prolong_standard({{Expression()}, {Expression(1)}, {}}, 2, s).psi);
}

TEST(Reconstruct, OrderCoherence) {
  auto d = agl(1);
  JetSpace s = d.space(2);
  CoveringSystem cov(base_of(kAgl, d), {{expr(kAglLambda, d)}}, s);
  VectorField X{{Expression()}, {expr("exp(w)", d)}, {expr("(m + 1)*exp(w)/u", d)}};
  auto r1 = reconstruct_lambda(X, cov, 1);
  auto r2 = reconstruct_lambda(X, cov, 2);
  EXPECT_EQ(r2.restricted.truncated(1), r1.restricted);
}

TEST(Reconstruct, RejectsNonExponentialForm) {
  auto d = default_declarations(1, 1, 1);
  JetSpace s = d.space(1);
  CoveringSystem cov(base_of("u_x - u", d), {{expr("u*w", d)}}, s);
  try {
    (void)reconstruct_lambda({{Expression()}, {expr("u*w", d)}, {expr("w", d)}}, cov, 1);
    ADD_FAILURE() << "expected NotExponentialForm";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExponentialForm);
  }
}

TEST(Reconstruct, ScalarMuMatchesLambda) {
  auto d = agl(1);
  JetSpace s = d.space(2);
  CoveringSystem cov(base_of(kAgl, d), {{expr(kAglLambda, d)}}, s);
  VectorField X{{Expression()}, {expr("exp(w)", d)}, {expr("(m + 1)*exp(w)/u", d)}};
  auto viaLambda = reconstruct_lambda(X, cov, 2);
  auto viaMu = reconstruct_mu(X, Matrix::scalar(1, expr("exp(w)", d)), cov, 2);
  EXPECT_TRUE(viaMu.matched);
  EXPECT_TRUE(viaMu.mch_pass);
  EXPECT_EQ(viaMu.mu.lambdas[0](0, 0), expr(kAglLambda, d));
  EXPECT_EQ(viaMu.restricted, viaLambda.restricted);
}

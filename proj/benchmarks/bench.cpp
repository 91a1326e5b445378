#include <benchmark/benchmark.h>

#include "twistkit/covering/covering.hpp"
#include "twistkit/frontend/parser.hpp"
#include "twistkit/gauge/gauge.hpp"
#include "twistkit/jet/prolongation.hpp"

using namespace twistkit;

namespace {

Declarations agl() {
  Declarations d;
  d.declare_independent("x");
  d.declare_dependent("u");
  d.declare_auxiliary("w");
  d.declare_constant("m");
  d.declare_function({"g", {"x"}});
  return d;
}

Declarations xt() {
  Declarations d;
  d.declare_independent("x");
  d.declare_independent("t");
  d.declare_dependent("u");
  d.declare_auxiliary("w");
  return d;
}

const char* kLambda = "u_x/u + m*g(x)*u^m";

void BM_LambdaProlongation(benchmark::State& state) {
  auto d = agl();
  const auto n = static_cast<unsigned>(state.range(0));
  JetSpace s = d.space(n);
  Expression lam = parse_expression(kLambda, d);
  VectorField X{{Expression()}, {Expression(1)}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(prolong_lambda(X, lam, n, s));
}
BENCHMARK(BM_LambdaProlongation)->DenseRange(1, 4);

void BM_StandardProlongationBurgersScaling(benchmark::State& state) {
  auto d = xt();
  const auto n = static_cast<unsigned>(state.range(0));
  JetSpace s = d.space(n);
  VectorField X{{parse_expression("x", d), parse_expression("2*t", d)}, {parse_expression("-u", d)}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(prolong_standard(X, n, s));
}
BENCHMARK(BM_StandardProlongationBurgersScaling)->DenseRange(1, 4);

void BM_GibbonsTsarevCompatibility(benchmark::State& state) {
  auto d = xt();
  JetSpace s = d.space(2);
  EquationSystem base;
  base.add_residual(parse_expression("u_xx + u_t*u_xt - u_x*u_tt + 1", d));
  CoveringSystem cov(base,
                     {{parse_expression("(w - u_t)/(u_x + u_t*w - w^2)", d),
                       parse_expression("1/(u_x + u_t*w - w^2)", d)}},
                     s);
  for (auto _ : state) benchmark::DoNotOptimize(check_compatibility(cov));
}
BENCHMARK(BM_GibbonsTsarevCompatibility);

void BM_GaugeDiagram(benchmark::State& state) {
  Declarations d;
  d.declare_independent("x");
  d.declare_dependent("u1");
  d.declare_dependent("u2");
  JetSpace s = d.space(2);
  GaugeMap g(parse_matrix("[[1, x*u1], [u2, 1 + x*u1*u2]]", d));
  VectorField X{{Expression()}, {parse_expression("u1*u2 + x", d), parse_expression("u1^2", d)}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(check_gauge_diagram(g, X, 2, s));
}
BENCHMARK(BM_GaugeDiagram);

void BM_ParseExpression(benchmark::State& state) {
  auto d = agl();
  const std::string src = "u_x^2/u + (m*g(x)*u_x + g'(x)*u)*u^m - exp(2*w)*(u_xx - u)/(u + x)^3";
  for (auto _ : state) benchmark::DoNotOptimize(parse_expression(src, d));
}
BENCHMARK(BM_ParseExpression);

void BM_PolynomialGcd(benchmark::State& state) {
  auto d = xt();
  const auto k = static_cast<long>(state.range(0));
  Expression common = pow(parse_expression("u_x + u_t*w - w^2 + x", d), k);
  Polynomial a = (common * parse_expression("u + x*t - 1", d)).num();
  Polynomial b = (common * parse_expression("w*u_t + 3", d)).num();
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();

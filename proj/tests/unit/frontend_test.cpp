#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "twistkit/frontend/problem.hpp"
#include "twistkit/frontend/report.hpp"
#include "twistkit/jet/prolongation.hpp"
#include "twistkit/symbolic/error.hpp"

using namespace twistkit;
using namespace twistkit::testing;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TWISTKIT_PROBLEMS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

Declarations rich_declarations() {
  Declarations d = default_declarations(2, 2, 1);
  d.declare_constant("m");
  d.declare_constant("eta");
  d.declare_function({"g", {"x"}});
  d.declare_function({"alpha", {"x", "t"}});
  return d;
}

const char* kFailingSymmetry =
    "[vars]\nx\n[deps]\nu\n[equation e]\nu_x = u\n[field X]\nu = 1\n"
    "[task check-symmetry]\nfield = X\nequation = e\nmode = standard\n";

}  // namespace

TEST(ParseExpression, AglRightHandSide) {
  Declarations d = default_declarations(1, 1, 0);
  d.declare_constant("m");
  d.declare_function({"g", {"x"}});
  JetSpace s = d.space(2);
  Expression u(s.u(0)), ux(s.u(0, {1}));
  Expression g = expr("g(x)", d), gp = expr("g'(x)", d);
  Expression um = power(u, expr("m", d));
  Expression want = ux * ux / u + (expr("m", d) * g * ux + gp * u) * um;
  EXPECT_EQ(parse_expression("u_x^2/u + (m*g(x)*u_x + g'(x)*u)*u^m", d), want);
  EXPECT_EQ(total_derivative(g, 0, s), gp);
}

TEST(ParseExpression, Precedence) {
  Declarations d = default_declarations(1, 1, 0);
  EXPECT_EQ(parse_expression("2^3^2", d), Expression(512));
  EXPECT_EQ(parse_expression("-u^2", d), -(Expression(d.space(1).u(0)) * Expression(d.space(1).u(0))));
  EXPECT_EQ(parse_expression("1 - x - u", d), parse_expression("1 - (x + u)", d));
  EXPECT_EQ(parse_expression("x/2/u", d), parse_expression("x/(2*u)", d));
}

TEST(ParseExpression, SubscriptOrderIrrelevant) {
  Declarations d = default_declarations(2, 1, 0);
  EXPECT_EQ(parse_expression("u_xt", d), parse_expression("u_tx", d));
  EXPECT_EQ(parse_expression("u_xxt", d), parse_expression("u_txx", d));
}

TEST(ParseExpression, Errors) {
  Declarations d = default_declarations(1, 1, 0);
  d.declare_function({"g", {"x"}});
  try {
    (void)parse_expression("v + 1", d);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSymbol);
    EXPECT_NE(std::string(e.what()).find("v"), std::string::npos);
  }
  try {
    (void)parse_expression("u +\n  * 1", d);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_NE(e.detail().find("line 2, column 3"), std::string::npos) << e.detail();
  }
  EXPECT_EQ(error_kind([&] { (void)parse_expression("g(x, u)", d); }), ErrorKind::ArityError);
  EXPECT_EQ(error_kind([&] { (void)parse_expression("(u + 1", d); }), ErrorKind::SyntaxError);
}

TEST(ParseExpression, RoundTripRandom) {
  Declarations d = rich_declarations();
  JetSpace s = d.space(2);
  std::vector<Atom> atoms = jet_atoms(s, 2);
  for (const char* t : {"g(x)", "g'(x)", "alpha(x,t)", "alpha_xt(x,t)", "exp(w)", "u1^m", "u2^(m/2)", "eta", "w"})
    for (const auto& a : parse_expression(t, d).atoms()) atoms.push_back(a);
  Rng rng(kOracleSeed);
  for (int k = 0; k < 250; ++k) {
    Expression e = random_rational(rng, atoms, 2, 3);
    if (k % 3 == 0) e *= exp(random_polynomial(rng, base_atoms(s), 2, 2));
    if (k % 5 == 0) e *= power(Expression(rng.pick(atoms)), parse_expression("m/3 - 1", d));
    std::string text = print(e, d);
    EXPECT_EQ(parse_expression(text, d), e) << text;
  }
}

TEST(ParseExpression, RoundTripModuleOutputs) {
  Declarations d = default_declarations(1, 1, 0);
  d.declare_constant("m");
  d.declare_function({"g", {"x"}});
  JetSpace s = d.space(3);
  Expression lam = parse_expression("u_x/u + m*g(x)*u^m", d);
  auto Y = prolong_lambda({{Expression()}, {Expression(1)}, {}}, lam, 3, s);
  for (const auto& [key, v] : Y.psi) EXPECT_EQ(parse_expression(print(v, d), d), v) << print(v, d);
}

TEST(ParseProblem, AglFixture) {
  auto doc = parse_problem(fixture("example5.twist"));
  EXPECT_EQ(doc.equations.size(), 1u);
  EXPECT_EQ(doc.coverings.size(), 1u);
  EXPECT_EQ(doc.fields.size(), 1u);
  EXPECT_EQ(doc.tasks.size(), 3u);
}

TEST(ParseProblem, EmptyTaskList) {
  auto doc = parse_problem("[vars]\nx\n[deps]\nu\n# nothing to do\n");
  EXPECT_TRUE(doc.tasks.empty());
  auto report = execute(doc, kOracleSeed);
  EXPECT_TRUE(report.tasks.empty());
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(ParseProblem, Errors) {
  EXPECT_EQ(error_kind([] {
              (void)parse_problem("[vars]\nx, t\n[deps]\nu\n[aux]\nw\n[equation e]\nu_t = u_xx\n"
                                  "[covering c]\nbase = e\nw_x = u\nw_t = u_x\nw2_x = u\n");
            }),
            ErrorKind::UndeclaredReference);
  EXPECT_EQ(error_kind([] { (void)parse_problem("[vars]\nx, x\n"); }), ErrorKind::DuplicateDeclaration);
  EXPECT_EQ(error_kind([] {
              (void)parse_problem("[vars]\nx\n[deps]\nu\n[task check-symmetry]\nfield = X\nequation = e\n");
            }),
            ErrorKind::UndeclaredReference);
  EXPECT_EQ(error_kind([] { (void)parse_problem("[vars]\nx\n[deps]\nu\n[equation e]\nu_x = v\n"); }),
            ErrorKind::UnknownSymbol);
}

TEST(ParseProblem, RenderRoundTrip) {
  for (const char* name :
       {"example5.twist", "agl_lambda.twist", "gibbons_tsarev.twist", "burgers.twist", "linear_cover.twist"}) {
    auto doc = parse_problem(fixture(name));
    std::string text = render_problem(doc);
    EXPECT_EQ(parse_problem(text), doc) << name;
    EXPECT_EQ(render_problem(parse_problem(text)), text) << name;
  }
}

TEST(Execute, AglVerdicts) {
  auto report = execute(parse_problem(fixture("example5.twist")), kOracleSeed);
  ASSERT_EQ(report.tasks.size(), 3u);
  for (const auto& t : report.tasks) EXPECT_EQ(t.verdict, Verdict::Pass) << t.name << " " << t.error;
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(Execute, FailingSymmetryResidual) {
  auto report = execute(parse_problem(kFailingSymmetry), kOracleSeed);
  ASSERT_EQ(report.tasks.size(), 1u);
  EXPECT_EQ(report.tasks[0].verdict, Verdict::Fail);
  ASSERT_EQ(report.tasks[0].residuals.size(), 1u);
  EXPECT_EQ(report.tasks[0].residuals[0], "-1");
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(Execute, ErrorsAreIsolated) {
  std::string src =
      "[vars]\nx, t\n[deps]\nu\n[aux]\nw\n"
      "[equation e]\nu_t = u_x\n"
      "[equation heat]\nu_t = u_xx\n"
      "[covering pole]\nbase = e\nw_x = 1/(u_t - u_x)\nw_t = 0\n"
      "[covering potential]\nbase = heat\nw_x = u\nw_t = u_x\n"
      "[field shift]\nx = 1\n"
      "[task check-covering]\nname = good\ncovering = potential\n"
      "[task check-covering]\nname = bad\ncovering = pole\n"
      "[task check-symmetry]\nname = shift\nfield = shift\nequation = heat\n";
  auto doc = parse_problem(src);
  auto report = execute(doc, kOracleSeed);
  ASSERT_EQ(report.tasks.size(), 3u);
  EXPECT_EQ(report.tasks[0].name, "good");
  EXPECT_EQ(report.tasks[0].verdict, Verdict::Pass);
  EXPECT_EQ(report.tasks[1].verdict, Verdict::Error);
  EXPECT_NE(report.tasks[1].error.find("DivisionByZero"), std::string::npos) << report.tasks[1].error;
  EXPECT_EQ(report.tasks[2].verdict, Verdict::Pass);
  EXPECT_EQ(report.exit_code(), 2);
  for (std::size_t k = 0; k < doc.tasks.size(); ++k)
    EXPECT_EQ(run_task(doc, doc.tasks[k], kOracleSeed).verdict, report.tasks[k].verdict);
}

TEST(Report, HumanLinesEndInVerdict) {
  auto text = render_report(execute(parse_problem(fixture("example5.twist")), kOracleSeed), ReportFormat::Human);
  std::istringstream in(text);
  std::string line;
  int verdict_lines = 0;
  while (std::getline(in, line))
    if (line.size() >= 4 && line.compare(line.size() - 4, 4, "PASS") == 0) ++verdict_lines;
  EXPECT_EQ(verdict_lines, 3) << text;
}

TEST(Report, StructuredIsDeterministic) {
  auto doc = parse_problem(fixture("burgers.twist"));
  auto a = render_report(execute(doc, kOracleSeed), ReportFormat::Structured);
  auto b = render_report(execute(doc, kOracleSeed), ReportFormat::Structured);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("twistkit-report 1\n", 0), 0u);
  EXPECT_NE(a.find("task.2.verdict=pass"), std::string::npos) << a;
  EXPECT_NE(a.find("exit=1"), std::string::npos) << a;
}

TEST(Report, GibbonsTsarevCofactor) {
  auto text = render_report(execute(parse_problem(fixture("gibbons_tsarev.twist")), kOracleSeed),
                            ReportFormat::Structured);
  EXPECT_NE(text.find("task.0.verdict=pass"), std::string::npos) << text;
  EXPECT_NE(text.find("task.0.cofactor.0=1/(u_t*w - w^2 + u_x)^2"), std::string::npos) << text;
}

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <fstream>
#include <iostream>
#include <sstream>

#include "twistkit/frontend/report.hpp"
#include "twistkit/symbolic/error.hpp"

namespace {

struct Options {
  unsigned order = 0;
  std::string mode;
  std::string format = "human";
  std::uint64_t seed = 20240601;
  std::string file;
  std::string name;
  std::string field;
  std::string equation;
  std::string covering;
  std::string lambda;
  std::string mu;
  std::string gauge;
  std::string G;
  std::string eta;
  std::string zeta;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw twistkit::Error(twistkit::ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

twistkit::TaskDecl task_from(const std::string& kind, const Options& o, const twistkit::ProblemDocument& doc) {
  twistkit::TaskDecl t;
  t.kind = kind;
  t.name = o.name.empty() ? kind : o.name;
  t.field = o.field;
  t.equation = o.equation;
  t.covering = o.covering;
  t.mode = o.mode;
  t.lambda = o.lambda;
  t.mu = o.mu;
  t.gauge = o.gauge;
  if (o.order > 0) t.order = o.order;
  if (!o.G.empty()) t.G = twistkit::parse_matrix(o.G, doc.decl);
  if (!o.eta.empty()) t.eta = twistkit::parse_expression(o.eta, doc.decl);
  if (!o.zeta.empty()) t.zeta = twistkit::parse_expression(o.zeta, doc.decl);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for twisted symmetries, gauge maps and coverings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--order", o.order, "Prolongation order (default depends on the task)");
  app.add_option("--mode", o.mode, "Prolongation recursion")->check(CLI::IsMember({"standard", "lambda", "mu"}));
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--seed", o.seed, "Seed of the random zero oracle");

  auto* run = app.add_subcommand("run", "Run every task of a problem file");
  run->add_option("file", o.file, "Problem file")->required()->check(CLI::ExistingFile);

  struct Single {
    const char* kind;
    const char* help;
  };
  const Single singles[] = {
      {"prolong", "Print the prolonged coefficients of a field"},
      {"check-symmetry", "Check a field against an equation"},
      {"check-covering", "Check compatibility of first-order aux rules"},
      {"check-matrix-covering", "Check the zero-curvature condition of a matrix covering"},
      {"check-mch", "Check the horizontal Maurer-Cartan equation"},
      {"gauge-diagram", "Check that a gauge map intertwines the prolongations"},
      {"check-augmented-symmetry", "Check a field on a covering system"},
      {"check-semiclassical", "Check the semi-classical and exponential forms"},
      {"reconstruct", "Recover the twisted symmetry behind a covering symmetry"},
      {"check-ibdp", "Check invariance by differentiation"},
  };
  std::string chosen;
  for (const auto& s : singles) {
    auto* sub = app.add_subcommand(s.kind, s.help);
    sub->add_option("file", o.file, "Problem file with the declarations")->required()->check(CLI::ExistingFile);
    sub->add_option("--name", o.name, "Task name in the report");
    sub->add_option("--field", o.field, "Field section");
    sub->add_option("--equation", o.equation, "Equation section");
    sub->add_option("--covering", o.covering, "Covering section");
    sub->add_option("--lambda", o.lambda, "Lambda section");
    sub->add_option("--mu", o.mu, "Mu section");
    sub->add_option("--gauge", o.gauge, "Gauge section");
    sub->add_option("--G", o.G, "Matrix G(w) for reconstruct, as [[...]]");
    sub->add_option("--eta", o.eta, "Order-zero invariant for check-ibdp");
    sub->add_option("--zeta", o.zeta, "Higher invariant for check-ibdp");
    sub->callback([&chosen, kind = s.kind] { chosen = kind; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    auto doc = twistkit::parse_problem(read_file(o.file));
    twistkit::Report report;
    if (run->parsed()) {
      report = twistkit::execute(doc, o.seed);
    } else {
      report.tasks.push_back(twistkit::run_task(doc, task_from(chosen, o, doc), o.seed));
    }
    auto format = o.format == "structured" ? twistkit::ReportFormat::Structured : twistkit::ReportFormat::Human;
    std::cout << twistkit::render_report(report, format);
    return report.exit_code();
  } catch (const twistkit::Error& e) {
    std::cerr << o.file << ": " << e.what() << "\n";
    return 2;
  }
}

#include <algorithm>
#include <chrono>
#include <future>

#include "twistkit/covering/covering.hpp"
#include "twistkit/forms/deformed.hpp"
#include "twistkit/frontend/report.hpp"
#include "twistkit/gauge/gauge.hpp"
#include "twistkit/symbolic/error.hpp"
#include "twistkit/symbolic/evaluate.hpp"

namespace twistkit {

namespace {

class TaskRunner {
 public:
  TaskRunner(const ProblemDocument& doc, const TaskDecl& task, std::uint64_t seed, TaskResult& out)
      : doc_(doc), d_(doc.decl), task_(task), sampler_(seed), out_(out) {}

  void run() {
    const auto& k = task_.kind;
    if (k == "prolong") prolong_task();
    else if (k == "check-symmetry") symmetry_task();
    else if (k == "check-covering") covering_task();
    else if (k == "check-matrix-covering") matrix_covering_task();
    else if (k == "check-mch") mch_task();
    else if (k == "gauge-diagram") gauge_task();
    else if (k == "check-augmented-symmetry") augmented_task();
    else if (k == "check-semiclassical") semiclassical_task();
    else if (k == "reconstruct") reconstruct_task();
    else if (k == "check-ibdp") ibdp_task();
    else throw Error(ErrorKind::InvalidArgument, "unknown task kind " + k);
  }

 private:
  const std::string& need(const std::string& ref, const char* key) const {
    if (ref.empty()) throw Error(ErrorKind::UndeclaredReference, "task " + task_.name + " needs '" + key + "'");
    return ref;
  }
  const VectorField& field() const { return doc_.field(need(task_.field, "field")).field; }
  EquationSystem equation() const { return doc_.equation(need(task_.equation, "equation")).system(); }
  const CoveringDecl& covering_decl() const { return doc_.covering(need(task_.covering, "covering")); }

  unsigned order_or(unsigned fallback) const { return task_.order.value_or(std::max(1u, fallback)); }

  std::string text(const Expression& e) const { return print(e, d_); }
  std::string text(const Matrix& m) const { return print(m, d_); }
  std::string jet_name(const Atom& a) const { return to_string(a, d_.symbols()); }

  Twisting twisting() const {
    std::string mode = task_.mode;
    if (mode.empty()) mode = !task_.lambda.empty() ? "lambda" : !task_.mu.empty() ? "mu" : "standard";
    if (mode == "lambda") return Twisting::with_lambda(doc_.lambda(need(task_.lambda, "lambda")).value);
    if (mode == "mu") return Twisting::with_mu(doc_.mu(need(task_.mu, "mu")).mu);
    return Twisting::standard();
  }

  bool vanishes(const Expression& e) { return is_zero_confirmed(e, sampler_); }

  void verdict_from(bool pass) { out_.verdict = pass ? Verdict::Pass : Verdict::Fail; }

  void residuals_must_vanish(const std::vector<Expression>& rs) {
    bool pass = true;
    for (const auto& r : rs) {
      out_.residuals.push_back(text(r));
      if (!vanishes(r)) pass = false;
    }
    verdict_from(pass);
  }

  void detail(std::string key, std::string value) { out_.details.emplace_back(std::move(key), std::move(value)); }
  void flag(std::string key, bool v) { detail(std::move(key), v ? "true" : "false"); }

  void field_details(const std::string& prefix, const VectorField& X, const JetSpace& s) {
    for (std::size_t i = 0; i < X.xi.size(); ++i) detail(prefix + "." + jet_name(s.x(i)), text(X.xi[i]));
    for (std::size_t a = 0; a < X.phi.size(); ++a) detail(prefix + "." + jet_name(s.u(a)), text(X.phi[a]));
    for (std::size_t b = 0; b < X.eta.size(); ++b) detail(prefix + "." + jet_name(s.w(b)), text(X.eta[b]));
  }

  void prolonged_details(const std::string& prefix, const ProlongedField& Y, const JetSpace& s) {
    for (std::size_t i = 0; i < Y.xi.size(); ++i) detail(prefix + "xi." + jet_name(s.x(i)), text(Y.xi[i]));
    for (const auto& J : s.indices_up_to(Y.order)) {
      for (std::size_t a = 0; a < s.q(); ++a)
        if (auto it = Y.psi.find({a, J}); it != Y.psi.end())
          detail(prefix + "psi." + jet_name(s.u(a, J)), text(it->second));
      for (std::size_t b = 0; b < s.r(); ++b)
        if (auto it = Y.chi.find({b, J}); it != Y.chi.end())
          detail(prefix + "chi." + jet_name(s.w(b, J)), text(it->second));
    }
  }

  void mu_details(const std::string& prefix, const MatrixOneForm& mu, const JetSpace& s) {
    for (std::size_t i = 0; i < mu.lambdas.size(); ++i) detail(prefix + "." + jet_name(s.x(i)), text(mu.lambdas[i]));
  }

  // Differences of psi coefficients, key by key.
  std::vector<Expression> psi_differences(const ProlongedField& a, const ProlongedField& b, const JetSpace& s) {
    std::vector<Expression> out;
    for (const auto& J : s.indices_up_to(std::min(a.order, b.order)))
      for (std::size_t q = 0; q < s.q(); ++q) out.push_back(a.psi_at(q, J) - b.psi_at(q, J));
    return out;
  }

  CoveringSystem covering(unsigned n) const {
    const auto& c = covering_decl();
    if (c.is_matrix()) throw Error(ErrorKind::InvalidArgument, "covering " + c.name + " is a matrix covering");
    std::vector<std::vector<Expression>> H(d_.auxiliaries.size(), std::vector<Expression>(d_.independents.size()));
    for (const auto& r : c.rules) H[r.aux][r.direction] = r.value;
    return CoveringSystem(doc_.equation(c.base).system(), std::move(H), d_.space(n));
  }

  unsigned base_order() const { return doc_.equation(covering_decl().base).system().order(); }

  void prolong_task() {
    const unsigned n = order_or(2);
    JetSpace s = d_.space(n);
    ProlongOptions opt;
    opt.enforce_mch = true;
    ProlongedField Y = prolong(field(), twisting(), n, s, opt);
    prolonged_details("", Y, s);
    out_.verdict = Verdict::Pass;
  }

  void symmetry_task() {
    EquationSystem sys = equation();
    const unsigned n = order_or(sys.order());
    auto rep = check_symmetry(field(), sys, twisting(), n, d_.space(n));
    residuals_must_vanish(rep.residuals);
  }

  void covering_task() {
    auto cov = covering(order_or(base_order()));
    auto rep = check_compatibility(cov);
    for (const auto& r : rep.residuals) {
      out_.residuals.push_back(text(r.value));
      for (const auto& c : r.cofactors) out_.cofactors.push_back(text(c));
    }
    flag("trivial", rep.trivial);
    verdict_from(rep.pass);
  }

  void matrix_covering_task() {
    const auto& c = covering_decl();
    if (!c.is_matrix()) throw Error(ErrorKind::InvalidArgument, "covering " + c.name + " has no A, B matrices");
    EquationSystem base = doc_.equation(c.base).system();
    const unsigned n = order_or(base.order());
    auto rep = check_matrix_covering({*c.A, *c.B}, base, d_.space(n));
    for (const auto& e : rep.reduced.entries()) out_.residuals.push_back(text(e));
    for (const auto& cof : rep.cofactors) {
      std::string joined;
      for (const auto& e : cof) joined += (joined.empty() ? "" : ", ") + text(e);
      out_.cofactors.push_back(cof.empty() ? "none" : joined);
    }
    detail("Z", text(rep.Z));
    flag("trivial", rep.trivial);
    verdict_from(rep.pass);
  }

  void mch_task() {
    const auto& mu = doc_.mu(need(task_.mu, "mu")).mu;
    unsigned k = 0;
    for (const auto& L : mu.lambdas)
      for (const auto& e : L.entries()) k = std::max(k, e.jet_order());
    auto rep = check_MCH(mu, d_.space(order_or(k)));
    std::vector<Expression> rs;
    for (const auto& r : rep.residuals)
      for (const auto& e : r.value.entries()) rs.push_back(e);
    residuals_must_vanish(rs);
  }

  void gauge_task() {
    const unsigned n = order_or(2);
    JetSpace s = d_.space(n);
    GaugeMap g(doc_.gauge(need(task_.gauge, "gauge")).R);
    auto rep = check_gauge_diagram(g, field(), n, s);
    mu_details("mu", rep.mu, s);
    residuals_must_vanish(psi_differences(rep.twisted_path, rep.standard_path, s));
    if (!rep.pass) out_.verdict = Verdict::Fail;
  }

  void augmented_task() {
    auto cov = covering(order_or(base_order()));
    auto rep = check_augmented_symmetry(field(), cov, cov.space().n());
    residuals_must_vanish(rep.residuals);
  }

  void semiclassical_task() {
    auto cov = covering(order_or(base_order()));
    auto rep = check_semiclassical(field(), cov);
    flag("semiclassical", rep.is_semiclassical);
    flag("exponential_form", rep.exponential_form);
    if (rep.exponential_form) {
      JetSpace s = cov.space();
      for (std::size_t i = 0; i < rep.xi0.size(); ++i) detail("xi0." + jet_name(s.x(i)), text(rep.xi0[i]));
      for (std::size_t a = 0; a < rep.phi0.size(); ++a) detail("phi0." + jet_name(s.u(a)), text(rep.phi0[a]));
      for (std::size_t b = 0; b < rep.eta0.size(); ++b) detail("eta0." + jet_name(s.w(b)), text(rep.eta0[b]));
    }
    verdict_from(rep.is_semiclassical && rep.exponential_form);
  }

  void reconstruct_task() {
    auto cov = covering(order_or(base_order()));
    const unsigned n = cov.space().n();
    auto rep = task_.G ? reconstruct_mu(field(), *task_.G, cov, n) : reconstruct_lambda(field(), cov, n);
    JetSpace s = cov.base_space();
    field_details("X0", rep.X0, s);
    mu_details("mu", rep.mu, s);
    prolonged_details("restricted.", rep.restricted, s);
    flag("mch", rep.mch_pass);
    for (const auto& e : psi_differences(rep.restricted, rep.expected, s)) out_.residuals.push_back(text(e));
    verdict_from(rep.matched && rep.mch_pass);
  }

  void ibdp_task() {
    if (!task_.eta || !task_.zeta) throw Error(ErrorKind::InvalidArgument, "check-ibdp needs eta and zeta");
    const unsigned n = order_or(task_.zeta->jet_order() + 1);
    auto rep = check_ibdp(field(), twisting(), *task_.eta, *task_.zeta, d_.space(n));
    detail("quotient", text(rep.quotient));
    residuals_must_vanish({rep.image});
  }

  const ProblemDocument& doc_;
  const Declarations& d_;
  const TaskDecl& task_;
  Sampler sampler_;
  TaskResult& out_;
};

}  // namespace

TaskResult run_task(const ProblemDocument& doc, const TaskDecl& task, std::uint64_t seed) {
  TaskResult out;
  out.name = task.name;
  out.kind = task.kind;
  auto start = std::chrono::steady_clock::now();
  try {
    TaskRunner(doc, task, seed, out).run();
  } catch (const Error& e) {
    out = TaskResult{task.name, task.kind, Verdict::Error, {}, {}, {}, e.what(), 0.0};
  } catch (const std::exception& e) {
    out = TaskResult{task.name, task.kind, Verdict::Error, {}, {}, {}, std::string("InternalError: ") + e.what(), 0.0};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Report execute(const ProblemDocument& doc, std::uint64_t seed) {
  std::vector<std::future<TaskResult>> pending;
  pending.reserve(doc.tasks.size());
  for (const auto& t : doc.tasks)
    pending.push_back(std::async(std::launch::async, [&doc, &t, seed] { return run_task(doc, t, seed); }));
  Report r;
  for (auto& f : pending) r.tasks.push_back(f.get());
  return r;
}

int Report::exit_code() const {
  int code = 0;
  for (const auto& t : tasks) {
    if (t.verdict == Verdict::Error) return 2;
    if (t.verdict == Verdict::Fail) code = 1;
  }
  return code;
}

}  // namespace twistkit

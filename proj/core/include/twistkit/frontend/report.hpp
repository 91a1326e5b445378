#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/frontend/problem.hpp"

namespace twistkit {

enum class Verdict { Pass, Fail, Error };

std::string_view to_string(Verdict v);

struct TaskResult {
  std::string name;
  std::string kind;
  Verdict verdict = Verdict::Error;
  /// Canonical text, in the order the owning module produces them.
  std::vector<std::string> residuals;
  std::vector<std::string> cofactors;
  /// Further named values (prolonged coefficients, flags, reconstructed data).
  std::vector<std::pair<std::string, std::string>> details;
  /// "Kind: detail" when verdict is Error.
  std::string error;
  double seconds = 0.0;
};

struct Report {
  std::vector<TaskResult> tasks;
  /// 0 when every task passes, 1 if one fails, 2 if one errors.
  int exit_code() const;
};

/// Runs every task concurrently; results keep document order and a task
/// error never affects its siblings. `seed` drives the random zero oracle.
Report execute(const ProblemDocument& doc, std::uint64_t seed);

/// Single task, used by execute().
TaskResult run_task(const ProblemDocument& doc, const TaskDecl& task, std::uint64_t seed);

enum class ReportFormat { Human, Structured };

/// Human: aligned lines ending in PASS / FAIL / ERROR. Structured: a
/// `twistkit-report 1` header followed by task.N.key=value lines, without
/// timings, so equal inputs give byte-identical output.
std::string render_report(const Report& r, ReportFormat format);

}  // namespace twistkit

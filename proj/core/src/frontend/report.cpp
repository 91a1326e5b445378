#include "twistkit/frontend/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace twistkit {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
  }
  return "error";
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string human(const Report& r) {
  std::size_t name_w = 4, kind_w = 4;
  for (const auto& t : r.tasks) {
    name_w = std::max(name_w, t.name.size());
    kind_w = std::max(kind_w, t.kind.size());
  }
  const std::string index_w = std::to_string(r.tasks.empty() ? 0 : r.tasks.size() - 1);
  std::ostringstream out;
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t k = 0; k < r.tasks.size(); ++k) {
    const auto& t = r.tasks[k];
    ++counts[static_cast<int>(t.verdict)];
    char timing[32];
    std::snprintf(timing, sizeof timing, "%9.3fs", t.seconds);
    std::string idx = std::to_string(k);
    out << std::string(index_w.size() - idx.size(), ' ') << idx << "  " << pad(t.name, name_w) << "  "
        << pad(t.kind, kind_w) << "  " << timing << "  " << upper(to_string(t.verdict)) << "\n";
    const std::string indent(index_w.size() + 4, ' ');
    for (std::size_t i = 0; i < t.residuals.size(); ++i)
      out << indent << "residual " << i << ": " << t.residuals[i] << "\n";
    for (std::size_t i = 0; i < t.cofactors.size(); ++i)
      out << indent << "cofactor " << i << ": " << t.cofactors[i] << "\n";
    for (const auto& [key, value] : t.details) out << indent << key << ": " << value << "\n";
    if (!t.error.empty()) out << indent << "error: " << t.error << "\n";
  }
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " errors\n";
  return out.str();
}

std::string structured(const Report& r) {
  std::ostringstream out;
  out << "twistkit-report 1\n";
  out << "tasks=" << r.tasks.size() << "\n";
  for (std::size_t k = 0; k < r.tasks.size(); ++k) {
    const auto& t = r.tasks[k];
    const std::string p = "task." + std::to_string(k) + ".";
    out << p << "name=" << t.name << "\n";
    out << p << "kind=" << t.kind << "\n";
    out << p << "verdict=" << to_string(t.verdict) << "\n";
    for (std::size_t i = 0; i < t.residuals.size(); ++i) out << p << "residual." << i << "=" << t.residuals[i] << "\n";
    for (std::size_t i = 0; i < t.cofactors.size(); ++i) out << p << "cofactor." << i << "=" << t.cofactors[i] << "\n";
    for (const auto& [key, value] : t.details) out << p << key << "=" << value << "\n";
    if (!t.error.empty()) out << p << "error=" << t.error << "\n";
  }
  out << "exit=" << r.exit_code() << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const Report& r, ReportFormat format) {
  return format == ReportFormat::Human ? human(r) : structured(r);
}

}  // namespace twistkit

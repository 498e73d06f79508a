#include "maxsym/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace maxsym::cli {

bool ReportDocument::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

void ReportDocument::append(const ReportDocument& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

CheckResult timed_check(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult out{std::move(name), false, {}, 0.0};
  auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = body();
    out.passed = ok;
    out.detail = std::move(detail);
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string to_text(const ReportDocument& report, bool with_timing) {
  std::size_t width = 0;
  for (const auto& r : report.results) width = std::max(width, r.name.size());
  std::string out;
  for (const auto& r : report.results) {
    std::string line = r.passed ? "PASS  " : "FAIL  ";
    line += r.name;
    line.append(width - r.name.size() + 2, ' ');
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%9.3fs  ", r.seconds);
      line += buf;
    }
    line += r.detail;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  std::size_t passed = std::count_if(report.results.begin(), report.results.end(),
                                     [](const auto& r) { return r.passed; });
  out += report.suite + ": " + std::to_string(passed) + "/" + std::to_string(report.results.size()) +
         " checks passed\n";
  return out;
}

nlohmann::json to_json(const ReportDocument& report, bool with_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json c{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}};
    if (with_timing) c["seconds"] = r.seconds;
    checks.push_back(std::move(c));
  }
  return {{"suite", report.suite}, {"passed", report.all_passed()}, {"checks", std::move(checks)}};
}

}  // namespace maxsym::cli

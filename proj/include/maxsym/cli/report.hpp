#pragma once

#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace maxsym::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReportDocument {
  std::string suite;
  std::vector<CheckResult> results;

  bool all_passed() const;
  void append(const ReportDocument& other);
};

// Runs body, recording wall time; an exception is a failed check whose
// detail is the exception message.
CheckResult timed_check(std::string name, const std::function<std::pair<bool, std::string>()>& body);

// One line per check. Timings are omitted when with_timing is false so two
// runs compare byte for byte.
std::string to_text(const ReportDocument& report, bool with_timing = true);
nlohmann::json to_json(const ReportDocument& report, bool with_timing = true);

}  // namespace maxsym::cli

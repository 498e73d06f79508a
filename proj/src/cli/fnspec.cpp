#include <string>
#include <vector>

#include "maxsym/cli/commands.hpp"

namespace maxsym::cli {

namespace {

double parse_double(std::string_view text, std::string_view context) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw UsageError("invalid number '" + s + "' in " + std::string(context));
  return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view context) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                   : comma - start);
    out.push_back(parse_double(piece, context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

numeval::Interval parse_interval(std::string_view text) {
  auto values = parse_list(text, "--interval");
  if (values.size() != 2 || !(values[0] < values[1]))
    throw UsageError("--interval expects 'a,b' with a < b, got '" + std::string(text) + "'");
  return {values[0], values[1]};
}

numeval::ClosedFormFn parse_fnspec(std::string_view spec, numeval::Interval iv) {
  if (auto star = spec.find('*'); star != std::string_view::npos) {
    double scale = parse_double(spec.substr(0, star), spec);
    return numeval::scaled(parse_fnspec(spec.substr(star + 1), iv), scale);
  }
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::optional<std::string_view> arg;
  if (colon != std::string_view::npos) arg = spec.substr(colon + 1);
  auto scalar = [&](double fallback) { return arg ? parse_double(*arg, spec) : fallback; };

  try {
    if (head == "exp") return numeval::exponential(scalar(1.0), iv);
    if (head == "cos") return numeval::cosine(scalar(1.0), iv);
    if (head == "sin") return numeval::sine(scalar(1.0), iv);
    if (head == "pow2" && !arg) return numeval::power(2.0, iv);
    if (head == "pow" && arg) return numeval::power(scalar(0.0), iv);
    if (head == "const" && arg) return numeval::constant(scalar(0.0), iv);
    if (head == "poly" && arg) return numeval::polynomial(parse_list(*arg, spec), iv);
  } catch (const numeval::DomainError& e) {
    throw UsageError(std::string(spec) + ": " + e.what());
  }
  throw UsageError("unknown function spec '" + std::string(spec) +
                   "' (expected exp[:a], cos[:a], sin[:a], poly:c0,c1,..., pow:k, pow2, const:c)");
}

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + std::string(s) + "'");
}

Suite parse_suite(std::string_view s) {
  for (auto suite : {Suite::recurrence, Suite::operators, Suite::transform, Suite::solutions,
                     Suite::a15, Suite::all})
    if (to_string(suite) == s) return suite;
  throw UsageError("unknown suite '" + std::string(s) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::recurrence: return "recurrence";
    case Suite::operators: return "operators";
    case Suite::transform: return "transform";
    case Suite::solutions: return "solutions";
    case Suite::a15: return "a15";
    case Suite::all: return "all";
  }
  return "all";
}

}  // namespace maxsym::cli

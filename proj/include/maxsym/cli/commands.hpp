#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "maxsym/cli/report.hpp"
#include "maxsym/numeval/closed_form.hpp"

namespace maxsym::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline constexpr int kOrderSoftCap = 30;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Function specs: exp[:a], cos[:a], sin[:a], poly:c0,c1,..., pow:k, pow2,
// const:c, optionally prefixed by a scale factor "c*".
numeval::ClosedFormFn parse_fnspec(std::string_view spec, numeval::Interval iv);
numeval::Interval parse_interval(std::string_view text);

enum class Format { text, latex, json };
Format parse_format(std::string_view s);

struct GenerateRequest {
  int order = 2;
  std::string var = "q";
  Format format = Format::text;
  bool force = false;
};

enum class Suite { recurrence, operators, transform, solutions, a15, all };
Suite parse_suite(std::string_view s);
std::string_view to_string(Suite s);

struct VerifyRequest {
  Suite suite = Suite::all;
  int max_order = 8;
  Format format = Format::text;
  bool timing = true;
};

struct BasisRequest {
  int order = 2;
  std::string u = "exp";
  std::optional<std::string> v;
  std::optional<double> x0;
  numeval::Interval interval{0.0, 1.0};
  bool check = false;
};

struct ResidualRequest {
  int order = 2;
  std::string q = "const:0";
  std::string y = "poly:0,1";
  numeval::Interval interval{0.0, 1.0};
  int points = 20;
};

struct TransformRequest {
  int order = 2;
  std::string u = "exp";
  int k = 0;
  double x = 0.5;
  double lambda = 1.0;
  std::optional<double> x0;
  numeval::Interval interval{0.0, 1.0};
};

struct CommandRequest {
  std::variant<GenerateRequest, VerifyRequest, BasisRequest, ResidualRequest, TransformRequest>
      command;
  std::optional<std::string> json_out;
};

// Deterministic output for fixed inputs. Throws UsageError for an order
// outside [2, 30] unless forced.
std::string run_generate(const GenerateRequest& req);
ReportDocument run_verify(Suite suite, int max_order);
ReportDocument run_a15_check();
// The comparison behind run_a15_check against any transcription.
ReportDocument check_a15_against(std::string_view transcription, bool verify_checksum);
// Entries, Wronskians and (with check) residuals; "passed" reflects the checks.
nlohmann::json run_basis(const BasisRequest& req);
nlohmann::json run_residual(const ResidualRequest& req);
nlohmann::json run_transform(const TransformRequest& req);

// Executes the request, printing to out/err; returns the process exit code.
int dispatch(const CommandRequest& req, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a64(std::string_view data);
std::string_view bundled_a15_transcription();
std::string_view bundled_a15_checksum();

}  // namespace maxsym::cli

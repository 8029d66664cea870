#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2hom/closed_form.hpp"
#include "su2hom/graded_table.hpp"
#include "json.hpp"

namespace su2hom::cli {

enum class Subcommand { table, blocks, stunted, poincare, verify };
enum class Format { text, json, csv };

struct CommandConfig {
  Subcommand subcommand = Subcommand::table;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  Coefficients coefficients = Coefficients::integers();
  Format format = Format::text;
  int max_n = 8;
  int max_k = 12;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Parses `args` (without the program name). Help requests and usage errors
/// come back as a RunResult to emit directly.
struct ParseOutcome {
  std::optional<CommandConfig> config;
  RunResult early_exit;
};
ParseOutcome parse_arguments(const std::vector<std::string>& args);

RunResult run(const CommandConfig& config);

/// parse_arguments followed by run.
RunResult run(const std::vector<std::string>& args);

// Serialization. Header fields precede "coefficients", "reduced" and
// "groups" in the JSON object, e.g. {"space", "Hom(Z^n,SU(2))"}, {"n", 3}.
using Header = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

nlohmann::ordered_json table_to_json(const GradedGroupTable& table, const Header& header);
GradedGroupTable table_from_json(const nlohmann::ordered_json& json);
std::string format_table(const GradedGroupTable& table, const std::string& title, const Header& header, Format format);

std::string format_poincare(const PoincarePolynomial& p, int n, Format format);
std::string format_report(const VerificationReport& report, Format format);

}  // namespace su2hom::cli

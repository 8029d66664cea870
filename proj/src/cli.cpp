#include "su2hom/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "su2hom/chain_complex.hpp"
#include "su2hom/space_models.hpp"

namespace su2hom::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kMaxTableN = 64;
constexpr int kMaxBlockK = 4096;
constexpr int kMaxStuntedM = 512;
constexpr int kMaxPoincareN = 4096;
constexpr int kMaxVerifyN = 10;
constexpr int kMaxVerifyK = 64;

ordered_json integer_json(const mpz_class& x) {
  if (x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, x.get_mpz_t());
    return v;
  }
  return x.get_str();
}

mpz_class integer_from_json(const ordered_json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

std::string primary_torsion(const AbelianGroup& g) {
  return g.torsion_runs().empty() ? "0" : g.torsion_subgroup().to_primary_string();
}

std::string text_table(const GradedGroupTable& table, const std::string& title) {
  std::ostringstream os;
  os << (table.reduced() ? "H~^j(" : "H^j(") << title << "; " << table.coefficients().name() << ")\n";
  const auto top = table.top_degree();
  if (!top) {
    os << "  all j: 0\n";
    return os.str();
  }
  const int bottom = std::min(0, *table.bottom_degree());
  for (int j = bottom; j <= *top; ++j) {
    os << "  j = " << j << ": " << table.at(j).to_string(table.coefficients().name()) << "\n";
  }
  os << "  j > " << *top << ": 0\n";
  return os.str();
}

std::string csv_table(const GradedGroupTable& table) {
  std::ostringstream os;
  os << "degree,free_rank,invariant_factors\n";
  for (const auto& [j, g] : table.groups()) {
    os << j << "," << g.free_rank().get_str() << ",";
    bool first = true;
    for (const auto& d : g.invariant_factors()) {
      os << (first ? "" : ";") << d.get_str();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

RunResult usage_error(const std::string& message) { return {kUsageError, "", "error: " + message + "\n"}; }

template <class T>
const T& required(const std::optional<T>& value, const char* flag) {
  if (!value) throw std::invalid_argument(std::string("missing required option ") + flag);
  return *value;
}

void require_range(int value, int lo, int hi, const char* flag) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

ordered_json table_to_json(const GradedGroupTable& table, const Header& header) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : header) j[key] = value;
  j["coefficients"] = table.coefficients().name();
  j["reduced"] = table.reduced();
  ordered_json groups = ordered_json::array();
  for (const auto& [degree, g] : table.groups()) {
    ordered_json entry = ordered_json::object();
    entry["degree"] = degree;
    entry["free_rank"] = integer_json(g.free_rank());
    ordered_json factors = ordered_json::array();
    for (const auto& d : g.invariant_factors()) factors.push_back(integer_json(d));
    entry["invariant_factors"] = std::move(factors);
    entry["primary"] = primary_torsion(g);
    groups.push_back(std::move(entry));
  }
  j["groups"] = std::move(groups);
  return j;
}

GradedGroupTable table_from_json(const ordered_json& json) {
  GradedGroupTable table(Coefficients::parse(json.at("coefficients").get<std::string>()),
                         json.at("reduced").get<bool>());
  for (const auto& entry : json.at("groups")) {
    std::vector<mpz_class> orders;
    for (const auto& d : entry.at("invariant_factors")) orders.push_back(integer_from_json(d));
    table.add(entry.at("degree").get<int>(),
              AbelianGroup::from_cyclic_orders(integer_from_json(entry.at("free_rank")), orders));
  }
  return table;
}

std::string format_table(const GradedGroupTable& table, const std::string& title, const Header& header,
                         Format format) {
  switch (format) {
    case Format::text:
      return text_table(table, title);
    case Format::json:
      return table_to_json(table, header).dump(2) + "\n";
    case Format::csv:
      return csv_table(table);
  }
  return {};
}

std::string format_poincare(const PoincarePolynomial& p, int n, Format format) {
  switch (format) {
    case Format::text:
      return "P(t) = " + p.to_string() + "\n";
    case Format::json: {
      ordered_json j = ordered_json::object();
      j["space"] = "Hom(Z^n,SU(2))";
      j["n"] = n;
      j["coefficients"] = "Q";
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : p.coefficients()) coeffs.push_back(integer_json(c));
      j["poincare"] = std::move(coeffs);
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "degree,dimension\n";
      for (int d = 0; d <= p.degree(); ++d) out += std::to_string(d) + "," + p.coefficient(d).get_str() + "\n";
      return out;
    }
  }
  return {};
}

std::string format_report(const VerificationReport& report, Format format) {
  switch (format) {
    case Format::text: {
      std::ostringstream os;
      for (const auto& item : report.items) {
        os << (item.passed ? "PASS  " : "FAIL  ") << item.check << "  " << item.detail << "\n";
      }
      os << report.passed_count() << "/" << report.items.size() << " checks passed\n";
      return os.str();
    }
    case Format::json: {
      ordered_json j = ordered_json::object();
      j["max_n"] = report.max_n;
      j["max_k"] = report.max_k;
      j["passed"] = report.all_passed();
      ordered_json checks = ordered_json::array();
      for (const auto& item : report.items) {
        ordered_json c = ordered_json::object();
        c["check"] = item.check;
        c["passed"] = item.passed;
        c["detail"] = item.detail;
        checks.push_back(std::move(c));
      }
      j["checks"] = std::move(checks);
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "check,passed,detail\n";
      for (const auto& item : report.items) {
        out += item.check + "," + (item.passed ? "true" : "false") + "," + csv_quote(item.detail) + "\n";
      }
      return out;
    }
  }
  return {};
}

ParseOutcome parse_arguments(const std::vector<std::string>& args) {
  CLI::App app{"Cohomology of the space of commuting n-tuples in SU(2)", "su2hom"};
  app.require_subcommand(1, 1);

  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::string coeff = "Z";
  std::string format = "text";
  int max_n = 8;
  int max_k = 12;

  auto add_common = [&](CLI::App* sub, bool with_coeff) {
    if (with_coeff) sub->add_option("--coeff", coeff, "Coefficients: Z, Q, F2 or Fp:<prime>");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* table = app.add_subcommand("table", "H^*(Hom(Z^n, SU(2))) from the suspension splitting");
  table->add_option("--n", n, "Tuple length")->required();
  add_common(table, true);

  CLI::App* blocks = app.add_subcommand("blocks", "Reduced cohomology of the summand Sigma S(kL)");
  blocks->add_option("--k", k, "Summand index")->required();
  add_common(blocks, true);

  CLI::App* stunted = app.add_subcommand("stunted", "Reduced cohomology of RP^m/RP^(k-1) from cellular chains");
  stunted->add_option("--m", m, "Top dimension")->required();
  stunted->add_option("--k", k, "Bottom cell")->required();
  add_common(stunted, true);

  CLI::App* poincare = app.add_subcommand("poincare", "Rational Poincare polynomial of Hom(Z^n, SU(2))");
  poincare->add_option("--n", n, "Tuple length")->required();
  add_common(poincare, false);

  CLI::App* verify = app.add_subcommand("verify", "Cross-check every closed form against chain models");
  verify->add_option("--max-n", max_n, "Largest tuple length");
  verify->add_option("--max-k", max_k, "Largest summand index");
  add_common(verify, false);

  ParseOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.early_exit = {kSuccess, app.help(), ""};
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.early_exit = {kSuccess, app.help("", CLI::AppFormatMode::All), ""};
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.early_exit = {kUsageError, "", std::string("error: ") + e.what() + "\nRun with --help for usage.\n"};
    return outcome;
  }

  CommandConfig config;
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "table") config.subcommand = Subcommand::table;
  if (name == "blocks") config.subcommand = Subcommand::blocks;
  if (name == "stunted") config.subcommand = Subcommand::stunted;
  if (name == "poincare") config.subcommand = Subcommand::poincare;
  if (name == "verify") config.subcommand = Subcommand::verify;
  config.n = n;
  config.k = k;
  config.m = m;
  config.max_n = max_n;
  config.max_k = max_k;
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  try {
    config.coefficients = Coefficients::parse(coeff);
  } catch (const std::invalid_argument& e) {
    outcome.early_exit = usage_error(e.what());
    return outcome;
  }
  outcome.config = config;
  return outcome;
}

RunResult run(const CommandConfig& config) {
  try {
    switch (config.subcommand) {
      case Subcommand::table: {
        const int n = required(config.n, "--n");
        require_range(n, 1, kMaxTableN, "--n");
        const GradedGroupTable t = commuting_tuple_cohomology(n, config.coefficients);
        return {kSuccess,
                format_table(t, "Hom(Z^" + std::to_string(n) + ",SU(2))", {{"space", "Hom(Z^n,SU(2))"}, {"n", n}},
                             config.format),
                ""};
      }
      case Subcommand::blocks: {
        const int k = required(config.k, "--k");
        require_range(k, 1, kMaxBlockK, "--k");
        const GradedGroupTable t = change_coefficients(sigma_skl_closed_form(k), config.coefficients);
        return {kSuccess,
                format_table(t, "Sigma S(" + std::to_string(k) + "L)", {{"space", "Sigma S(kL)"}, {"k", k}},
                             config.format),
                ""};
      }
      case Subcommand::stunted: {
        const int m = required(config.m, "--m");
        const int k = required(config.k, "--k");
        require_range(m, 1, kMaxStuntedM, "--m");
        require_range(k, 1, m, "--k");
        const GradedGroupTable t = reduced_cohomology_table(models::stunted_rp(m, k), config.coefficients);
        const std::string title = "RP^" + std::to_string(m) + "/RP^" + std::to_string(k - 1);
        return {kSuccess, format_table(t, title, {{"space", "RP^m/RP^(k-1)"}, {"m", m}, {"k", k}}, config.format),
                ""};
      }
      case Subcommand::poincare: {
        const int n = required(config.n, "--n");
        require_range(n, 1, kMaxPoincareN, "--n");
        return {kSuccess, format_poincare(rational_poincare(n), n, config.format), ""};
      }
      case Subcommand::verify: {
        require_range(config.max_n, 1, kMaxVerifyN, "--max-n");
        require_range(config.max_k, 1, kMaxVerifyK, "--max-k");
        const VerificationReport report = verify_all(config.max_n, config.max_k);
        return {report.all_passed() ? kSuccess : kVerificationFailed, format_report(report, config.format), ""};
      }
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::length_error& e) {
    return usage_error(std::string(e.what()) + "; use --format text for compact output");
  }
  return usage_error("unknown subcommand");
}

RunResult run(const std::vector<std::string>& args) {
  ParseOutcome parsed = parse_arguments(args);
  if (!parsed.config) return parsed.early_exit;
  return run(*parsed.config);
}

}  // namespace su2hom::cli

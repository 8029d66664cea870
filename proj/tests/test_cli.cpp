#include <sstream>

#include "doctest.h"
#include "su2hom/cli.hpp"
#include "su2hom/space_models.hpp"
#include "test_support.hpp"

using namespace su2hom;
using nlohmann::ordered_json;
using su2hom::testing::Z;
using su2hom::testing::Z2;

namespace {

cli::RunResult run_args(std::vector<std::string> args) { return cli::run(args); }

std::vector<std::string> split(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t at; (at = text.find(sep, start)) != std::string::npos; start = at + sep.size()) {
    parts.push_back(text.substr(start, at - start));
  }
  parts.push_back(text.substr(start));
  return parts;
}

// Reads one rendered group back: "Z", "Z^6", "Z/2", "(Z/2)^10", joined by " ⊕ ".
AbelianGroup parse_group(const std::string& text, const std::string& generator) {
  AbelianGroup g;
  if (text == "0") return g;
  for (const std::string& term : split(text, " ⊕ ")) {
    if (term == generator) {
      g += AbelianGroup::free(1);
    } else if (term.rfind(generator + "^", 0) == 0) {
      g += AbelianGroup::free(mpz_class(term.substr(generator.size() + 1)));
    } else if (term.rfind("(Z/", 0) == 0) {
      const std::size_t close = term.find(")^");
      g += AbelianGroup::cyclic(mpz_class(term.substr(3, close - 3))).repeated(mpz_class(term.substr(close + 2)));
    } else {
      REQUIRE(term.rfind("Z/", 0) == 0);
      g += AbelianGroup::cyclic(mpz_class(term.substr(2)));
    }
  }
  return g;
}

GradedGroupTable parse_text_table(const std::string& text, const Coefficients& coeff, bool reduced) {
  GradedGroupTable t(coeff, reduced);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // title
  while (std::getline(in, line)) {
    if (line.rfind("  j = ", 0) != 0) continue;
    const std::size_t colon = line.find(": ");
    t.set(std::stoi(line.substr(6, colon - 6)), parse_group(line.substr(colon + 2), coeff.name()));
  }
  return t;
}

GradedGroupTable parse_csv_table(const std::string& text, const Coefficients& coeff, bool reduced) {
  GradedGroupTable t(coeff, reduced);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "degree,free_rank,invariant_factors");
  while (std::getline(in, line)) {
    const auto fields = split(line, ",");
    REQUIRE(fields.size() == 3);
    std::vector<mpz_class> orders;
    if (!fields[2].empty()) {
      for (const auto& d : split(fields[2], ";")) orders.emplace_back(d);
    }
    t.set(std::stoi(fields[0]), AbelianGroup::from_cyclic_orders(mpz_class(fields[1]), orders));
  }
  return t;
}

const char* const kGoldenY3 =
    "H^j(Hom(Z^3,SU(2)); Z)\n"
    "  j = 0: Z\n"
    "  j = 1: 0\n"
    "  j = 2: Z ⊕ Z ⊕ Z\n"
    "  j = 3: Z ⊕ Z ⊕ Z ⊕ Z/2\n"
    "  j = 4: Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2\n"
    "  j = 5: Z\n"
    "  j > 5: 0\n";

}  // namespace

TEST_CASE("golden Y[3] text output") {
  const cli::RunResult r = run_args({"table", "--n", "3"});
  CHECK(r.exit_code == cli::kSuccess);
  CHECK(r.out == kGoldenY3);
  CHECK(r.err.empty());
}

TEST_CASE("table json") {
  const cli::RunResult r = run_args({"table", "--n", "3", "--format", "json"});
  REQUIRE(r.exit_code == cli::kSuccess);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["space"] == "Hom(Z^n,SU(2))");
  CHECK(j["n"] == 3);
  CHECK(j["coefficients"] == "Z");
  CHECK(j["reduced"] == false);
  bool found = false;
  for (const auto& g : j["groups"]) {
    if (g["degree"] == 4) {
      found = true;
      CHECK(g["free_rank"] == 0);
      CHECK(g["invariant_factors"] == ordered_json::array({2, 2, 2, 2}));
      CHECK(g["primary"] == "Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2");
    }
    CHECK(g["degree"] != 1);  // trivial degrees omitted
  }
  CHECK(found);

  // Field order is fixed.
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"space", "n", "coefficients", "reduced", "groups"});
  std::vector<std::string> group_keys;
  for (const auto& [key, value] : j["groups"][0].items()) group_keys.push_back(key);
  CHECK(group_keys == std::vector<std::string>{"degree", "free_rank", "invariant_factors", "primary"});
}

TEST_CASE("blocks, stunted and poincare") {
  const cli::RunResult blocks = run_args({"blocks", "--k", "1"});
  CHECK(blocks.exit_code == cli::kSuccess);
  CHECK(parse_text_table(blocks.out, Coefficients::integers(), true) == testing::table_of(true, {{3, Z()}}));
  CHECK(blocks.out.rfind("H~^j(", 0) == 0);

  const cli::RunResult stunted = run_args({"stunted", "--m", "5", "--k", "3", "--format", "json"});
  CHECK(stunted.exit_code == cli::kSuccess);
  CHECK(cli::table_from_json(ordered_json::parse(stunted.out)) ==
        reduced_cohomology_table(models::stunted_rp(5, 3)));

  const cli::RunResult poincare = run_args({"poincare", "--n", "3"});
  CHECK(poincare.out == "P(t) = 1 + 3t^2 + 3t^3 + t^5\n");
  const cli::RunResult poincare_json = run_args({"poincare", "--n", "2", "--format", "json"});
  CHECK(ordered_json::parse(poincare_json.out)["poincare"] == ordered_json::array({1, 0, 1, 2}));
  CHECK(run_args({"poincare", "--n", "2", "--format", "csv"}).out == "degree,dimension\n0,1\n1,0\n2,1\n3,2\n");

  const cli::RunResult f2 = run_args({"table", "--n", "2", "--coeff", "F2"});
  CHECK(f2.exit_code == cli::kSuccess);
  CHECK(parse_text_table(f2.out, Coefficients::prime_field(2), false) ==
        commuting_tuple_cohomology(2, Coefficients::prime_field(2)));
  CHECK(run_args({"table", "--n", "2", "--coeff", "Fp:3"}).out ==
        run_args({"table", "--n", "2", "--coeff", "F3"}).out);
}

TEST_CASE("verify") {
  const cli::RunResult ok = run_args({"verify", "--max-n", "3", "--max-k", "4"});
  CHECK(ok.exit_code == cli::kSuccess);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("14/14 checks passed") != std::string::npos);

  const ordered_json j = ordered_json::parse(run_args({"verify", "--max-n", "1", "--max-k", "1", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 4);

  // A failing report renders as FAIL; run() maps it to exit 1.
  VerificationReport bad{1, 1, {{"block k=1", true, "ok"}, {"splitting n=1", false, "mismatch"}}};
  CHECK_FALSE(bad.all_passed());
  const std::string text = cli::format_report(bad, cli::Format::text);
  CHECK(text.find("FAIL  splitting n=1  mismatch") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
  CHECK(cli::format_report(bad, cli::Format::csv).find("splitting n=1,false,\"mismatch\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"table"},
           {"table", "--n", "0"},
           {"table", "--n", "65"},
           {"table", "--n", "x"},
           {"table", "--n", "3", "--coeff", "F4"},
           {"table", "--n", "3", "--coeff", "R"},
           {"table", "--n", "3", "--format", "xml"},
           {"table", "--n", "3", "--bogus"},
           {"blocks", "--k", "0"},
           {"stunted", "--m", "3", "--k", "4"},
           {"stunted", "--m", "3"},
           {"poincare", "--n", "-1"},
           {"verify", "--max-n", "0"},
           {"verify", "--max-n", "11"},
           {"frobnicate"},
       }) {
    CAPTURE(args.size());
    const cli::RunResult r = run_args(args);
    CHECK(r.exit_code == cli::kUsageError);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
  const cli::RunResult help = run_args({"--help"});
  CHECK(help.exit_code == cli::kSuccess);
  CHECK(help.out.find("table") != std::string::npos);
  CHECK(help.err.empty());
}

TEST_CASE("large n: compact text works, expanded formats refuse") {
  const cli::RunResult text = run_args({"table", "--n", "64"});
  CHECK(text.exit_code == cli::kSuccess);
  CHECK(text.out.find("j = 66: Z/2") != std::string::npos);
  CHECK(parse_text_table(text.out, Coefficients::integers(), false) == commuting_tuple_cohomology(64));

  const cli::RunResult json = run_args({"table", "--n", "40", "--format", "json"});
  CHECK(json.exit_code == cli::kUsageError);
  CHECK(json.err.find("--format text") != std::string::npos);

  // Counts beyond 64 bits are emitted as strings.
  const cli::RunResult big = run_args({"table", "--n", "64", "--coeff", "Q", "--format", "json"});
  REQUIRE(big.exit_code == cli::kSuccess);
  CHECK(cli::table_from_json(ordered_json::parse(big.out)) == commuting_tuple_cohomology(64, Coefficients::rationals()));
}

TEST_CASE("property: formats carry identical data and JSON round-trips") {
  std::vector<std::pair<std::vector<std::string>, GradedGroupTable>> cases;
  for (int n = 1; n <= 8; ++n) {
    for (const char* coeff : {"Z", "Q", "F2", "F3"}) {
      cases.push_back({{"table", "--n", std::to_string(n), "--coeff", coeff},
                       commuting_tuple_cohomology(n, Coefficients::parse(coeff))});
    }
  }
  for (int k = 1; k <= 12; ++k) {
    cases.push_back({{"blocks", "--k", std::to_string(k)}, sigma_skl_closed_form(k)});
    for (int m = k; m <= k + 4; ++m) {
      cases.push_back({{"stunted", "--m", std::to_string(m), "--k", std::to_string(k)},
                       reduced_cohomology_table(models::stunted_rp(m, k))});
    }
  }

  for (auto& [args, expected] : cases) {
    CAPTURE(args[0] + " " + args[2]);
    const cli::RunResult text = run_args(args);
    auto with_format = [&args = args](const char* f) {
      std::vector<std::string> a = args;
      a.insert(a.end(), {"--format", f});
      return run_args(a);
    };
    const cli::RunResult json = with_format("json");
    const cli::RunResult csv = with_format("csv");
    REQUIRE(text.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    REQUIRE(csv.exit_code == 0);

    const Coefficients& coeff = expected.coefficients();
    CHECK(parse_text_table(text.out, coeff, expected.reduced()) == expected);
    CHECK(parse_csv_table(csv.out, coeff, expected.reduced()) == expected);
    const ordered_json parsed = ordered_json::parse(json.out);
    CHECK(cli::table_from_json(parsed) == expected);
    CHECK(cli::table_from_json(cli::table_to_json(expected, {})) == expected);
    CHECK(parsed.dump() == ordered_json::parse(json.out).dump());

    // Byte stability.
    CHECK(run_args(args).out == text.out);
    CHECK(with_format("json").out == json.out);
  }
}

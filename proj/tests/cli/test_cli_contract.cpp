#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <nlohmann/json.hpp>

#include "../support/cli_runner.hpp"

namespace {

const std::string kCli = DUALGRAPH_CLI_PATH;
const std::string kTestDir = DUALGRAPH_TEST_DIR;

}  // namespace

TEST_CASE("fixture matrix reproduces golden stdout and exit codes") {
  const auto rows = cli_contract::load_manifest(kTestDir);
  REQUIRE(rows.size() >= 20);
  for (const auto& row : rows) {
    CAPTURE(row.args);
    CAPTURE(row.golden);
    const auto outcome = cli_contract::check_row(kCli, kTestDir, row);
    CHECK_MESSAGE(outcome.ok, outcome.detail);
  }
}

TEST_CASE("JSON and text reports carry the same numbers") {
  const auto text = cli_contract::run_cli(kCli, kTestDir, "yau fixtures/b1ab2.graph");
  const auto json = cli_contract::run_cli(kCli, kTestDir, "yau fixtures/b1ab2.graph --json");
  REQUIRE(text.exit_code == 0);
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["m"] == 2);
  CHECK(doc["p_f"] == 1);
  CHECK(text.output.find("m = 2") != std::string::npos);
  CHECK(text.output.find("p_f = 1") != std::string::npos);
  CHECK(doc["yau_cycle"]["A"] == 2);
  CHECK(text.output.find("Y: B1=1 A=2 B2=1") != std::string::npos);
}

TEST_CASE("verify exit codes distinguish failure kinds") {
  // pass -> 0
  CHECK(cli_contract::run_cli(kCli, kTestDir, "verify --theorem C fixtures/b1ab2.graph")
            .exit_code == 0);
  // not applicable -> 0 (never silently passes, but not a check failure)
  CHECK(cli_contract::run_cli(kCli, kTestDir, "verify --theorem B fixtures/b1ab2.graph")
            .exit_code == 0);
  // malformed input -> 2
  CHECK(cli_contract::run_cli(kCli, kTestDir, "verify --theorem C fixtures/empty.graph")
            .exit_code == 2);
  // unknown theorem name -> 2
  CHECK(cli_contract::run_cli(kCli, kTestDir, "verify --theorem Q fixtures/b1ab2.graph")
            .exit_code == 2);
}

TEST_CASE("JSON report validates against the shipped schema") {
  const auto run = cli_contract::run_cli(kCli, kTestDir, "verify fixtures/b1ab2.graph --json");
  REQUIRE(run.exit_code == 0);
  const auto doc = nlohmann::json::parse(run.output);
  const auto schema =
      nlohmann::json::parse(cli_contract::read_file(kTestDir + "/../tools/schema/verify-report.schema.json"));

  // Minimal structural validator for the subset of JSON Schema the reports
  // use: type, required, properties, items, enum.
  std::function<bool(const nlohmann::json&, const nlohmann::json&)> conforms =
      [&](const nlohmann::json& value, const nlohmann::json& spec) -> bool {
    if (spec.contains("type")) {
      const std::string type = spec["type"];
      if (type == "array" && !value.is_array()) return false;
      if (type == "object" && !value.is_object()) return false;
      if (type == "string" && !value.is_string()) return false;
      if (type == "integer" && !value.is_number_integer()) return false;
      if (type == "boolean" && !value.is_boolean()) return false;
    }
    if (spec.contains("enum")) {
      bool any = false;
      for (const auto& e : spec["enum"]) any = any || e == value;
      if (!any) return false;
    }
    if (spec.contains("required"))
      for (const auto& key : spec["required"])
        if (!value.contains(key.get<std::string>())) return false;
    if (spec.contains("properties"))
      for (const auto& [key, sub] : spec["properties"].items())
        if (value.contains(key) && !conforms(value.at(key), sub)) return false;
    if (spec.contains("items") && value.is_array())
      for (const auto& item : value)
        if (!conforms(item, spec["items"])) return false;
    return true;
  };
  CHECK(conforms(doc, schema));
}

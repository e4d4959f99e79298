#pragma once

// Runs the CLI against the fixture manifest and compares stdout and exit
// codes byte-exactly with the golden files. Shared by the contract test and
// the acceptance suite.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli_contract {

struct Row {
  std::string golden;  // file under golden/
  int expected_exit = 0;
  std::string args;  // appended to the CLI path
};

inline std::vector<Row> load_manifest(const std::string& test_dir) {
  std::ifstream in(test_dir + "/fixtures/manifest.txt");
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    Row row;
    is >> row.golden >> row.expected_exit;
    std::getline(is, row.args);
    rows.push_back(row);
  }
  return rows;
}

struct RunResult {
  std::string output;
  int exit_code = -1;
};

inline RunResult run_cli(const std::string& cli, const std::string& test_dir,
                         const std::string& args) {
  const std::string command = "cd '" + test_dir + "' && '" + cli + "' " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RowOutcome {
  bool ok = true;
  std::string detail;
};

inline RowOutcome check_row(const std::string& cli, const std::string& test_dir, const Row& row) {
  RowOutcome outcome;
  const RunResult run = run_cli(cli, test_dir, row.args);
  if (run.exit_code != row.expected_exit) {
    outcome.ok = false;
    outcome.detail = "exit code " + std::to_string(run.exit_code) + ", expected " +
                     std::to_string(row.expected_exit);
    return outcome;
  }
  const std::string golden = read_file(test_dir + "/golden/" + row.golden);
  if (run.output != golden) {
    outcome.ok = false;
    outcome.detail = "stdout differs from golden/" + row.golden;
  }
  return outcome;
}

}  // namespace cli_contract

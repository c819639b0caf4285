#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bicircle::cli {

enum ExitCode { kOk = 0, kInputError = 1, kRefused = 2 };

enum class Format { text, structured };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> out;
  std::optional<std::pair<int, int>> level;
  std::optional<int> grid;
  std::optional<double> tol;
  Format format = Format::text;
  int points = 200;  // example sweeps
};

// Runs one command: the report goes to `out`, diagnostics to `err`; --out receives the data artifact.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicircle::cli

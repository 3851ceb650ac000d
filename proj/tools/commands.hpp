#ifndef FROBKIT_TOOLS_COMMANDS_HPP
#define FROBKIT_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobkit/dsl.hpp"
#include "report.hpp"

namespace frobkit::cli {

struct RunOptions {
  std::string command;
  std::optional<std::string> spec_path;
  unsigned emax = 3;
  std::optional<unsigned> emin;
  std::optional<unsigned> nmax;
  unsigned tc_emax = 3;
  std::string order = "grevlex";
  std::optional<std::string> ideal;
  std::optional<std::string> by;
  std::optional<std::string> large;
  std::optional<std::string> elt;
  std::optional<std::string> x;
  std::optional<std::string> testel;
  std::optional<std::string> alpha;
  std::optional<std::string> param;
  std::vector<std::string> factors;
  std::string format = "json";
  std::optional<std::string> cache;
  unsigned jobs = 0;
  bool timing = true;
};

const std::vector<std::string>& command_names();
bool command_needs_spec(const std::string& command);

/// Flags that influence the computed payload, with unset flags as null.
json parameters_of(const RunOptions& opts);

/// SHA-256 over the canonical spec text, the command and its parameters.
std::string input_digest(const std::optional<RingSpecDocument>& doc, const RunOptions& opts);

CommandResult run_command(const RunOptions& opts, const std::optional<RingSpecDocument>& doc);

struct Outcome {
  std::string output;
  std::string error;
  int exit_code = 0;  // 0 computed, 2 violation, 3 input error, 1 failure
};

/// Reads the spec, consults the cache, runs and renders.
Outcome execute(const RunOptions& opts);

}  // namespace frobkit::cli

#endif  // FROBKIT_TOOLS_COMMANDS_HPP

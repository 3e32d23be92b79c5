#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfband/report.hpp"

namespace surfband {

/// Everything one CLI run needs. Field names match the flags and the keys
/// of the report's "config" block.
struct RunConfig {
  std::string subcommand = "spectrum";
  std::string surface = "ring";
  double R = 1.0;
  double L = 1.0;
  int n = 64;
  int n2 = 0;  // 0: 1 on a ring, n otherwise
  int k = 5;
  std::string field = "none";
  double B = 0.0;
  double flux = 0.0;
  double Ar = 0.0;
  double dAr = 0.0;
  bool spin = false;
  std::string variant = "correct";
  int order = 2;
  double hbar = 1.0;
  double mass = 1.0;
  double charge = 1.0;
  std::vector<int> l = {0};
  std::vector<double> d = {0.1, 0.05, 0.025, 0.0125};
  int nr = 0;
  std::string lambda = "sin1";
  double lambda_amplitude = 1.0;
  std::string field_csv;
  std::string output;
  std::string format = "json";

  int axial_nodes() const;
  Json to_json() const;
};

/// Invalid input; `flag` names the offending flag or config key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string flag, const std::string& message)
      : std::invalid_argument(flag + ": " + message), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// Throws ConfigError unless every parameter is admissible.
void validate(const RunConfig& config);

/// Applies keys of a config JSON object; unknown keys are rejected.
void apply_config_json(RunConfig& config, const Json& j);

/// Parses argv. Flags override values from --config. Throws ConfigError.
/// Returns false (after printing help to `out`) when help was requested.
bool parse_config(int argc, const char* const* argv, RunConfig& config, std::ostream& out);

struct RunResult {
  std::string report;   ///< serialized report in the configured format
  std::string summary;  ///< one-line stdout summary
};

/// Runs the configured experiment without touching the filesystem (except
/// reading --field-csv). Throws std::runtime_error on solver failure.
RunResult execute(const RunConfig& config);

/// execute() plus output: writes the report atomically to config.output
/// (if set) and the summary to `out`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: exit 0 success, 1 solver failure,
/// 2 invalid input.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace surfband

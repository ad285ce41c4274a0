#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "multiport/channels.hpp"
#include "multiport/random.hpp"
#include "multiport/verify.hpp"

namespace multiport {

enum class Scenario { depolarized, product, shortcut_pure, shortcut_mixed, custom };
enum class OutputFormat { json, csv };

std::optional<Scenario> parse_scenario(const std::string& name);
std::string scenario_name(Scenario s);

struct ScenarioConfig {
  Scenario scenario = Scenario::depolarized;
  int n = 3;
  std::optional<std::string> input_path;  // required for custom
  std::optional<int> start_j;             // defaults to 2 (3 for shortcuts)
  std::uint64_t seed = kDefaultSeed;
  bool random_local_noise = false;  // --noise random-local
  bool random_phases = false;       // --phases random
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::json;
  bool parallel = false;
};

/// Builds the configured input ensemble (including optional noise and the
/// scenario's depolarization steps) and its starting step. Exposed so tests
/// can drive the exact CLI inputs.
struct PreparedScenario {
  Ensemble input;
  int n;
  int start_j;
};
PreparedScenario prepare_scenario(const ScenarioConfig& config);

/// Runs the configured scenario and writes the report. Exit codes: 0 success,
/// 2 zero-probability outcome, 1 error.
int cmd_run(const ScenarioConfig& config);

/// Prints the allowed/suppressed table for all outputs of n particles in n
/// modes against every cyclic-eigenspace input class; cross-checks verdicts
/// against exact amplitudes for n <= 3. A custom unitary file replaces the
/// Fourier multiport in the cross-check column.
int cmd_suppress(int n, const std::optional<std::string>& unitary_path,
                 const std::optional<std::string>& out_path, OutputFormat format,
                 bool text_table);

/// Runs the module invariant suites; nonzero exit on any violation.
int cmd_verify(VerifyLevel level);

}  // namespace multiport

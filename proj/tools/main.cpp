#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "multiport/cli.hpp"

using namespace multiport;

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator of bosonic Fourier-multiport distillation pipelines"};
  app.require_subcommand(1);

  // run
  ScenarioConfig config;
  std::string scenario = "depolarized";
  std::string noise = "none";
  std::string phases = "none";
  std::string format = "json";
  std::string input_file;
  std::string out_file;
  int start_j = 0;

  CLI::App* run = app.add_subcommand("run", "Run a scenario through the distillation pipeline");
  run->add_option("--scenario", scenario,
                  "depolarized | product | shortcut-pure | shortcut-mixed | custom")
      ->default_val("depolarized");
  run->add_option("--n", config.n, "particle/mode count N (>= 2)");
  run->add_option("--input", input_file, "state or ensemble JSON file (custom scenario)");
  run->add_option("--start-j", start_j, "first Fourier port size (default 2; shortcuts use 3)");
  run->add_option("--seed", config.seed, "seed for noise and phase draws");
  run->add_option("--noise", noise, "random-local | none")->default_val("none");
  run->add_option("--phases", phases, "random | none")->default_val("none");
  run->add_option("--out", out_file, "write the report here instead of stdout");
  run->add_option("--format", format, "json | csv")->default_val("json");
  run->add_flag("--parallel", config.parallel, "evaluate ensemble components concurrently");

  // suppress
  int suppress_n = 3;
  std::string suppress_unitary;
  std::string suppress_out;
  std::string suppress_format = "table";
  CLI::App* suppress =
      app.add_subcommand("suppress", "Print the anti-bunching suppression-law table");
  suppress->add_option("--n", suppress_n, "particle/mode count N (2..5)");
  suppress->add_option("--unitary", suppress_unitary,
                       "unitary JSON file replacing the Fourier multiport in the cross-check");
  suppress->add_option("--out", suppress_out, "write rows here instead of stdout");
  suppress->add_option("--format", suppress_format, "table | json | csv")->default_val("table");

  // verify
  std::string level = "quick";
  CLI::App* verify = app.add_subcommand("verify", "Run the module invariant suites");
  verify->add_option("--level", level, "quick | full")->default_val("quick");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    auto parsed = parse_scenario(scenario);
    if (!parsed) {
      std::cerr << "error: unknown scenario \"" << scenario << "\"\n";
      return 1;
    }
    config.scenario = *parsed;
    if (!input_file.empty()) config.input_path = input_file;
    if (start_j > 0) config.start_j = start_j;
    if (!out_file.empty()) config.out_path = out_file;
    if (noise == "random-local")
      config.random_local_noise = true;
    else if (noise != "none") {
      std::cerr << "error: --noise must be random-local or none\n";
      return 1;
    }
    if (phases == "random")
      config.random_phases = true;
    else if (phases != "none") {
      std::cerr << "error: --phases must be random or none\n";
      return 1;
    }
    if (format == "csv")
      config.format = OutputFormat::csv;
    else if (format != "json") {
      std::cerr << "error: --format must be json or csv\n";
      return 1;
    }
    return cmd_run(config);
  }

  if (suppress->parsed()) {
    std::optional<std::string> unitary_path, out_path;
    if (!suppress_unitary.empty()) unitary_path = suppress_unitary;
    if (!suppress_out.empty()) out_path = suppress_out;
    bool table = suppress_format == "table";
    OutputFormat fmt = suppress_format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!table && suppress_format != "json" && suppress_format != "csv") {
      std::cerr << "error: --format must be table, json or csv\n";
      return 1;
    }
    return cmd_suppress(suppress_n, unitary_path, out_path, fmt, table);
  }

  if (verify->parsed()) {
    if (level != "quick" && level != "full") {
      std::cerr << "error: --level must be quick or full\n";
      return 1;
    }
    return cmd_verify(level == "full" ? VerifyLevel::full : VerifyLevel::quick);
  }
  return 1;
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "multiport/cli.hpp"
#include "multiport/io.hpp"
#include "multiport/protocol.hpp"
#include "multiport/symmetry.hpp"

#include <nlohmann/json.hpp>

using namespace multiport;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("scenario parsing") {
  CHECK(parse_scenario("depolarized") == Scenario::depolarized);
  CHECK(parse_scenario("product") == Scenario::product);
  CHECK(parse_scenario("shortcut-pure") == Scenario::shortcut_pure);
  CHECK(parse_scenario("shortcut-mixed") == Scenario::shortcut_mixed);
  CHECK(parse_scenario("custom") == Scenario::custom);
  CHECK_FALSE(parse_scenario("unknown").has_value());
}

TEST_CASE("prepare_scenario builds the documented inputs") {
  ScenarioConfig config;
  config.scenario = Scenario::depolarized;
  config.n = 3;
  PreparedScenario dep = prepare_scenario(config);
  CHECK(dep.input.components().size() == 27);
  CHECK(dep.start_j == 2);

  config.scenario = Scenario::product;
  PreparedScenario prod = prepare_scenario(config);
  CHECK(prod.input.components().size() == 1);

  config.scenario = Scenario::shortcut_pure;
  PreparedScenario sp = prepare_scenario(config);
  CHECK(sp.start_j == 3);
  CHECK(sp.input.components().size() == 1);
  CHECK(sp.input.levels() == 3);

  config.scenario = Scenario::shortcut_mixed;
  PreparedScenario sm = prepare_scenario(config);
  CHECK(sm.input.components().size() == 3);

  config.n = 4;
  CHECK_THROWS_AS(prepare_scenario(config), std::invalid_argument);

  config.scenario = Scenario::custom;
  config.n = 2;
  config.input_path.reset();
  CHECK_THROWS_AS(prepare_scenario(config), std::invalid_argument);
}

TEST_CASE("cmd_run writes the documented reports") {
  auto out = temp_file("multiport_test_report.json");
  ScenarioConfig config;
  config.scenario = Scenario::depolarized;
  config.n = 3;
  config.out_path = out.string();
  CHECK(cmd_run(config) == 0);
  json report = load_json_file(out.string());
  CHECK(report["p_success"].get<double>() == doctest::Approx(1.0 / 27.0).epsilon(1e-9));
  CHECK(report["fidelity"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report["N"] == 3);

  // byte-stable across runs
  std::string first = slurp(out);
  CHECK(cmd_run(config) == 0);
  CHECK(slurp(out) == first);
  std::filesystem::remove(out);
}

TEST_CASE("cmd_run covers the documented scenario values") {
  auto out = temp_file("multiport_scenario_values.json");
  ScenarioConfig config;
  config.out_path = out.string();

  config.scenario = Scenario::product;
  config.n = 4;
  CHECK(cmd_run(config) == 0);
  CHECK(load_json_file(out.string())["p_success"].get<double>() ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-9));

  config.scenario = Scenario::shortcut_pure;
  config.n = 3;
  CHECK(cmd_run(config) == 0);
  json report = load_json_file(out.string());
  CHECK(report["p_success"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(report["fidelity"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  config.scenario = Scenario::shortcut_mixed;
  CHECK(cmd_run(config) == 0);
  CHECK(load_json_file(out.string())["p_success"].get<double>() ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-9));
  std::filesystem::remove(out);
}

TEST_CASE("cmd_run exit codes: zero-probability and malformed input") {
  auto state = temp_file("multiport_symmetric_state.json");
  write_text_file(state.string(),
                  state_to_json(product_state(std::vector<int>{0, 0}, 2, 2)).dump());
  auto out = temp_file("multiport_zero_report.json");
  ScenarioConfig config;
  config.scenario = Scenario::custom;
  config.input_path = state.string();
  config.out_path = out.string();
  CHECK(cmd_run(config) == 2);
  json report = load_json_file(out.string());
  CHECK(report["p_success"].get<double>() < 1e-10);
  CHECK(report["output"].is_null());

  write_text_file(state.string(), "{\"levels\": 2, \"terms\": []}");
  CHECK(cmd_run(config) == 1);

  std::filesystem::remove(state);
  std::filesystem::remove(out);
}

TEST_CASE("cmd_run with a custom ensemble file honors start_j") {
  Ensemble mixed = depolarize_mode(
      pure(apply_creation(extend_space(singlet_over_levels(2, std::vector<int>{0, 1}, 3), 3, 3),
                          2, 2)),
      2, 3);
  auto path = temp_file("multiport_shortcut_mixed.json");
  write_text_file(path.string(), ensemble_to_json(mixed).dump());
  auto out = temp_file("multiport_shortcut_mixed_report.json");
  ScenarioConfig config;
  config.scenario = Scenario::custom;
  config.input_path = path.string();
  config.start_j = 3;
  config.out_path = out.string();
  CHECK(cmd_run(config) == 0);
  json report = load_json_file(out.string());
  CHECK(report["p_success"].get<double>() == doctest::Approx(1.0 / 9.0).epsilon(1e-9));
  std::filesystem::remove(path);
  std::filesystem::remove(out);
}

TEST_CASE("csv reports carry the same numbers as json") {
  auto json_out = temp_file("multiport_report_a.json");
  auto csv_out = temp_file("multiport_report_a.csv");
  ScenarioConfig config;
  config.scenario = Scenario::product;
  config.n = 3;
  config.out_path = json_out.string();
  CHECK(cmd_run(config) == 0);
  config.format = OutputFormat::csv;
  config.out_path = csv_out.string();
  CHECK(cmd_run(config) == 0);

  json report = load_json_file(json_out.string());
  std::string csv = slurp(csv_out);
  std::ostringstream expected;
  expected << "p_success," << report["p_success"].dump();
  CHECK(csv.find(expected.str()) != std::string::npos);
  std::filesystem::remove(json_out);
  std::filesystem::remove(csv_out);
}

TEST_CASE("noise and phase flags leave scenario observables unchanged") {
  ScenarioConfig plain;
  plain.scenario = Scenario::depolarized;
  plain.n = 2;
  auto out = temp_file("multiport_noise_report.json");
  plain.out_path = out.string();
  CHECK(cmd_run(plain) == 0);
  json reference = load_json_file(out.string());

  ScenarioConfig noisy = plain;
  noisy.random_local_noise = true;
  noisy.random_phases = true;
  noisy.seed = 99;
  CHECK(cmd_run(noisy) == 0);
  json report = load_json_file(out.string());
  CHECK(report["p_success"].get<double>() ==
        doctest::Approx(reference["p_success"].get<double>()).epsilon(1e-9));
  CHECK(report["fidelity"].get<double>() ==
        doctest::Approx(reference["fidelity"].get<double>()).epsilon(1e-9));
  std::filesystem::remove(out);
}

TEST_CASE("cmd_suppress validates N and cross-checks the law") {
  CHECK(cmd_suppress(9, std::nullopt, std::nullopt, OutputFormat::json, false) == 1);

  auto out = temp_file("multiport_suppress.json");
  CHECK(cmd_suppress(3, std::nullopt, out.string(), OutputFormat::json, false) == 0);
  json table = load_json_file(out.string());
  CHECK(table["cross_check_ok"] == true);
  CHECK(table["rows"].size() == 30);  // 10 occupation lists x 3 classes

  // the anti-bunching row is allowed only for the (-1)^(N-1) = +1 class
  int allowed_coincidences = 0;
  for (const json& row : table["rows"]) {
    if (row["s"] == json::array({1, 1, 1}) && !row["suppressed"].get<bool>()) {
      ++allowed_coincidences;
      CHECK(row["class"] == 0);
    }
  }
  CHECK(allowed_coincidences == 1);
  std::filesystem::remove(out);
}

TEST_CASE("cmd_suppress accepts a custom unitary file") {
  auto path = temp_file("multiport_unitary.json");
  // local phases on the Fourier tritter lead to the same verdicts
  std::vector<cplx> phases{std::polar(1.0, 0.3), std::polar(1.0, 1.1), std::polar(1.0, 2.7)};
  ModeUnitary variant = phase_variant(fourier_matrix(3), phases, phases);
  write_text_file(path.string(), unitary_to_json(variant).dump());
  CHECK(cmd_suppress(3, path.string(), std::nullopt, OutputFormat::json, false) == 0);
  std::filesystem::remove(path);
}

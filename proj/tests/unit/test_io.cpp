#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "multiport/io.hpp"
#include "multiport/protocol.hpp"
#include "multiport/symmetry.hpp"

#include <nlohmann/json.hpp>

using namespace multiport;

TEST_CASE("round_sig keeps 12 significant digits") {
  CHECK(round_sig(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-13));
  CHECK(round_sig(0.25) == 0.25);
  CHECK(round_sig(0.0) == 0.0);
  CHECK(round_sig(-1.0 / 27.0) == doctest::Approx(-0.037037037037).epsilon(1e-13));
}

TEST_CASE("state files round-trip in canonical form") {
  FockVector singlet = generalized_singlet(3);
  json j = state_to_json(singlet);
  CHECK(j["modes"] == 3);
  CHECK(j["levels"] == 3);
  CHECK(j["terms"].size() == 6);
  // canonical occ ordering: entries sorted by (mode, level)
  for (const json& term : j["terms"]) {
    const json& occ = term["occ"];
    for (std::size_t i = 1; i < occ.size(); ++i) {
      CHECK(occ[i - 1][0].get<int>() <= occ[i][0].get<int>());
    }
  }
  FockVector back = state_from_json(j);
  CHECK(fidelity(back.normalized(), singlet) == doctest::Approx(1.0));
}

TEST_CASE("state readers accept scrambled occ order") {
  json j = {{"modes", 2},
            {"levels", 2},
            {"terms", json::array({json{{"occ", json::array({json::array({1, 1, 1}),
                                                             json::array({0, 0, 1})})},
                                        {"amp", json::array({1.0, 0.0})}}})}};
  FockVector v = state_from_json(j);
  CHECK(v.amplitude(OccupationState({{0, 0, 1}, {1, 1, 1}})) == cplx{1.0, 0.0});
}

TEST_CASE("malformed state files name the offending field") {
  json missing_modes = {{"levels", 2}, {"terms", json::array()}};
  CHECK_THROWS_WITH_AS(state_from_json(missing_modes),
                       doctest::Contains("\"modes\""), std::invalid_argument);

  json bad_amp = {{"modes", 2},
                  {"levels", 2},
                  {"terms", json::array({json{{"occ", json::array({json::array({0, 0, 1})})},
                                              {"amp", json::array({1.0})}}})}};
  CHECK_THROWS_WITH_AS(state_from_json(bad_amp), doctest::Contains("amp"),
                       std::invalid_argument);

  json dup_occ = {{"modes", 2},
                  {"levels", 2},
                  {"terms", json::array({json{{"occ", json::array({json::array({0, 0, 1}),
                                                                   json::array({0, 0, 1})})},
                                              {"amp", json::array({1.0, 0.0})}}})}};
  CHECK_THROWS_WITH_AS(state_from_json(dup_occ), doctest::Contains("occ"),
                       std::invalid_argument);
}

TEST_CASE("ensemble files round-trip and validate weights") {
  Ensemble ens = fully_depolarized(2);
  json j = ensemble_to_json(ens);
  Ensemble back = ensemble_from_json(j);
  CHECK(back.components().size() == 4);
  CHECK(back.total_weight() == doctest::Approx(1.0));

  j["components"][0]["weight"] = 0.9;
  CHECK_THROWS_AS(ensemble_from_json(j), std::invalid_argument);
}

TEST_CASE("unitary files round-trip and reject non-unitary rows") {
  ModeUnitary f3 = fourier_matrix(3);
  json j = unitary_to_json(f3);
  CHECK(j["dim"] == 3);
  ModeUnitary back = unitary_from_json(j);
  CHECK(back.matrix().isApprox(f3.matrix(), 1e-9));

  j["rows"][0][0] = json::array({5.0, 0.0});
  CHECK_THROWS_WITH_AS(unitary_from_json(j), doctest::Contains("rows"),
                       std::invalid_argument);
}

TEST_CASE("report JSON carries the documented fields") {
  ProtocolReport report = run_protocol(fully_depolarized(2), 2, 2);
  json j = report_to_json(report);
  CHECK(j["N"] == 2);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["j"] == 2);
  CHECK(j["p_success"].get<double>() == doctest::Approx(0.25));
  CHECK(j["fidelity"].get<double>() == doctest::Approx(1.0));
  CHECK(j["output"].is_object());
  CHECK(j["output"]["components"].size() == 2);

  // zero-probability outcome: output is null
  ProtocolReport failed = run_protocol(pure(product_state(std::vector<int>{0, 0}, 2, 2)), 2, 2);
  CHECK(report_to_json(failed)["output"].is_null());
}

TEST_CASE("CSV flattening carries identical numeric content") {
  ProtocolReport report = run_protocol(fully_depolarized(2), 2, 2);
  json j = report_to_json(report);
  std::string csv = json_to_csv(j);

  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "path,value");
  int checked = 0;
  while (std::getline(lines, line)) {
    auto comma = line.rfind(',');
    REQUIRE(comma != std::string::npos);
    std::string path = line.substr(0, comma);
    std::string value = line.substr(comma + 1);
    if (path.find('"') != std::string::npos) continue;  // quoted path, skip in this check
    // walk the document along the path
    const json* node = &j;
    std::istringstream segments(path);
    std::string segment;
    while (std::getline(segments, segment, '.')) {
      if (node->is_array())
        node = &(*node)[static_cast<std::size_t>(std::stoi(segment))];
      else
        node = &(*node)[segment];
    }
    CHECK(node->dump() == value);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("report serialization is deterministic") {
  ProtocolReport report = run_protocol(fully_depolarized(3), 3, 2);
  CHECK(report_to_json(report).dump() == report_to_json(report).dump());
  ProtocolReport again = run_protocol(fully_depolarized(3), 3, 2);
  CHECK(report_to_json(report).dump() == report_to_json(again).dump());
}

#include "multiport/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <numeric>
#include <sstream>

#include "multiport/io.hpp"
#include "multiport/protocol.hpp"
#include "multiport/suppression.hpp"
#include "multiport/symmetry.hpp"

namespace multiport {

namespace {

constexpr int kMaxSuppressN = 5;

FockVector shortcut_input() {
  // |A_2> on modes 0,1 with a level-2 particle in mode 2; m = d = 3.
  FockVector pair = singlet_over_levels(2, std::vector<int>{0, 1}, 3);
  return apply_creation(extend_space(pair, 3, 3), 2, 2);
}

Ensemble apply_scenario_noise(Ensemble ens, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::MatrixXcd> noise;
  for (int mode = 0; mode < ens.modes(); ++mode)
    noise.push_back(random_unitary(ens.levels(), rng));
  return apply_local_noise(ens, noise);
}

void emit(const json& document, const std::optional<std::string>& out_path,
          OutputFormat format) {
  std::string text =
      format == OutputFormat::json ? document.dump(2) + "\n" : json_to_csv(document);
  if (out_path)
    write_text_file(*out_path, text);
  else
    std::cout << text;
}

}  // namespace

std::optional<Scenario> parse_scenario(const std::string& name) {
  if (name == "depolarized") return Scenario::depolarized;
  if (name == "product") return Scenario::product;
  if (name == "shortcut-pure") return Scenario::shortcut_pure;
  if (name == "shortcut-mixed") return Scenario::shortcut_mixed;
  if (name == "custom") return Scenario::custom;
  return std::nullopt;
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::depolarized: return "depolarized";
    case Scenario::product: return "product";
    case Scenario::shortcut_pure: return "shortcut-pure";
    case Scenario::shortcut_mixed: return "shortcut-mixed";
    case Scenario::custom: return "custom";
  }
  return "?";
}

PreparedScenario prepare_scenario(const ScenarioConfig& config) {
  int n = config.n;
  if (n < 2) throw std::invalid_argument("need N >= 2");
  if ((config.scenario == Scenario::shortcut_pure ||
       config.scenario == Scenario::shortcut_mixed) &&
      n != 3)
    throw std::invalid_argument("shortcut scenarios fix N = 3");

  int start_j = config.start_j.value_or(
      config.scenario == Scenario::shortcut_pure || config.scenario == Scenario::shortcut_mixed
          ? 3
          : 2);

  auto noisy = [&](Ensemble ens) {
    return config.random_local_noise ? apply_scenario_noise(std::move(ens), config.seed) : ens;
  };

  switch (config.scenario) {
    case Scenario::depolarized: {
      // Noise acts on an arbitrary starting state; depolarization then resets
      // every mode, so the pipeline sees the same mixture either way.
      std::vector<int> levels(static_cast<std::size_t>(n));
      std::iota(levels.begin(), levels.end(), 0);
      Ensemble ens = noisy(pure(product_state(levels, n, n)));
      for (int mode = 0; mode < n; ++mode) ens = depolarize_mode(ens, mode, n);
      return PreparedScenario{std::move(ens), n, start_j};
    }
    case Scenario::product: {
      std::vector<int> levels(static_cast<std::size_t>(n));
      std::iota(levels.begin(), levels.end(), 0);
      return PreparedScenario{noisy(pure(product_state(levels, n, n))), n, start_j};
    }
    case Scenario::shortcut_pure:
      return PreparedScenario{noisy(pure(shortcut_input())), 3, start_j};
    case Scenario::shortcut_mixed: {
      Ensemble ens = depolarize_mode(noisy(pure(shortcut_input())), 2, 3);
      return PreparedScenario{std::move(ens), 3, start_j};
    }
    case Scenario::custom: {
      if (!config.input_path)
        throw std::invalid_argument("custom scenario requires --input FILE");
      json j = load_json_file(*config.input_path);
      Ensemble ens = j.contains("components") ? ensemble_from_json(j)
                                              : pure(state_from_json(j).normalized());
      int file_n = ens.modes();
      if (config.start_j && (*config.start_j < 2 || *config.start_j > file_n))
        throw std::invalid_argument("need 2 <= start_j <= N");
      return PreparedScenario{noisy(std::move(ens)), file_n, config.start_j.value_or(2)};
    }
  }
  throw std::invalid_argument("unknown scenario");
}

int cmd_run(const ScenarioConfig& config) {
  try {
    PreparedScenario prepared = prepare_scenario(config);

    ProtocolOptions options;
    options.start_j = prepared.start_j;
    options.parallel = config.parallel;
    if (config.random_phases) {
      std::uint64_t seed = config.seed;
      options.step_unitary = [seed](int j, int m) {
        Rng rng(seed + static_cast<std::uint64_t>(j));
        ModeUnitary variant = phase_variant(fourier_matrix(j), random_unit_phases(j, rng),
                                            random_unit_phases(j, rng));
        std::vector<int> front(static_cast<std::size_t>(j));
        std::iota(front.begin(), front.end(), 0);
        return embed(variant, front, m);
      };
    }

    ProtocolReport report = run_protocol(prepared.input, prepared.n, options);
    emit(report_to_json(report), config.out_path, config.format);
    return report.success_probability > kZeroProbability ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_suppress(int n, const std::optional<std::string>& unitary_path,
                 const std::optional<std::string>& out_path, OutputFormat format,
                 bool text_table) {
  try {
    if (n < 2 || n > kMaxSuppressN) {
      std::cerr << "error: suppress supports 2 <= N <= " << kMaxSuppressN << "\n";
      return 1;
    }
    ModeUnitary evolution = unitary_path ? unitary_from_json(load_json_file(*unitary_path))
                                         : fourier_matrix(n);
    if (evolution.dim() != n) {
      std::cerr << "error: unitary file dimension " << evolution.dim() << " does not match N\n";
      return 1;
    }
    EigenvalueVector lambdas = cyclic_eigenvalues(n);
    bool cross_check = n <= 3;

    // Class representatives: projections of the product basis states onto
    // each cyclic eigenspace.
    std::vector<std::vector<FockVector>> class_states(static_cast<std::size_t>(n));
    if (cross_check) {
      std::vector<int> assignment(static_cast<std::size_t>(n), 0);
      while (true) {
        FockVector v = product_state(assignment, n, n);
        for (int q = 0; q < n; ++q) {
          cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
          FockVector projected = cyclic_eigenspace_apply(v, mu, n, n);
          if (projected.norm() > 1e-9)
            class_states[static_cast<std::size_t>(q)].push_back(projected.normalized());
        }
        int i = n - 1;
        while (i >= 0 && assignment[static_cast<std::size_t>(i)] == n - 1) {
          assignment[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++assignment[static_cast<std::size_t>(i)];
      }
    }

    json rows = json::array();
    bool violated = false;
    for (const ModeOccupationList& s : enumerate_occupations(n, n)) {
      for (int q = 0; q < n; ++q) {
        cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
        bool suppressed = suppressed_for_class(lambdas, mu, s);
        json row{{"s", s.counts}, {"class", q}, {"suppressed", suppressed}};
        if (cross_check) {
          double max_p = 0.0;
          for (const FockVector& state : class_states[static_cast<std::size_t>(q)])
            max_p = std::max(max_p, output_probability(state, evolution, s));
          row["max_probability"] = round_sig(max_p);
          if (suppressed && max_p > 1e-10) violated = true;
        }
        rows.push_back(std::move(row));
      }
    }

    if (text_table && !out_path) {
      std::cout << "N=" << n << "  evolution=" << (unitary_path ? "custom" : "fourier")
                << "  classes: eigenvalue w^q of the " << n << "-cycle\n";
      for (const json& row : rows) {
        std::ostringstream line;
        line << "s=(";
        const auto& counts = row["s"];
        for (std::size_t i = 0; i < counts.size(); ++i)
          line << (i ? "," : "") << counts[i].get<int>();
        line << ")  class q=" << row["class"].get<int>() << "  "
             << (row["suppressed"].get<bool>() ? "suppressed" : "allowed");
        if (row.contains("max_probability"))
          line << "  max_p=" << row["max_probability"].get<double>();
        std::cout << line.str() << "\n";
      }
      if (cross_check)
        std::cout << (violated ? "cross-check FAILED\n" : "cross-check ok\n");
    } else {
      emit(json{{"N", n}, {"rows", rows}, {"cross_check_ok", !violated}}, out_path, format);
    }
    return violated ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(VerifyLevel level) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results = run_verification(level);
  const CheckResult* first_failure = nullptr;
  for (const CheckResult& result : results) {
    if (result.passed) {
      std::cout << "ok   " << result.name << "\n";
    } else {
      std::cout << "FAIL " << result.name << ": " << result.detail << "\n";
      if (!first_failure) first_failure = &result;
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << results.size() << " checks, "
            << (first_failure ? "violations present" : "all passed") << " ("
            << elapsed / 1000.0 << " s)\n";
  if (first_failure) {
    std::cerr << "first failing invariant: " << first_failure->name << "\n";
    return 1;
  }
  return 0;
}

}  // namespace multiport

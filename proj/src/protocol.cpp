#include "multiport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "multiport/symmetry.hpp"

namespace multiport {

namespace {

struct ComponentOutcome {
  std::vector<double> step_probs;
  double cumulative = 1.0;
  std::optional<FockVector> state;
};

ComponentOutcome run_component(const FockVector& input, int n, const ProtocolOptions& options) {
  ComponentOutcome outcome;
  outcome.state = input;
  for (int j = options.start_j; j <= n; ++j) {
    if (!outcome.state) {
      outcome.step_probs.push_back(0.0);
      continue;
    }
    ModeUnitary u =
        options.step_unitary ? options.step_unitary(j, n) : default_step_unitary(j, n);
    if (u.dim() != n)
      throw std::invalid_argument("run_protocol: step unitary must act on all n modes");
    FockVector transformed = apply_mode_unitary(*outcome.state, u);
    std::vector<int> front(static_cast<std::size_t>(j));
    std::iota(front.begin(), front.end(), 0);
    CoincidenceResult step = coincidence_project(transformed, front);
    outcome.step_probs.push_back(step.probability);
    outcome.cumulative *= step.probability;
    outcome.state = std::move(step.conditional);
  }
  return outcome;
}

std::vector<FockVector> subset_singlets(int n, int d) {
  // All n-element level subsets of [0, d), lexicographic.
  std::vector<FockVector> singlets;
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    singlets.push_back(singlet_over_levels(n, subset, d));
    int i = n - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == d - n + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
  }
  return singlets;
}

}  // namespace

CoincidenceResult coincidence_project(const FockVector& v, std::span<const int> modes) {
  if (!v.is_normalized())
    throw std::invalid_argument("coincidence_project: state must be normalized");
  FockVector kept(v.modes(), v.levels());
  for (const auto& [occ, amp] : v.terms()) {
    bool coincident = true;
    for (int mode : modes)
      if (occ.mode_count(mode) != 1) {
        coincident = false;
        break;
      }
    if (coincident) kept.add_term(occ, amp);
  }
  double probability = kept.norm_sq();
  if (probability <= kZeroProbability) return CoincidenceResult{probability, std::nullopt};
  kept *= cplx{1.0 / std::sqrt(probability), 0.0};
  kept.prune();
  return CoincidenceResult{probability, std::move(kept)};
}

ModeUnitary default_step_unitary(int j, int m) {
  std::vector<int> front(static_cast<std::size_t>(j));
  std::iota(front.begin(), front.end(), 0);
  return embed(fourier_matrix(j), front, m);
}

CoincidenceResult protocol_step(const FockVector& v, int j, int m) {
  if (v.modes() != m) throw std::invalid_argument("protocol_step: mode count mismatch");
  if (j < 2 || j > m) throw std::invalid_argument("protocol_step: need 2 <= j <= m");
  FockVector transformed = apply_mode_unitary(v, default_step_unitary(j, m));
  std::vector<int> front(static_cast<std::size_t>(j));
  std::iota(front.begin(), front.end(), 0);
  return coincidence_project(transformed, front);
}

ProtocolReport run_protocol(const Ensemble& input, int n, int start_j) {
  ProtocolOptions options;
  options.start_j = start_j;
  return run_protocol(input, n, options);
}

ProtocolReport run_protocol(const Ensemble& input, int n, const ProtocolOptions& options) {
  if (input.modes() != n)
    throw std::invalid_argument("run_protocol: ensemble must live on exactly n modes");
  if (options.start_j < 2 || options.start_j > n)
    throw std::invalid_argument("run_protocol: need 2 <= start_j <= n");
  input.validate();
  for (const Ensemble::Component& comp : input.components())
    for (const auto& [occ, amp] : comp.state.terms())
      for (int mode = 0; mode < n; ++mode)
        if (occ.mode_count(mode) != 1)
          throw std::invalid_argument(
              "run_protocol: input must hold exactly one particle per mode");

  const auto& components = input.components();
  std::vector<ComponentOutcome> outcomes(components.size());
  if (options.parallel && components.size() > 1) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t chunk = (components.size() + workers - 1) / workers;
    std::vector<std::future<void>> futures;
    for (std::size_t begin = 0; begin < components.size(); begin += chunk) {
      std::size_t end = std::min(begin + chunk, components.size());
      futures.push_back(std::async(std::launch::async, [&, begin, end] {
        for (std::size_t i = begin; i < end; ++i)
          outcomes[i] = run_component(components[i].state, n, options);
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t i = 0; i < components.size(); ++i)
      outcomes[i] = run_component(components[i].state, n, options);
  }

  ProtocolReport report;
  report.n = n;

  // Step j coincidence probability, conditioned on all earlier coincidences
  // across the whole mixture.
  std::size_t step_count = static_cast<std::size_t>(n - options.start_j + 1);
  double mass_before = 1.0;
  std::vector<double> partial(components.size(), 1.0);
  for (std::size_t t = 0; t < step_count; ++t) {
    double mass_after = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
      partial[i] *= outcomes[i].step_probs[t];
      mass_after += components[i].weight * partial[i];
    }
    report.steps.push_back(
        StepStat{options.start_j + static_cast<int>(t),
                 mass_before > kZeroProbability ? mass_after / mass_before : 0.0});
    mass_before = mass_after;
  }

  double success = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i)
    success += components[i].weight * outcomes[i].cumulative;
  report.success_probability = success;

  double surviving_mass = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (outcomes[i].state && outcomes[i].cumulative > kZeroProbability)
      surviving_mass += components[i].weight * outcomes[i].cumulative;
  if (surviving_mass > kZeroProbability) {
    Ensemble output(input.modes(), input.levels());
    for (std::size_t i = 0; i < components.size(); ++i)
      if (outcomes[i].state && outcomes[i].cumulative > kZeroProbability)
        output.add(components[i].weight * outcomes[i].cumulative / surviving_mass,
                   std::move(*outcomes[i].state));
    output.validate();

    double fid = 0.0;
    if (input.levels() == n) {
      FockVector target = generalized_singlet(n);
      for (const Ensemble::Component& comp : output.components())
        fid += comp.weight * fidelity(target, comp.state);
    } else {
      for (const Ensemble::Component& comp : output.components())
        fid += comp.weight * antisymmetrizer_apply(comp.state, n).norm_sq();
    }
    report.fidelity_with_singlet = fid;
    report.output = std::move(output);
  }
  return report;
}

double success_probability_oracle(const Ensemble& input, int n) {
  if (input.modes() != n)
    throw std::invalid_argument("success_probability_oracle: ensemble must live on n modes");
  if (input.levels() < n) return 0.0;
  std::vector<FockVector> singlets = subset_singlets(n, input.levels());
  double total = 0.0;
  for (const Ensemble::Component& comp : input.components())
    for (const FockVector& singlet : singlets)
      total += comp.weight * std::norm(inner_product(singlet, comp.state));
  return total;
}

}  // namespace multiport

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "multiport/channels.hpp"
#include "multiport/interferometer.hpp"

namespace multiport {

/// Success probabilities below this count as "protocol failed"; reports still
/// carry the raw number.
inline constexpr double kZeroProbability = 1e-12;

struct StepStat {
  int j;
  double probability;  // coincidence probability conditioned on earlier steps
};

/// Outcome of the distillation pipeline on one input ensemble.
struct ProtocolReport {
  int n = 0;
  std::vector<StepStat> steps;
  double success_probability = 0.0;
  double fidelity_with_singlet = 0.0;
  /// Conditional output given all coincidences; absent when the success
  /// probability is numerically zero.
  std::optional<Ensemble> output;
};

struct CoincidenceResult {
  double probability = 0.0;
  std::optional<FockVector> conditional;
};

/// Keeps the amplitude mass on labels with exactly one particle in each
/// listed mode; internal levels are not measured. v must be normalized.
CoincidenceResult coincidence_project(const FockVector& v, std::span<const int> modes);

/// The Fourier j-port embedded on modes 0..j-1 of an m-mode system.
ModeUnitary default_step_unitary(int j, int m);

/// One pipeline factor: the embedded Fourier j-port followed by coincidence
/// projection on modes 0..j-1.
CoincidenceResult protocol_step(const FockVector& v, int j, int m);

struct ProtocolOptions {
  int start_j = 2;
  /// Unitary used at step j inside an m-mode system; defaults to
  /// default_step_unitary. Must act as the identity on modes >= j.
  std::function<ModeUnitary(int j, int m)> step_unitary;
  /// Evaluate ensemble components concurrently; accumulation stays in
  /// component order, so reports are identical either way.
  bool parallel = false;
};

/// Runs steps j = start_j..n on every component and aggregates coincidence
/// probabilities, the cumulative success probability, the conditional output
/// mixture, and its fidelity with the generalized singlet (for d > n, with
/// the projection onto the antisymmetric subspace).
ProtocolReport run_protocol(const Ensemble& input, int n, const ProtocolOptions& options = {});
ProtocolReport run_protocol(const Ensemble& input, int n, int start_j);

/// Direct overlap of the input with the antisymmetric subspace, summed over
/// all n-element level subsets. Independent of the interferometric pipeline;
/// serves as the cross-check oracle for run_protocol.
double success_probability_oracle(const Ensemble& input, int n);

}  // namespace multiport

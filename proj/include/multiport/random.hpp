#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "multiport/fock.hpp"

namespace multiport {

/// Fixed default seed for every randomized run; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 123456789ULL;

/// Deterministic generator: mt19937_64 with explicit bit-to-double mapping,
/// so streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double gaussian();

  cplx gaussian_cplx() { return cplx{gaussian(), gaussian()}; }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-like unitary: complex Gaussian matrix orthonormalized by QR with the
/// R diagonal phase fixed.
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

std::vector<cplx> random_unit_phases(int n, Rng& rng);

/// Normalized random state with one particle in each of n modes and Gaussian
/// amplitudes over all d^n level assignments.
FockVector random_one_per_mode_state(int n, int d, Rng& rng);

}  // namespace multiport

#include "multiport/verify.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "multiport/channels.hpp"
#include "multiport/interferometer.hpp"
#include "multiport/protocol.hpp"
#include "multiport/random.hpp"
#include "multiport/suppression.hpp"
#include "multiport/symmetry.hpp"

namespace multiport {

namespace {

using MaybeFailure = std::optional<std::string>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

/// Max-norm of the difference between two vectors.
double max_deviation(const FockVector& a, const FockVector& b) {
  FockVector diff = a - b;
  double dev = 0.0;
  for (const auto& [occ, amp] : diff.terms()) dev = std::max(dev, std::abs(amp));
  return dev;
}

void for_each_assignment(int n, int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(assignment);
    int i = n - 1;
    while (i >= 0 && assignment[static_cast<std::size_t>(i)] == d - 1) {
      assignment[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++assignment[static_cast<std::size_t>(i)];
  }
}

/// Random normalized state in the antisymmetric subspace for d >= n.
FockVector random_antisymmetric_state(int n, int d, Rng& rng) {
  FockVector acc(n, d);
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    FockVector part = singlet_over_levels(n, subset, d);
    part *= rng.gaussian_cplx();
    acc += part;
    int i = n - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == d - n + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
  }
  return acc.normalized();
}

MaybeFailure check_fock_orthonormality() {
  std::vector<FockVector> basis;
  for_each_assignment(3, 3, [&](const std::vector<int>& levels) {
    basis.push_back(product_state(levels, 3, 3));
  });
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) {
      cplx expected = i == k ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (inner_product(basis[i], basis[k]) != expected)
        return "basis labels " + std::to_string(i) + ", " + std::to_string(k) +
               " are not exactly orthonormal";
    }
  return std::nullopt;
}

MaybeFailure check_fock_ladder() {
  FockVector v = FockVector::vacuum_state(2, 2);
  double factorial = 1.0;
  for (int n = 1; n <= 6; ++n) {
    v = apply_creation(v, 0, 1);
    factorial *= n;
    cplx amp = v.terms().begin()->second;
    if (std::abs(amp - std::sqrt(factorial)) > kNormTolerance)
      return "n-fold creation amplitude deviates from sqrt(n!) at n=" + std::to_string(n);
  }
  return std::nullopt;
}

MaybeFailure check_fock_prune_idempotence(Rng& rng) {
  FockVector v = random_one_per_mode_state(3, 3, rng);
  FockVector once = v.normalized();
  FockVector twice = once.normalized();
  double dev = max_deviation(once, twice);
  if (dev > kPruneTolerance) return "normalizing twice deviates by " + fmt(dev);
  return std::nullopt;
}

MaybeFailure check_interferometer_unitarity() {
  for (int n = 1; n <= 6; ++n)
    if (!is_unitary(fourier_matrix(n).matrix()))
      return "fourier matrix not unitary at n=" + std::to_string(n);
  return std::nullopt;
}

MaybeFailure check_norm_preservation(Rng& rng, int draws) {
  for (int i = 0; i < draws; ++i) {
    ModeUnitary u(random_unitary(3, rng));
    FockVector v = random_one_per_mode_state(3, 3, rng);
    double deviation = std::abs(apply_mode_unitary(v, u).norm() - 1.0);
    if (deviation > kNormTolerance)
      return "norm drifts by " + fmt(deviation) + " on draw " + std::to_string(i);
  }
  return std::nullopt;
}

MaybeFailure check_composition(Rng& rng, int draws) {
  for (int i = 0; i < draws; ++i) {
    ModeUnitary u1(random_unitary(3, rng));
    ModeUnitary u2(random_unitary(3, rng));
    FockVector v = random_one_per_mode_state(3, 3, rng);
    FockVector sequential = apply_mode_unitary(apply_mode_unitary(v, u1), u2);
    FockVector composed = apply_mode_unitary(v, compose(u2, u1));
    double dev = max_deviation(sequential, composed);
    if (dev > kNormTolerance) return "composition deviates by " + fmt(dev);
  }
  return std::nullopt;
}

MaybeFailure check_fourier_eigenphase(int max_n) {
  // Amplitude-level eigenvector identity U_N |A_N> = det(U_N) |A_N>;
  // det(U_2) = -1 is additionally pinned.
  for (int n = 2; n <= max_n; ++n) {
    FockVector singlet = generalized_singlet(n);
    ModeUnitary fourier = fourier_matrix(n);
    cplx det = fourier.matrix().determinant();
    if (std::abs(std::abs(det) - 1.0) > kNormTolerance)
      return "det U_" + std::to_string(n) + " is not unimodular";
    if (n == 2 && std::abs(det - cplx{-1.0, 0.0}) > kNormTolerance)
      return "det U_2 deviates from -1";
    FockVector transformed = apply_mode_unitary(singlet, fourier);
    FockVector expected = singlet;
    expected *= det;
    double dev = max_deviation(transformed, expected);
    if (dev > kNormTolerance)
      return "N=" + std::to_string(n) + " eigenphase deviates by " + fmt(dev);
  }
  return std::nullopt;
}

MaybeFailure check_antisymmetric_invariance(Rng& rng, int draws, bool full) {
  std::vector<std::pair<int, int>> spaces{{2, 2}, {2, 3}, {3, 3}, {3, 4}};
  if (full) spaces.push_back({4, 4});
  for (auto [n, d] : spaces) {
    FockVector psi = random_antisymmetric_state(n, d, rng);
    for (int i = 0; i < draws; ++i) {
      ModeUnitary u(random_unitary(n, rng));
      double f = fidelity(apply_mode_unitary(psi, u), psi);
      if (std::abs(f - 1.0) > 1e-9)
        return "n=" + std::to_string(n) + " d=" + std::to_string(d) +
               " fidelity drops to " + fmt(f);
    }
  }
  return std::nullopt;
}

FockVector projector_chain(const FockVector& v, int n) {
  FockVector w = v;
  for (int j = 2; j <= n; ++j) w = eigenspace_projector_apply(w, j, n);
  return w;
}

MaybeFailure check_projector_product(int max_n, bool sample_n5, Rng& rng) {
  for (int n = 2; n <= max_n; ++n) {
    MaybeFailure failure;
    for_each_assignment(n, n, [&](const std::vector<int>& levels) {
      if (failure) return;
      FockVector v = product_state(levels, n, n);
      double dev = max_deviation(projector_chain(v, n), antisymmetrizer_apply(v, n));
      if (dev > kNormTolerance)
        failure = "N=" + std::to_string(n) + " chain deviates by " + fmt(dev);
    });
    if (failure) return failure;
  }
  if (sample_n5) {
    for (int i = 0; i < 20; ++i) {
      std::vector<int> levels(5);
      for (int& l : levels) l = static_cast<int>(rng.next_u64() % 5);
      FockVector v = product_state(levels, 5, 5);
      double dev = max_deviation(projector_chain(v, 5), antisymmetrizer_apply(v, 5));
      if (dev > kNormTolerance) return "N=5 sampled chain deviates by " + fmt(dev);
    }
  }
  return std::nullopt;
}

MaybeFailure check_uniqueness(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    FockVector singlet = generalized_singlet(n);
    MaybeFailure failure;
    for_each_assignment(n, n, [&](const std::vector<int>& levels) {
      if (failure) return;
      FockVector w = antisymmetrizer_apply(product_state(levels, n, n), n);
      double outside = w.norm_sq() - std::norm(inner_product(singlet, w));
      if (std::abs(outside) > kNormTolerance)
        failure = "antisymmetrizer image leaves the singlet line by " + fmt(outside);
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

MaybeFailure check_total_antisymmetry(int max_n, bool sample_n5, Rng& rng) {
  for (int n = 2; n <= max_n; ++n) {
    FockVector singlet = generalized_singlet(n);
    MaybeFailure failure;
    for_each_permutation(n, [&](const Permutation& p) {
      if (failure) return;
      FockVector expected = singlet;
      expected *= cplx{static_cast<double>(p.sign()), 0.0};
      double dev = max_deviation(permute_modes(singlet, p), expected);
      if (dev > kNormTolerance)
        failure = "N=" + std::to_string(n) + " permutation breaks antisymmetry by " + fmt(dev);
    });
    if (failure) return failure;
  }
  if (sample_n5) {
    FockVector singlet = generalized_singlet(5);
    std::vector<int> images(5);
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < 50; ++i) {
      // Fisher-Yates with the portable generator.
      for (int k = 4; k > 0; --k)
        std::swap(images[static_cast<std::size_t>(k)],
                  images[static_cast<std::size_t>(rng.next_u64() %
                                                  static_cast<std::uint64_t>(k + 1))]);
      Permutation p(images);
      FockVector expected = singlet;
      expected *= cplx{static_cast<double>(p.sign()), 0.0};
      if (max_deviation(permute_modes(singlet, p), expected) > kNormTolerance)
        return "N=5 sampled permutation breaks antisymmetry";
    }
  }
  return std::nullopt;
}

MaybeFailure check_eigenspace_correctness(int max_m) {
  for (int m = 2; m <= max_m; ++m)
    for (int j = 2; j <= m; ++j) {
      double mu = (j % 2 == 1) ? 1.0 : -1.0;
      MaybeFailure failure;
      for_each_assignment(m, 2, [&](const std::vector<int>& levels) {
        if (failure) return;
        FockVector w = eigenspace_projector_apply(product_state(levels, m, 2), j, m);
        FockVector expected = w;
        expected *= cplx{mu, 0.0};
        double dev = max_deviation(permute_modes(w, cyclic(j, m)), expected);
        if (dev > kNormTolerance)
          failure = "projector image leaves the eigenspace, j=" + std::to_string(j) +
                    " m=" + std::to_string(m) + " (dev " + fmt(dev) + ")";
      });
      if (failure) return failure;
    }
  return std::nullopt;
}

/// Exhaustive law-vs-amplitude consistency on the cyclic classes, and on the
/// transposition embedded in three modes as a non-Fourier instance.
MaybeFailure check_suppression_consistency(bool full) {
  for (int n = 2; n <= 3; ++n) {
    EigenvalueVector lambdas = cyclic_eigenvalues(n);
    ModeUnitary fourier = fourier_matrix(n);
    ModeOccupationList coincidence{std::vector<int>(static_cast<std::size_t>(n), 1)};
    MaybeFailure failure;
    for_each_assignment(n, n, [&](const std::vector<int>& levels) {
      if (failure) return;
      FockVector v = product_state(levels, n, n);
      for (int q = 0; q < n; ++q) {
        cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
        FockVector projected = cyclic_eigenspace_apply(v, mu, n, n);
        if (projected.norm() < 1e-9) continue;
        if (!suppressed_for_class(lambdas, mu, coincidence)) continue;
        double p = output_probability(projected.normalized(), fourier, coincidence);
        if (p > 1e-10) {
          failure = "law-suppressed coincidence has probability " + fmt(p) + " at N=" +
                    std::to_string(n) + ", class " + std::to_string(q);
          return;
        }
      }
    });
    if (failure) return failure;
  }
  if (full) {
    // Transposition of modes 0,1 inside a 3-mode system; the eigenbasis
    // matrix plays the role of the Fourier multiport.
    PermutationEigenbasis basis = permutation_eigenbasis(cyclic(2, 3));
    MaybeFailure failure;
    for_each_assignment(3, 2, [&](const std::vector<int>& levels) {
      if (failure) return;
      FockVector v = product_state(levels, 3, 2);
      for (double mu : {1.0, -1.0}) {
        FockVector projected = cyclic_eigenspace_apply(v, cplx{mu, 0.0}, 2, 3);
        if (projected.norm() < 1e-9) continue;
        FockVector input = projected.normalized();
        for (const ModeOccupationList& s : enumerate_occupations(3, 3)) {
          if (!suppressed_for_class(basis.lambdas, cplx{mu, 0.0}, s)) continue;
          double p = output_probability(input, basis.eigenvectors, s);
          if (p > 1e-10) {
            failure = "general law misses output with probability " + fmt(p);
            return;
          }
        }
      }
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

MaybeFailure check_suppression_phase_stability(Rng& rng) {
  for (int n = 2; n <= 3; ++n) {
    EigenvalueVector lambdas = cyclic_eigenvalues(n);
    ModeUnitary variant = phase_variant(fourier_matrix(n), random_unit_phases(n, rng),
                                        random_unit_phases(n, rng));
    ModeOccupationList coincidence{std::vector<int>(static_cast<std::size_t>(n), 1)};
    MaybeFailure failure;
    for_each_assignment(n, n, [&](const std::vector<int>& levels) {
      if (failure) return;
      FockVector v = product_state(levels, n, n);
      for (int q = 0; q < n; ++q) {
        cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
        FockVector projected = cyclic_eigenspace_apply(v, mu, n, n);
        if (projected.norm() < 1e-9) continue;
        if (!suppressed_for_class(lambdas, mu, coincidence)) continue;
        double p = output_probability(projected.normalized(), variant, coincidence);
        if (p > 1e-10) {
          failure = "verdict unstable under phase variant, N=" + std::to_string(n) +
                    " (probability " + fmt(p) + ")";
          return;
        }
      }
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

MaybeFailure check_weight_conservation(Rng& rng) {
  Ensemble ens = pure(product_state(std::vector<int>{0, 1, 2}, 3, 3));
  std::vector<Eigen::MatrixXcd> noise;
  for (int mode = 0; mode < 3; ++mode) noise.push_back(random_unitary(3, rng));
  ens = apply_local_noise(ens, noise);
  for (int mode = 0; mode < 3; ++mode) {
    ens = depolarize_mode(ens, mode, 3);
    double total = ens.total_weight();
    if (std::abs(total - 1.0) > kNormTolerance)
      return "weights drift to " + fmt(total) + " after depolarizing mode " +
             std::to_string(mode);
  }
  return std::nullopt;
}

MaybeFailure check_rotation_invariance(Rng& rng, int draws) {
  for (int n = 2; n <= 3; ++n) {
    FockVector singlet = generalized_singlet(n);
    for (int i = 0; i < draws; ++i) {
      std::vector<Eigen::MatrixXcd> same(static_cast<std::size_t>(n), random_unitary(n, rng));
      double f = fidelity(apply_level_unitaries(singlet, same), singlet);
      if (std::abs(f - 1.0) > 1e-9)
        return "N=" + std::to_string(n) + " global rotation drops fidelity to " + fmt(f);
    }
  }
  return std::nullopt;
}

MaybeFailure check_depolarize_idempotent(Rng& rng) {
  FockVector shortcut = apply_creation(
      extend_space(singlet_over_levels(2, std::vector<int>{0, 1}, 3), 3, 3), 2, 2);
  Ensemble once = depolarize_mode(pure(shortcut), 2, 3);
  Ensemble twice = depolarize_mode(once, 2, 3);
  ProtocolReport a = run_protocol(once, 3, 3);
  ProtocolReport b = run_protocol(twice, 3, 3);
  if (std::abs(a.success_probability - b.success_probability) > 1e-9)
    return "success probability shifts on the second depolarization";
  if (std::abs(a.fidelity_with_singlet - b.fidelity_with_singlet) > 1e-9)
    return "output fidelity shifts on the second depolarization";
  (void)rng;
  return std::nullopt;
}

MaybeFailure check_oracle_equivalence(Rng& rng, int random_draws) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<Ensemble> inputs;
    inputs.push_back(fully_depolarized(n));
    std::vector<int> levels(static_cast<std::size_t>(n));
    std::iota(levels.begin(), levels.end(), 0);
    inputs.push_back(pure(product_state(levels, n, n)));
    for (int i = 0; i < random_draws; ++i)
      inputs.push_back(pure(random_one_per_mode_state(n, n, rng)));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      double pipeline = run_protocol(inputs[i], n, 2).success_probability;
      double oracle = success_probability_oracle(inputs[i], n);
      if (std::abs(pipeline - oracle) > 1e-9)
        return "pipeline " + fmt(pipeline) + " vs oracle " + fmt(oracle) + " on input " +
               std::to_string(i) + ", N=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

MaybeFailure check_exact_output(int max_n, Rng& rng) {
  for (int n = 2; n <= max_n; ++n) {
    FockVector singlet = generalized_singlet(n);
    std::vector<Ensemble> inputs;
    inputs.push_back(fully_depolarized(n));
    if (n <= 3)
      for (int i = 0; i < 5; ++i) inputs.push_back(pure(random_one_per_mode_state(n, n, rng)));
    for (const Ensemble& input : inputs) {
      ProtocolReport report = run_protocol(input, n, 2);
      if (report.success_probability <= 1e-9) continue;
      if (!report.output) return "missing output despite nonzero success probability";
      for (const Ensemble::Component& comp : report.output->components()) {
        double f = fidelity(singlet, comp.state);
        if (std::abs(f - 1.0) > 1e-9)
          return "surviving component fidelity " + fmt(f) + " at N=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

MaybeFailure check_zero_overlap() {
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> zeros(static_cast<std::size_t>(n), 0);
    ProtocolReport report = run_protocol(pure(product_state(zeros, n, n)), n, 2);
    if (report.success_probability > 1e-10)
      return "symmetric input succeeds with probability " + fmt(report.success_probability);
  }
  FockVector sym = product_state(std::vector<int>{0, 1}, 2, 2) +
                   product_state(std::vector<int>{1, 0}, 2, 2);
  ProtocolReport report = run_protocol(pure(sym.normalized()), 2, 2);
  if (report.success_probability > 1e-10)
    return "symmetrized two-boson input succeeds with probability " +
           fmt(report.success_probability);
  return std::nullopt;
}

MaybeFailure check_robustness(Rng& rng, int draws) {
  for (int n = 2; n <= 3; ++n) {
    ProtocolReport reference = run_protocol(fully_depolarized(n), n, 2);
    std::vector<int> levels(static_cast<std::size_t>(n));
    std::iota(levels.begin(), levels.end(), 0);
    for (int i = 0; i < draws; ++i) {
      std::vector<Eigen::MatrixXcd> noise;
      for (int mode = 0; mode < n; ++mode) noise.push_back(random_unitary(n, rng));
      Ensemble ens = apply_local_noise(pure(product_state(levels, n, n)), noise);
      for (int mode = 0; mode < n; ++mode) ens = depolarize_mode(ens, mode, n);
      ProtocolReport noisy = run_protocol(ens, n, 2);
      if (std::abs(noisy.success_probability - reference.success_probability) > 1e-9)
        return "noise draw " + std::to_string(i) + " shifts success probability by " +
               fmt(noisy.success_probability - reference.success_probability);
      if (std::abs(noisy.fidelity_with_singlet - reference.fidelity_with_singlet) > 1e-9)
        return "noise draw " + std::to_string(i) + " shifts output fidelity";
    }
  }
  return std::nullopt;
}

MaybeFailure check_phase_invariance(Rng& rng, int draws) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<int> levels(static_cast<std::size_t>(n));
    std::iota(levels.begin(), levels.end(), 0);
    std::vector<Ensemble> inputs{fully_depolarized(n), pure(product_state(levels, n, n))};
    for (const Ensemble& input : inputs) {
      ProtocolReport reference = run_protocol(input, n, 2);
      for (int i = 0; i < draws; ++i) {
        std::uint64_t seed = rng.next_u64();
        ProtocolOptions options;
        options.step_unitary = [seed](int j, int m) {
          Rng phase_rng(seed + static_cast<std::uint64_t>(j));
          ModeUnitary variant =
              phase_variant(fourier_matrix(j), random_unit_phases(j, phase_rng),
                            random_unit_phases(j, phase_rng));
          std::vector<int> front(static_cast<std::size_t>(j));
          std::iota(front.begin(), front.end(), 0);
          return embed(variant, front, m);
        };
        ProtocolReport phased = run_protocol(input, n, options);
        if (std::abs(phased.success_probability - reference.success_probability) > 1e-9)
          return "phase draw shifts success probability at N=" + std::to_string(n);
        if (std::abs(phased.fidelity_with_singlet - reference.fidelity_with_singlet) > 1e-9)
          return "phase draw shifts output fidelity at N=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level) {
  bool full = level == VerifyLevel::full;
  Rng rng(kDefaultSeed);
  int draws = full ? 20 : 5;

  std::vector<std::pair<std::string, std::function<MaybeFailure()>>> checks;
  checks.emplace_back("fock-orthonormality", [] { return check_fock_orthonormality(); });
  checks.emplace_back("fock-ladder-normalization", [] { return check_fock_ladder(); });
  checks.emplace_back("fock-prune-idempotence",
                      [&] { return check_fock_prune_idempotence(rng); });
  checks.emplace_back("interferometer-unitarity", [] { return check_interferometer_unitarity(); });
  checks.emplace_back("interferometer-norm-preservation",
                      [&] { return check_norm_preservation(rng, draws); });
  checks.emplace_back("interferometer-composition", [&] { return check_composition(rng, draws); });
  checks.emplace_back("fourier-eigenphase",
                      [&] { return check_fourier_eigenphase(full ? 5 : 3); });
  checks.emplace_back("antisymmetric-invariance",
                      [&] { return check_antisymmetric_invariance(rng, draws, full); });
  checks.emplace_back("symmetry-projector-product",
                      [&] { return check_projector_product(full ? 4 : 3, full, rng); });
  checks.emplace_back("symmetry-uniqueness", [&] { return check_uniqueness(full ? 4 : 3); });
  checks.emplace_back("symmetry-total-antisymmetry",
                      [&] { return check_total_antisymmetry(full ? 4 : 3, full, rng); });
  checks.emplace_back("symmetry-eigenspace",
                      [&] { return check_eigenspace_correctness(full ? 4 : 3); });
  checks.emplace_back("suppression-law-consistency",
                      [&] { return check_suppression_consistency(full); });
  checks.emplace_back("suppression-phase-stability",
                      [&] { return check_suppression_phase_stability(rng); });
  checks.emplace_back("channels-weight-conservation",
                      [&] { return check_weight_conservation(rng); });
  checks.emplace_back("channels-rotation-invariance",
                      [&] { return check_rotation_invariance(rng, draws); });
  checks.emplace_back("channels-depolarize-idempotent",
                      [&] { return check_depolarize_idempotent(rng); });
  checks.emplace_back("protocol-oracle-equivalence",
                      [&] { return check_oracle_equivalence(rng, full ? 50 : 10); });
  checks.emplace_back("protocol-exact-output",
                      [&] { return check_exact_output(full ? 4 : 3, rng); });
  checks.emplace_back("protocol-zero-overlap", [] { return check_zero_overlap(); });
  checks.emplace_back("protocol-robustness",
                      [&] { return check_robustness(rng, full ? 100 : 10); });
  checks.emplace_back("protocol-phase-invariance",
                      [&] { return check_phase_invariance(rng, full ? 10 : 3); });

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (auto& [name, run] : checks) {
    CheckResult result;
    result.name = name;
    try {
      MaybeFailure failure = run();
      result.passed = !failure;
      if (failure) result.detail = *failure;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace multiport

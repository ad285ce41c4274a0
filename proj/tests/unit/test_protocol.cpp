#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "multiport/protocol.hpp"
#include "multiport/random.hpp"
#include "multiport/symmetry.hpp"

using namespace multiport;

namespace {

FockVector shortcut_input() {
  return apply_creation(extend_space(singlet_over_levels(2, std::vector<int>{0, 1}, 3), 3, 3),
                        2, 2);
}

}  // namespace

TEST_CASE("coincidence projection") {
  // post-HOM bunched state has no coincident mass
  FockVector bunched =
      apply_mode_unitary(product_state(std::vector<int>{0, 0}, 2, 2), fourier_matrix(2));
  CoincidenceResult none = coincidence_project(bunched, std::vector<int>{0, 1});
  CHECK(none.probability < 1e-12);
  CHECK_FALSE(none.conditional.has_value());

  FockVector singlet = generalized_singlet(3);
  CoincidenceResult all = coincidence_project(singlet, std::vector<int>{0, 1, 2});
  CHECK(all.probability == doctest::Approx(1.0));
  REQUIRE(all.conditional.has_value());
  CHECK(fidelity(*all.conditional, singlet) == doctest::Approx(1.0));

  FockVector mixed =
      apply_mode_unitary(product_state(std::vector<int>{0, 1}, 2, 2), fourier_matrix(2));
  CoincidenceResult half = coincidence_project(mixed, std::vector<int>{0, 1});
  CHECK(half.probability == doctest::Approx(0.5));
  REQUIRE(half.conditional.has_value());
  CHECK(fidelity(*half.conditional, generalized_singlet(2)) == doctest::Approx(1.0));
}

TEST_CASE("protocol steps on the N=3 shortcut input") {
  FockVector input = shortcut_input();

  CoincidenceResult two = protocol_step(input, 2, 3);
  CHECK(two.probability == doctest::Approx(1.0));
  REQUIRE(two.conditional.has_value());
  // U_2 flips the Bell pair's sign and leaves the spectator alone
  CHECK(inner_product(input, *two.conditional).real() == doctest::Approx(-1.0));

  CoincidenceResult three = protocol_step(input, 3, 3);
  CHECK(three.probability == doctest::Approx(1.0 / 3.0));
  REQUIRE(three.conditional.has_value());
  CHECK(fidelity(*three.conditional, generalized_singlet(3)) == doctest::Approx(1.0));

  CHECK(protocol_step(product_state(std::vector<int>{0, 0}, 2, 2), 2, 2).probability <
        1e-12);
}

TEST_CASE("depolarized input distills the singlet with probability 1/N^N") {
  for (int n : {2, 3}) {
    ProtocolReport report = run_protocol(fully_depolarized(n), n, 2);
    CHECK(report.success_probability ==
          doctest::Approx(std::pow(1.0 / n, n)).epsilon(1e-9));
    CHECK(report.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(report.output.has_value());
    FockVector singlet = generalized_singlet(n);
    for (const Ensemble::Component& c : report.output->components())
      CHECK(fidelity(singlet, c.state) == doctest::Approx(1.0).epsilon(1e-9));
    // step probabilities multiply to the success probability
    double product = 1.0;
    for (const StepStat& s : report.steps) product *= s.probability;
    CHECK(product == doctest::Approx(report.success_probability).epsilon(1e-9));
    CHECK(report.steps.front().j == 2);
    CHECK(report.steps.back().j == n);
  }
}

TEST_CASE("product input |0,...,N-1> succeeds with probability 1/N!") {
  for (int n : {2, 3}) {
    std::vector<int> levels(static_cast<std::size_t>(n));
    std::iota(levels.begin(), levels.end(), 0);
    ProtocolReport report = run_protocol(pure(product_state(levels, n, n)), n, 2);
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    CHECK(report.success_probability == doctest::Approx(1.0 / factorial).epsilon(1e-9));
    CHECK(report.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("N=3 shortcuts skip the beam splitter") {
  ProtocolReport pure_report = run_protocol(pure(shortcut_input()), 3, 3);
  CHECK(pure_report.success_probability == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(pure_report.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));

  Ensemble mixed = depolarize_mode(pure(shortcut_input()), 2, 3);
  ProtocolReport mixed_report = run_protocol(mixed, 3, 3);
  CHECK(mixed_report.success_probability == doctest::Approx(1.0 / 9.0).epsilon(1e-9));
  CHECK(mixed_report.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("success probability oracle") {
  CHECK(success_probability_oracle(fully_depolarized(3), 3) ==
        doctest::Approx(1.0 / 27.0).epsilon(1e-12));
  CHECK(success_probability_oracle(pure(generalized_singlet(3)), 3) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(success_probability_oracle(pure(product_state(std::vector<int>{0, 1, 2}, 3, 3)), 3) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("pipeline equals the overlap oracle on random inputs") {
  Rng rng(kDefaultSeed);
  for (int n : {2, 3})
    for (int draw = 0; draw < 10; ++draw) {
      Ensemble input = pure(random_one_per_mode_state(n, n, rng));
      CHECK(run_protocol(input, n, 2).success_probability ==
            doctest::Approx(success_probability_oracle(input, n)).epsilon(1e-9));
    }
}

TEST_CASE("inputs with zero singlet overlap never pass") {
  CHECK(run_protocol(pure(product_state(std::vector<int>{0, 0}, 2, 2)), 2, 2)
            .success_probability < 1e-10);
  FockVector sym = product_state(std::vector<int>{0, 1}, 2, 2) +
                   product_state(std::vector<int>{1, 0}, 2, 2);
  ProtocolReport report = run_protocol(pure(sym.normalized()), 2, 2);
  CHECK(report.success_probability < 1e-10);
  CHECK_FALSE(report.output.has_value());
}

TEST_CASE("d > N inputs are measured against the antisymmetric subspace") {
  FockVector s02 = singlet_over_levels(2, std::vector<int>{0, 2}, 3);
  ProtocolReport report = run_protocol(pure(s02), 2, 2);
  CHECK(report.success_probability == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));

  Rng rng(kDefaultSeed);
  FockVector mixed_subspace = singlet_over_levels(2, std::vector<int>{0, 1}, 3);
  mixed_subspace *= cplx{0.6, 0.0};
  FockVector part = singlet_over_levels(2, std::vector<int>{1, 2}, 3);
  part *= cplx{0.0, 0.8};
  mixed_subspace += part;
  mixed_subspace = mixed_subspace.normalized();
  ProtocolReport combined = run_protocol(pure(mixed_subspace), 2, 2);
  CHECK(combined.success_probability == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(combined.fidelity_with_singlet == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(success_probability_oracle(pure(mixed_subspace), 2) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("preconditions: one particle per mode and start_j range") {
  FockVector bunched =
      apply_creation(apply_creation(FockVector::vacuum_state(2, 2), 0, 0), 0, 1).normalized();
  CHECK_THROWS_AS(run_protocol(pure(bunched), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(run_protocol(fully_depolarized(2), 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_protocol(fully_depolarized(2), 2, 1), std::invalid_argument);
}

TEST_CASE("parallel evaluation reproduces the serial report exactly") {
  Ensemble input = fully_depolarized(3);
  ProtocolReport serial = run_protocol(input, 3, 2);
  ProtocolOptions options;
  options.parallel = true;
  ProtocolReport parallel = run_protocol(input, 3, options);
  CHECK(parallel.success_probability == serial.success_probability);
  CHECK(parallel.fidelity_with_singlet == serial.fidelity_with_singlet);
  REQUIRE(parallel.steps.size() == serial.steps.size());
  for (std::size_t i = 0; i < serial.steps.size(); ++i)
    CHECK(parallel.steps[i].probability == serial.steps[i].probability);
}

TEST_CASE("random diagonal phases on every port leave the report unchanged") {
  Ensemble input = fully_depolarized(3);
  ProtocolReport reference = run_protocol(input, 3, 2);
  ProtocolOptions options;
  options.step_unitary = [](int j, int m) {
    Rng rng(kDefaultSeed + static_cast<std::uint64_t>(j));
    ModeUnitary variant = phase_variant(fourier_matrix(j), random_unit_phases(j, rng),
                                        random_unit_phases(j, rng));
    std::vector<int> front(static_cast<std::size_t>(j));
    std::iota(front.begin(), front.end(), 0);
    return embed(variant, front, m);
  };
  ProtocolReport phased = run_protocol(input, 3, options);
  CHECK(phased.success_probability ==
        doctest::Approx(reference.success_probability).epsilon(1e-9));
  CHECK(phased.fidelity_with_singlet ==
        doctest::Approx(reference.fidelity_with_singlet).epsilon(1e-9));
}

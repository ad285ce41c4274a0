#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "multiport/protocol.hpp"
#include "multiport/suppression.hpp"

using namespace multiport;

TEST_CASE("mode_assignment expands occupation lists") {
  CHECK(mode_assignment(ModeOccupationList{{1, 1, 1}}) == std::vector<int>{0, 1, 2});
  CHECK(mode_assignment(ModeOccupationList{{2, 0, 1}}) == std::vector<int>{0, 0, 2});
  CHECK(mode_assignment(ModeOccupationList{{0, 3}}) == std::vector<int>{1, 1, 1});
}

TEST_CASE("cyclic eigenvalues match the Fourier eigenvector columns") {
  EigenvalueVector l2 = cyclic_eigenvalues(2);
  CHECK(std::abs(l2[0] - cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(l2[1] - cplx{-1.0, 0.0}) < 1e-12);

  EigenvalueVector l3 = cyclic_eigenvalues(3);
  cplx omega_bar = std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
  CHECK(std::abs(l3[0] - cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(l3[1] - omega_bar) < 1e-12);
  CHECK(std::abs(l3[2] - omega_bar * omega_bar) < 1e-12);

  for (int n = 2; n <= 5; ++n) {
    EigenvalueVector lambdas = cyclic_eigenvalues(n);
    cplx product{1.0, 0.0};
    for (cplx l : lambdas.values()) product *= l;
    double expected = n % 2 == 0 ? -1.0 : 1.0;  // (-1)^(n-1)
    CHECK(std::abs(product - cplx{expected, 0.0}) < 1e-12);
  }
}

TEST_CASE("suppression predicate on the anti-bunching outcome") {
  ModeOccupationList coincidence2{{1, 1}};
  // symmetric input (phi = 0): Hong-Ou-Mandel suppression
  CHECK(suppression_predicate(cyclic_eigenvalues(2), 0.0, coincidence2));
  // antisymmetric input (eigenvalue -1): coincidence allowed
  CHECK_FALSE(suppression_predicate(cyclic_eigenvalues(2), std::numbers::pi, coincidence2));

  ModeOccupationList coincidence3{{1, 1, 1}};
  CHECK_FALSE(suppression_predicate(cyclic_eigenvalues(3), 0.0, coincidence3));

  // the allowed verdict is consistent with the exact Bell-singlet amplitude
  FockVector singlet = generalized_singlet(2);
  CHECK(output_probability(singlet, fourier_matrix(2), coincidence2) ==
        doctest::Approx(1.0));
}

TEST_CASE("law verdicts match exact amplitudes for every cyclic class, N <= 3") {
  for (int n : {2, 3}) {
    EigenvalueVector lambdas = cyclic_eigenvalues(n);
    ModeUnitary fourier = fourier_matrix(n);
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    while (true) {
      FockVector v = product_state(assignment, n, n);
      for (int q = 0; q < n; ++q) {
        cplx mu = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
        FockVector projected = cyclic_eigenspace_apply(v, mu, n, n);
        if (projected.norm() < 1e-9) continue;
        FockVector input = projected.normalized();
        for (const ModeOccupationList& s : enumerate_occupations(n, n)) {
          if (suppressed_for_class(lambdas, mu, s))
            CHECK(output_probability(input, fourier, s) < 1e-10);
        }
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
}

TEST_CASE("permutation eigenbasis reproduces the Fourier multiport") {
  PermutationEigenbasis basis = permutation_eigenbasis(cyclic(3, 3));
  CHECK(basis.eigenvectors.matrix().isApprox(fourier_matrix(3).matrix(), 1e-12));
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(basis.lambdas[k] - cyclic_eigenvalues(3)[k]) < 1e-12);
}

TEST_CASE("permutation eigenbasis diagonalizes a general permutation") {
  Permutation p({2, 0, 1, 4, 3});  // cycles (0 2 1)(3 4)
  PermutationEigenbasis basis = permutation_eigenbasis(p);
  const Eigen::MatrixXcd& a = basis.eigenvectors.matrix();
  CHECK(is_unitary(a));
  Eigen::MatrixXcd pm = Eigen::MatrixXcd::Zero(5, 5);
  for (int i = 0; i < 5; ++i) pm(p(i), i) = 1.0;
  Eigen::VectorXcd lambdas(5);
  for (int i = 0; i < 5; ++i) lambdas(i) = basis.lambdas[i];
  CHECK((pm * a).isApprox(a * lambdas.asDiagonal().toDenseMatrix(), 1e-12));
}

TEST_CASE("antibunch trace and necessary condition") {
  FockVector singlet = generalized_singlet(3);
  CHECK(antibunch_trace(pure(singlet), 3, 3) == doctest::Approx(1.0));
  CHECK(antibunch_allowed(pure(singlet), 3, 3));

  FockVector sym = product_state(std::vector<int>{0, 0}, 2, 2);
  CHECK(antibunch_trace(pure(sym), 2, 2) == doctest::Approx(0.0));
  CHECK_FALSE(antibunch_allowed(pure(sym), 2, 2));

  // Brute-force oracle over the 27 product labels: tr P = (1/3) sum_k fix(pi^k),
  // so tr(rho_dep P) = (3 + 3 + 27) / (3 * 27) = 11/27.
  int fixed_once = 0, fixed_twice = 0;
  for (int l0 = 0; l0 < 3; ++l0)
    for (int l1 = 0; l1 < 3; ++l1)
      for (int l2 = 0; l2 < 3; ++l2) {
        // pi sends mode i to i+1: relabeled assignment (l2, l0, l1)
        if (l2 == l0 && l0 == l1 && l1 == l2) ++fixed_once;
        // pi^2: (l1, l2, l0)
        if (l1 == l0 && l2 == l1 && l0 == l2) ++fixed_twice;
      }
  double expected = (fixed_once + fixed_twice + 27.0) / (3.0 * 27.0);
  CHECK(expected == doctest::Approx(11.0 / 27.0));
  CHECK(antibunch_trace(fully_depolarized(3), 3, 3) == doctest::Approx(expected));
  CHECK(antibunch_allowed(fully_depolarized(3), 3, 3));
}

TEST_CASE("occupation enumeration") {
  std::vector<ModeOccupationList> all = enumerate_occupations(3, 3);
  CHECK(all.size() == 10);
  for (const ModeOccupationList& s : all) CHECK(s.particles() == 3);
  CHECK(all.front().counts == std::vector<int>{0, 0, 3});
  CHECK(all.back().counts == std::vector<int>{3, 0, 0});
}

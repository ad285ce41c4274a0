#include "multiport/suppression.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace multiport {

int ModeOccupationList::particles() const {
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("ModeOccupationList: negative count");
    total += c;
  }
  return total;
}

std::vector<int> mode_assignment(const ModeOccupationList& r) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(r.particles()));
  for (int mode = 0; mode < r.modes(); ++mode)
    for (int k = 0; k < r.counts[static_cast<std::size_t>(mode)]; ++k) d.push_back(mode);
  return d;
}

EigenvalueVector::EigenvalueVector(std::vector<cplx> lambdas) : lambdas_(std::move(lambdas)) {
  for (cplx l : lambdas_)
    if (std::abs(std::abs(l) - 1.0) > kNormTolerance)
      throw std::invalid_argument("EigenvalueVector: eigenvalue is not unit modulus");
}

EigenvalueVector cyclic_eigenvalues(int n) {
  if (n < 2) throw std::invalid_argument("cyclic_eigenvalues: need n >= 2");
  std::vector<cplx> lambdas(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    lambdas[static_cast<std::size_t>(k)] = std::polar(1.0, -2.0 * std::numbers::pi * k / n);
  return EigenvalueVector(std::move(lambdas));
}

bool suppression_predicate(const EigenvalueVector& lambdas, double phi,
                           const ModeOccupationList& s) {
  if (lambdas.size() != s.modes())
    throw std::invalid_argument("suppression_predicate: one eigenvalue per mode required");
  cplx product{1.0, 0.0};
  for (int mode : mode_assignment(s)) product *= lambdas[mode];
  return std::abs(product - std::polar(1.0, phi)) > kPhaseTolerance;
}

bool suppressed_for_class(const EigenvalueVector& lambdas, cplx mu, const ModeOccupationList& s) {
  return suppression_predicate(lambdas, std::arg(std::conj(mu)), s);
}

PermutationEigenbasis permutation_eigenbasis(const Permutation& p) {
  int m = p.size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
  std::vector<cplx> lambdas(static_cast<std::size_t>(m));
  std::vector<bool> visited(static_cast<std::size_t>(m), false);
  for (int start = 0; start < m; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int i = start;
    while (!visited[static_cast<std::size_t>(i)]) {
      visited[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
      i = p(i);
    }
    int len = static_cast<int>(cycle.size());
    double scale = 1.0 / std::sqrt(static_cast<double>(len));
    for (int j = 0; j < len; ++j) {
      int column = cycle[static_cast<std::size_t>(j)];
      for (int t = 0; t < len; ++t) {
        int e = static_cast<int>((static_cast<long long>(t) * j) % len);
        a(cycle[static_cast<std::size_t>(t)], column) =
            std::polar(scale, 2.0 * std::numbers::pi * e / len);
      }
      lambdas[static_cast<std::size_t>(column)] =
          std::polar(1.0, -2.0 * std::numbers::pi * j / len);
    }
  }
  return PermutationEigenbasis{ModeUnitary(std::move(a), "eigenbasis"),
                               EigenvalueVector(std::move(lambdas))};
}

double antibunch_trace(const Ensemble& ens, int j, int m) {
  if (ens.modes() != m) throw std::invalid_argument("antibunch_trace: mode count mismatch");
  double trace = 0.0;
  for (const Ensemble::Component& comp : ens.components())
    trace +=
        comp.weight * inner_product(comp.state, eigenspace_projector_apply(comp.state, j, m)).real();
  return trace;
}

bool antibunch_allowed(const Ensemble& ens, int j, int m) {
  return std::abs(antibunch_trace(ens, j, m)) > kPhaseTolerance;
}

std::vector<ModeOccupationList> enumerate_occupations(int particles, int modes) {
  std::vector<ModeOccupationList> all;
  std::vector<int> current(static_cast<std::size_t>(modes), 0);
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes - 1) {
      current[static_cast<std::size_t>(mode)] = remaining;
      all.push_back(ModeOccupationList{current});
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      current[static_cast<std::size_t>(mode)] = take;
      self(self, mode + 1, remaining - take);
    }
  };
  if (modes >= 1) recurse(recurse, 0, particles);
  return all;
}

double output_probability(const FockVector& v, const ModeUnitary& u,
                          const ModeOccupationList& s) {
  if (s.modes() != v.modes())
    throw std::invalid_argument("output_probability: occupation list mode count mismatch");
  FockVector w = apply_mode_unitary(v, u);
  double probability = 0.0;
  for (const auto& [occ, amp] : w.terms())
    if (occ.mode_occupations(v.modes()) == s.counts) probability += std::norm(amp);
  return probability;
}

}  // namespace multiport

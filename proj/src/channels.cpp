#include "multiport/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "multiport/interferometer.hpp"

namespace multiport {

Ensemble::Ensemble(int modes, int levels) : modes_(modes), levels_(levels) {
  if (modes < 1 || levels < 1)
    throw std::invalid_argument("Ensemble needs at least one mode and one level");
}

double Ensemble::total_weight() const {
  double total = 0.0;
  for (const Component& c : components_) total += c.weight;
  return total;
}

void Ensemble::add(double weight, FockVector state) {
  if (weight <= 0.0) throw std::invalid_argument("Ensemble component weight must be positive");
  if (state.modes() != modes_ || state.levels() != levels_)
    throw std::invalid_argument("Ensemble component lives on a different Fock space");
  if (!state.is_normalized())
    throw std::invalid_argument("Ensemble component state is not normalized");
  components_.push_back(Component{weight, std::move(state)});
}

void Ensemble::validate() const {
  if (components_.empty()) throw std::invalid_argument("Ensemble has no components");
  if (std::abs(total_weight() - 1.0) > kNormTolerance)
    throw std::invalid_argument("Ensemble weights do not sum to 1");
}

Ensemble pure(const FockVector& v) {
  Ensemble ens(v.modes(), v.levels());
  ens.add(1.0, v);
  ens.validate();
  return ens;
}

Ensemble depolarize_mode(const Ensemble& ens, int mode, int level_count) {
  if (level_count != ens.levels())
    throw std::invalid_argument("depolarize_mode: level count mismatch with the ensemble");
  if (mode < 0 || mode >= ens.modes())
    throw std::invalid_argument("depolarize_mode: mode out of range");
  int d = ens.levels();
  Ensemble out(ens.modes(), ens.levels());
  for (const Ensemble::Component& comp : ens.components()) {
    for (const auto& [occ, amp] : comp.state.terms())
      if (occ.mode_count(mode) != 1)
        throw std::invalid_argument(
            "depolarize_mode: a component does not hold exactly one particle in mode " +
            std::to_string(mode));
    // Split by the level the particle currently occupies, then reset it to
    // each level with equal weight.
    for (int level = 0; level < d; ++level) {
      FockVector projected(ens.modes(), ens.levels());
      for (const auto& [occ, amp] : comp.state.terms())
        if (occ.count_at(mode, level) == 1) projected.add_term(occ, amp);
      double mass = projected.norm_sq();
      if (mass <= 1e-15) continue;
      for (int reset = 0; reset < d; ++reset) {
        FockVector replaced(ens.modes(), ens.levels());
        for (const auto& [occ, amp] : projected.terms())
          replaced.add_term(occ.removed(mode, level).added(mode, reset),
                            amp / std::sqrt(mass));
        out.add(comp.weight * mass / d, std::move(replaced));
      }
    }
  }
  out.validate();
  return out;
}

Ensemble fully_depolarized(int n) {
  if (n < 2) throw std::invalid_argument("fully_depolarized: need n >= 2");
  Ensemble out(n, n);
  double count = std::pow(static_cast<double>(n), n);
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  while (true) {
    out.add(1.0 / count, product_state(assignment, n, n));
    int i = n - 1;
    while (i >= 0 && assignment[static_cast<std::size_t>(i)] == n - 1) {
      assignment[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++assignment[static_cast<std::size_t>(i)];
  }
  out.validate();
  return out;
}

FockVector apply_level_unitaries(const FockVector& v, std::span<const Eigen::MatrixXcd> per_mode) {
  if (static_cast<int>(per_mode.size()) != v.modes())
    throw std::invalid_argument("apply_level_unitaries: need one unitary per mode");
  int d = v.levels();
  for (const Eigen::MatrixXcd& u : per_mode) {
    if (u.rows() != d || u.cols() != d)
      throw std::invalid_argument("apply_level_unitaries: unitary must be d x d");
    if (!is_unitary(u))
      throw std::invalid_argument("apply_level_unitaries: matrix is not unitary");
  }
  SubstitutionTable table(static_cast<std::size_t>(v.modes()),
                          std::vector<std::vector<SlotWeight>>(static_cast<std::size_t>(d)));
  for (int mode = 0; mode < v.modes(); ++mode) {
    const Eigen::MatrixXcd& u = per_mode[static_cast<std::size_t>(mode)];
    for (int in = 0; in < d; ++in) {
      auto& targets = table[static_cast<std::size_t>(mode)][static_cast<std::size_t>(in)];
      for (int out = 0; out < d; ++out) {
        cplx c = u(out, in);
        if (std::abs(c) > 1e-14) targets.push_back(SlotWeight{mode, out, c});
      }
    }
  }
  return substitute_creation_operators(v, table);
}

Ensemble apply_local_noise(const Ensemble& ens, std::span<const Eigen::MatrixXcd> per_mode) {
  Ensemble out(ens.modes(), ens.levels());
  for (const Ensemble::Component& comp : ens.components())
    out.add(comp.weight, apply_level_unitaries(comp.state, per_mode));
  out.validate();
  return out;
}

}  // namespace multiport

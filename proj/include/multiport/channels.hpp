#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "multiport/fock.hpp"

namespace multiport {

/// Mixed state as a convex mixture of normalized pure components sharing one
/// Fock space. Weights sum to 1 within 1e-10. Component phases are
/// irrelevant; equality of ensembles is observational, never component-wise.
class Ensemble {
 public:
  struct Component {
    double weight;
    FockVector state;
  };

  Ensemble(int modes, int levels);

  int modes() const { return modes_; }
  int levels() const { return levels_; }
  const std::vector<Component>& components() const { return components_; }
  double total_weight() const;

  /// Appends a component; the state must be normalized and live on the
  /// ensemble's Fock space.
  void add(double weight, FockVector state);

  /// Throws unless weights sum to 1 within tolerance.
  void validate() const;

 private:
  int modes_;
  int levels_;
  std::vector<Component> components_;
};

/// Single-component ensemble; v must be normalized.
Ensemble pure(const FockVector& v);

/// Werner reset of the one particle in `mode`: its internal state is replaced
/// by the maximally mixed state over all level_count levels. Every component
/// must hold exactly one particle in that mode.
Ensemble depolarize_mode(const Ensemble& ens, int mode, int level_count);

/// The n-mode, n-level maximally mixed one-particle-per-mode state: n^n
/// equal-weight product components, one per level assignment.
Ensemble fully_depolarized(int n);

/// Rotates internal levels independently per spatial mode (one d x d unitary
/// per mode); weights and per-mode particle numbers are unchanged.
Ensemble apply_local_noise(const Ensemble& ens, std::span<const Eigen::MatrixXcd> per_mode);

/// Pure-state version of the local level rotation.
FockVector apply_level_unitaries(const FockVector& v, std::span<const Eigen::MatrixXcd> per_mode);

}  // namespace multiport

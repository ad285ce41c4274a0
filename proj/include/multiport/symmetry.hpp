#pragma once

#include <functional>
#include <span>
#include <vector>

#include "multiport/fock.hpp"

namespace multiport {

/// Permutation of spatial modes; images[i] is where mode i is sent.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// +1 or -1 from the cycle structure.
  int sign() const;
  Permutation inverse() const;
  /// Composition convention: (p.after(q))(i) = p(q(i)).
  Permutation after(const Permutation& q) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// The j-cycle 0 -> 1 -> ... -> j-1 -> 0 on the first j of m modes; modes >= j
/// are fixed. Its sign is (-1)^(j-1).
Permutation cyclic(int j, int m);

/// Relabels the spatial modes of every basis label; amplitudes unchanged.
FockVector permute_modes(const FockVector& v, const Permutation& p);

/// Projector onto the (-1)^(j-1) eigenspace of cyclic(j, m):
/// (1/j) sum_{k=1..j} [(-1)^(j-1) pi]^k.
FockVector eigenspace_projector_apply(const FockVector& v, int j, int m);

/// Projector onto the eigenvalue-mu eigenspace of cyclic(j, m); mu must be a
/// j-th root of unity.
FockVector cyclic_eigenspace_apply(const FockVector& v, cplx mu, int j, int m);

/// (1/N!) sum over S_N of sgn(pi) pi, permuting all n modes of v.
FockVector antisymmetrizer_apply(const FockVector& v, int n);

/// The normalized totally antisymmetric state of n bosons with n internal
/// levels, one particle per spatial mode: n! terms with amplitudes
/// +-1/sqrt(n!) signed by permutation parity.
FockVector generalized_singlet(int n);

/// The same construction restricted to n distinct levels chosen out of d.
FockVector singlet_over_levels(int n, std::span<const int> levels, int d);

/// Invokes fn with every permutation of {0..n-1} in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace multiport

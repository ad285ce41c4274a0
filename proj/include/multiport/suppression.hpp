#pragma once

#include <vector>

#include "multiport/channels.hpp"
#include "multiport/interferometer.hpp"
#include "multiport/symmetry.hpp"

namespace multiport {

/// Tolerance for comparing products of unit complex numbers; eigenvalue
/// products are exact roots of unity, so any genuine mismatch is O(1).
inline constexpr double kPhaseTolerance = 1e-9;

/// Particles per spatial mode.
struct ModeOccupationList {
  std::vector<int> counts;

  int modes() const { return static_cast<int>(counts.size()); }
  int particles() const;
};

/// The modes each particle occupies, nondecreasing: mode i repeated counts[i]
/// times.
std::vector<int> mode_assignment(const ModeOccupationList& r);

/// Unit-modulus eigenvalues of an invariance permutation, one per mode slot.
class EigenvalueVector {
 public:
  explicit EigenvalueVector(std::vector<cplx> lambdas);

  int size() const { return static_cast<int>(lambdas_.size()); }
  cplx operator[](int i) const { return lambdas_[static_cast<std::size_t>(i)]; }
  const std::vector<cplx>& values() const { return lambdas_; }

 private:
  std::vector<cplx> lambdas_;
};

/// Eigenvalues of the full n-cycle associated with the Fourier eigenvector
/// columns: lambda_k = w^{-k} for 0-based k, w = exp(2 pi i / n). Their
/// product over all k is (-1)^(n-1).
EigenvalueVector cyclic_eigenvalues(int n);

/// True (output suppressed) iff the eigenvalue product over the output mode
/// assignment differs from e^{i phi}.
///
/// phi is the invariance phase of the input under the INVERSE mode
/// relabeling: a state with permute_modes eigenvalue mu enters with
/// e^{i phi} = conj(mu). For the real phases of the cyclic anti-bunching law
/// the two directions coincide.
bool suppression_predicate(const EigenvalueVector& lambdas, double phi,
                           const ModeOccupationList& s);

/// Convenience wrapper taking the eigenvalue mu of the input class under
/// permute_modes directly.
bool suppressed_for_class(const EigenvalueVector& lambdas, cplx mu, const ModeOccupationList& s);

/// Eigenvector matrix of a mode permutation, one Fourier block per cycle,
/// with the eigenvalue carried by each mode slot. For the full n-cycle this
/// reproduces fourier_matrix(n) and cyclic_eigenvalues(n).
struct PermutationEigenbasis {
  ModeUnitary eigenvectors;
  EigenvalueVector lambdas;
};
PermutationEigenbasis permutation_eigenbasis(const Permutation& p);

/// Tr(rho P) for the (-1)^(j-1) eigenspace projector of cyclic(j, m).
double antibunch_trace(const Ensemble& ens, int j, int m);

/// Necessary anti-bunching condition: Tr(rho P) differs from zero.
bool antibunch_allowed(const Ensemble& ens, int j, int m);

/// All occupation lists of `particles` particles over `modes` modes, in
/// lexicographic order.
std::vector<ModeOccupationList> enumerate_occupations(int particles, int modes);

/// Probability of the output mode occupation s after applying u to v, summed
/// over internal level configurations.
double output_probability(const FockVector& v, const ModeUnitary& u, const ModeOccupationList& s);

}  // namespace multiport

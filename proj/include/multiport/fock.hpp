#pragma once

#include <compare>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace multiport {

using cplx = std::complex<double>;

/// Amplitudes with modulus below this are dropped after every operation.
inline constexpr double kPruneTolerance = 1e-12;

/// Tolerance for norm and probability assertions (two orders above pruning,
/// so pruning never trips an assertion).
inline constexpr double kNormTolerance = 1e-10;

/// One Fock basis label: a multiset of occupied (spatial mode, internal level)
/// slots. Entries are kept sorted lexicographically by (mode, level) and
/// always carry a positive count, so equality, ordering and hashing are
/// deterministic.
class OccupationState {
 public:
  struct Entry {
    int mode;
    int level;
    int count;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  OccupationState() = default;
  /// Builds from entries in any order; rejects duplicates and counts < 1.
  explicit OccupationState(std::vector<Entry> entries);

  static OccupationState vacuum() { return {}; }

  int total_particles() const;
  int count_at(int mode, int level) const;
  /// Particles in one spatial mode, summed over internal levels.
  int mode_count(int mode) const;
  /// Per-mode particle counts (r_0, ..., r_{modes-1}).
  std::vector<int> mode_occupations(int modes) const;

  /// Copy with one more particle at (mode, level).
  OccupationState added(int mode, int level) const;
  /// Copy with one particle removed at (mode, level); the slot must be occupied.
  OccupationState removed(int mode, int level) const;
  /// Copy with spatial modes relabeled mode -> images[mode].
  OccupationState modes_relabeled(std::span<const int> images) const;

  /// Product of count! over all occupied slots.
  double occupancy_factorial() const;

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::string str() const;

  friend auto operator<=>(const OccupationState&, const OccupationState&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Sparse complex-amplitude expansion over OccupationState labels.
///
/// All stored labels live on the same number of spatial modes and internal
/// levels and carry the same total particle number. Vectors are values:
/// operations return new vectors and never share mutable state.
class FockVector {
 public:
  FockVector(int modes, int levels);

  /// The empty-counts label with amplitude 1.
  static FockVector vacuum_state(int modes, int levels);

  int modes() const { return modes_; }
  int levels() const { return levels_; }
  /// Particle number shared by all stored labels; -1 for the zero vector.
  int particles() const;
  bool is_zero() const { return terms_.empty(); }

  const std::map<OccupationState, cplx>& terms() const { return terms_; }
  cplx amplitude(const OccupationState& occ) const;

  /// Accumulates amplitude onto a label, validating mode/level ranges and
  /// particle-number consistency.
  void add_term(const OccupationState& occ, cplx amplitude);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(cplx factor);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(cplx factor, FockVector v) { return v *= factor; }

  double norm_sq() const;
  double norm() const;
  bool is_normalized(double tol = kNormTolerance) const;
  FockVector normalized() const;

  /// Drops amplitudes with modulus below tol.
  void prune(double tol = kPruneTolerance);

  std::string str() const;

 private:
  int modes_;
  int levels_;
  std::map<OccupationState, cplx> terms_;
};

/// Basis vector |l_0, ..., l_{m-1}> with one particle per mode.
FockVector product_state(std::span<const int> levels, int modes, int level_count);

/// Bosonic ladder action: a term with count n at (mode, level) maps to count
/// n+1 with amplitude multiplied by sqrt(n+1).
FockVector apply_creation(const FockVector& v, int mode, int level);

/// Same amplitudes on a widened Fock space (extra empty modes and/or levels).
FockVector extend_space(const FockVector& v, int modes, int levels);

/// <a|b> in the orthonormal occupation basis.
cplx inner_product(const FockVector& a, const FockVector& b);

/// |<a|b>|^2 for normalized a, b; invariant under global phases.
double fidelity(const FockVector& a, const FockVector& b);

/// Weighted one-particle substitution targets, indexed [mode][level].
struct SlotWeight {
  int mode;
  int level;
  cplx coeff;
};
using SubstitutionTable = std::vector<std::vector<std::vector<SlotWeight>>>;

/// Rewrites v by replacing every creation operator a+_{mode,level} with the
/// weighted sum of creation operators listed in table[mode][level] and
/// re-expanding into the occupation basis with ladder normalization.
FockVector substitute_creation_operators(const FockVector& v, const SubstitutionTable& table);

}  // namespace multiport

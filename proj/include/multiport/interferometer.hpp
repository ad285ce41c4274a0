#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>

#include "multiport/fock.hpp"

namespace multiport {

/// Max-norm tolerance for the unitarity check at construction.
inline constexpr double kUnitarityTolerance = 1e-10;

bool is_unitary(const Eigen::MatrixXcd& m, double tol = kUnitarityTolerance);

/// Complex square matrix acting on spatial modes only; internal levels are
/// untouched. Row index = output mode, column index = input mode.
class ModeUnitary {
 public:
  explicit ModeUnitary(Eigen::MatrixXcd matrix, std::string label = {});

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  cplx entry(int out_mode, int in_mode) const { return matrix_(out_mode, in_mode); }

 private:
  Eigen::MatrixXcd matrix_;
  std::string label_;
};

ModeUnitary identity_unitary(int n);

/// Fourier multiport: entry (k, l) = w^{kl}/sqrt(n) with w = exp(2 pi i / n),
/// 0-based indices.
ModeUnitary fourier_matrix(int n);

/// Identity outside the listed modes, u on them in the given order.
ModeUnitary embed(const ModeUnitary& u, std::span<const int> modes, int total_modes);

/// diag(d_out) * u * diag(d_in); all phases must be unit modulus.
ModeUnitary phase_variant(const ModeUnitary& u, std::span<const cplx> d_in,
                          std::span<const cplx> d_out);

/// Matrix product second * first (apply `first`, then `second`).
ModeUnitary compose(const ModeUnitary& second, const ModeUnitary& first);

/// Transforms v by substituting each input-mode creation operator with the
/// u-weighted superposition of output-mode operators and re-expanding.
FockVector apply_mode_unitary(const FockVector& v, const ModeUnitary& u);

}  // namespace multiport

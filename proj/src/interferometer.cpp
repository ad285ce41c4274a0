#include "multiport/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace multiport {

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  Eigen::MatrixXcd delta = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
  if (!is_unitary(matrix_))
    throw std::invalid_argument("ModeUnitary: matrix is not unitary within tolerance" +
                                (label_.empty() ? "" : " (" + label_ + ")"));
}

ModeUnitary identity_unitary(int n) {
  if (n < 1) throw std::invalid_argument("identity_unitary: need n >= 1");
  return ModeUnitary(Eigen::MatrixXcd::Identity(n, n), "identity");
}

ModeUnitary fourier_matrix(int n) {
  if (n < 1) throw std::invalid_argument("fourier_matrix: need n >= 1");
  Eigen::MatrixXcd m(n, n);
  double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      // w^{kl} evaluated with the exponent reduced mod n to keep phases exact
      // roots of unity at double precision.
      int e = static_cast<int>((static_cast<long long>(k) * l) % n);
      m(k, l) = std::polar(scale, 2.0 * std::numbers::pi * e / n);
    }
  return ModeUnitary(std::move(m), "fourier-" + std::to_string(n));
}

ModeUnitary embed(const ModeUnitary& u, std::span<const int> modes, int total_modes) {
  if (static_cast<int>(modes.size()) != u.dim())
    throw std::invalid_argument("embed: subset size must match the unitary dimension");
  std::vector<bool> seen(static_cast<std::size_t>(total_modes), false);
  for (int mode : modes) {
    if (mode < 0 || mode >= total_modes)
      throw std::invalid_argument("embed: mode index out of range");
    if (seen[static_cast<std::size_t>(mode)])
      throw std::invalid_argument("embed: duplicate mode index");
    seen[static_cast<std::size_t>(mode)] = true;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(total_modes, total_modes);
  for (int r = 0; r < u.dim(); ++r)
    for (int c = 0; c < u.dim(); ++c)
      m(modes[static_cast<std::size_t>(r)], modes[static_cast<std::size_t>(c)]) = u.entry(r, c);
  return ModeUnitary(std::move(m), u.label().empty() ? "embedded" : u.label() + "-embedded");
}

ModeUnitary phase_variant(const ModeUnitary& u, std::span<const cplx> d_in,
                          std::span<const cplx> d_out) {
  if (static_cast<int>(d_in.size()) != u.dim() || static_cast<int>(d_out.size()) != u.dim())
    throw std::invalid_argument("phase_variant: need one phase per mode on each side");
  for (cplx p : d_in)
    if (std::abs(std::abs(p) - 1.0) > kUnitarityTolerance)
      throw std::invalid_argument("phase_variant: input phase is not unit modulus");
  for (cplx p : d_out)
    if (std::abs(std::abs(p) - 1.0) > kUnitarityTolerance)
      throw std::invalid_argument("phase_variant: output phase is not unit modulus");
  Eigen::MatrixXcd m = u.matrix();
  for (int r = 0; r < u.dim(); ++r)
    for (int c = 0; c < u.dim(); ++c)
      m(r, c) *= d_out[static_cast<std::size_t>(r)] * d_in[static_cast<std::size_t>(c)];
  return ModeUnitary(std::move(m), u.label().empty() ? "phased" : u.label() + "-phased");
}

ModeUnitary compose(const ModeUnitary& second, const ModeUnitary& first) {
  if (second.dim() != first.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  return ModeUnitary(second.matrix() * first.matrix());
}

FockVector apply_mode_unitary(const FockVector& v, const ModeUnitary& u) {
  if (u.dim() != v.modes())
    throw std::invalid_argument("apply_mode_unitary: unitary dimension must match mode count");
  int m = v.modes();
  int d = v.levels();
  SubstitutionTable table(static_cast<std::size_t>(m),
                          std::vector<std::vector<SlotWeight>>(static_cast<std::size_t>(d)));
  for (int in = 0; in < m; ++in) {
    std::vector<SlotWeight> column;
    for (int out = 0; out < m; ++out) {
      cplx c = u.entry(out, in);
      if (std::abs(c) > 1e-14) column.push_back(SlotWeight{out, 0, c});
    }
    for (int level = 0; level < d; ++level) {
      auto& targets = table[static_cast<std::size_t>(in)][static_cast<std::size_t>(level)];
      targets = column;
      for (SlotWeight& t : targets) t.level = level;
    }
  }
  return substitute_creation_operators(v, table);
}

}  // namespace multiport

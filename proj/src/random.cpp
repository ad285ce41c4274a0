#include "multiport/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace multiport {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_unitary: need n >= 1");
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.gaussian_cplx();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    cplx diag = r(c, c);
    double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  return q;
}

std::vector<cplx> random_unit_phases(int n, Rng& rng) {
  std::vector<cplx> phases(static_cast<std::size_t>(n));
  for (cplx& p : phases) p = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  return phases;
}

FockVector random_one_per_mode_state(int n, int d, Rng& rng) {
  FockVector v(n, d);
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  while (true) {
    OccupationState occ;
    for (int mode = 0; mode < n; ++mode)
      occ = occ.added(mode, assignment[static_cast<std::size_t>(mode)]);
    v.add_term(occ, rng.gaussian_cplx());
    int i = n - 1;
    while (i >= 0 && assignment[static_cast<std::size_t>(i)] == d - 1) {
      assignment[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++assignment[static_cast<std::size_t>(i)];
  }
  return v.normalized();
}

}  // namespace multiport

#include "multiport/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace multiport {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(image)])
      throw std::invalid_argument("Permutation: images are not a bijection on [0, n)");
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    std::size_t i = start;
    while (!visited[i]) {
      visited[i] = true;
      i = static_cast<std::size_t>(images_[i]);
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& q) const {
  if (size() != q.size()) throw std::invalid_argument("Permutation composition size mismatch");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[i] = images_[static_cast<std::size_t>(q.images_[i])];
  return Permutation(std::move(images));
}

Permutation cyclic(int j, int m) {
  if (j < 2 || j > m) throw std::invalid_argument("cyclic: need 2 <= j <= m");
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  for (int i = 0; i < j; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % j;
  return Permutation(std::move(images));
}

FockVector permute_modes(const FockVector& v, const Permutation& p) {
  if (p.size() != v.modes())
    throw std::invalid_argument("permute_modes: permutation size must match mode count");
  FockVector out(v.modes(), v.levels());
  for (const auto& [occ, amp] : v.terms()) out.add_term(occ.modes_relabeled(p.images()), amp);
  return out;
}

FockVector cyclic_eigenspace_apply(const FockVector& v, cplx mu, int j, int m) {
  if (m != v.modes())
    throw std::invalid_argument("cyclic_eigenspace_apply: mode count mismatch");
  if (std::abs(std::pow(mu, j) - cplx{1.0, 0.0}) > 1e-9)
    throw std::invalid_argument("cyclic_eigenspace_apply: eigenvalue is not a j-th root of unity");
  Permutation pi = cyclic(j, m);
  FockVector acc(v.modes(), v.levels());
  FockVector w = v;
  for (int k = 1; k <= j; ++k) {
    w = permute_modes(w, pi);
    w *= std::conj(mu);
    acc += w;
  }
  acc *= cplx{1.0 / j, 0.0};
  acc.prune();
  return acc;
}

FockVector eigenspace_projector_apply(const FockVector& v, int j, int m) {
  double mu = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^(j-1)
  return cyclic_eigenspace_apply(v, cplx{mu, 0.0}, j, m);
}

FockVector antisymmetrizer_apply(const FockVector& v, int n) {
  if (n != v.modes())
    throw std::invalid_argument("antisymmetrizer_apply: v must have exactly n modes");
  FockVector acc(v.modes(), v.levels());
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  for_each_permutation(n, [&](const Permutation& p) {
    FockVector w = permute_modes(v, p);
    w *= cplx{static_cast<double>(p.sign()), 0.0};
    acc += w;
  });
  acc *= cplx{1.0 / factorial, 0.0};
  acc.prune();
  return acc;
}

FockVector generalized_singlet(int n) {
  if (n < 2) throw std::invalid_argument("generalized_singlet: need n >= 2");
  std::vector<int> levels(static_cast<std::size_t>(n));
  std::iota(levels.begin(), levels.end(), 0);
  return singlet_over_levels(n, levels, n);
}

FockVector singlet_over_levels(int n, std::span<const int> levels, int d) {
  if (n < 2) throw std::invalid_argument("singlet_over_levels: need n >= 2");
  if (static_cast<int>(levels.size()) != n)
    throw std::invalid_argument("singlet_over_levels: need exactly n levels");
  std::vector<int> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= d)
      throw std::invalid_argument("singlet_over_levels: level out of range [0, d)");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("singlet_over_levels: levels must be distinct");
  }
  FockVector v(n, d);
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  double amp = 1.0 / std::sqrt(factorial);
  for_each_permutation(n, [&](const Permutation& p) {
    OccupationState occ;
    for (int mode = 0; mode < n; ++mode)
      occ = occ.added(mode, sorted[static_cast<std::size_t>(p(mode))]);
    v.add_term(occ, cplx{p.sign() * amp, 0.0});
  });
  return v;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace multiport

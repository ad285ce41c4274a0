#include "multiport/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace multiport {

namespace {

void check_slot(int mode, int level, int modes, int levels, const char* what) {
  if (mode < 0 || mode >= modes)
    throw std::invalid_argument(std::string(what) + ": mode " + std::to_string(mode) +
                                " out of range [0, " + std::to_string(modes) + ")");
  if (level < 0 || level >= levels)
    throw std::invalid_argument(std::string(what) + ": level " + std::to_string(level) +
                                " out of range [0, " + std::to_string(levels) + ")");
}

}  // namespace

OccupationState::OccupationState(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].count < 1)
      throw std::invalid_argument("occupation entry with count < 1");
    if (i > 0 && entries_[i - 1].mode == entries_[i].mode &&
        entries_[i - 1].level == entries_[i].level)
      throw std::invalid_argument("duplicate occupation entry for one (mode, level) slot");
  }
}

int OccupationState::total_particles() const {
  int total = 0;
  for (const Entry& e : entries_) total += e.count;
  return total;
}

int OccupationState::count_at(int mode, int level) const {
  for (const Entry& e : entries_) {
    if (e.mode == mode && e.level == level) return e.count;
    if (e.mode > mode || (e.mode == mode && e.level > level)) break;
  }
  return 0;
}

int OccupationState::mode_count(int mode) const {
  int total = 0;
  for (const Entry& e : entries_)
    if (e.mode == mode) total += e.count;
  return total;
}

std::vector<int> OccupationState::mode_occupations(int modes) const {
  std::vector<int> r(static_cast<std::size_t>(modes), 0);
  for (const Entry& e : entries_) r.at(static_cast<std::size_t>(e.mode)) += e.count;
  return r;
}

OccupationState OccupationState::added(int mode, int level) const {
  OccupationState out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(),
                             Entry{mode, level, 0},
                             [](const Entry& a, const Entry& b) {
                               return std::pair(a.mode, a.level) < std::pair(b.mode, b.level);
                             });
  if (it != out.entries_.end() && it->mode == mode && it->level == level)
    ++it->count;
  else
    out.entries_.insert(it, Entry{mode, level, 1});
  return out;
}

OccupationState OccupationState::removed(int mode, int level) const {
  OccupationState out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(),
                             Entry{mode, level, 0},
                             [](const Entry& a, const Entry& b) {
                               return std::pair(a.mode, a.level) < std::pair(b.mode, b.level);
                             });
  if (it == out.entries_.end() || it->mode != mode || it->level != level)
    throw std::invalid_argument("removed(): slot (" + std::to_string(mode) + ", " +
                                std::to_string(level) + ") is not occupied");
  if (--it->count == 0) out.entries_.erase(it);
  return out;
}

OccupationState OccupationState::modes_relabeled(std::span<const int> images) const {
  std::vector<Entry> relabeled = entries_;
  for (Entry& e : relabeled) e.mode = images[static_cast<std::size_t>(e.mode)];
  std::sort(relabeled.begin(), relabeled.end());
  OccupationState out;
  out.entries_ = std::move(relabeled);
  return out;
}

double OccupationState::occupancy_factorial() const {
  double product = 1.0;
  for (const Entry& e : entries_)
    for (int k = 2; k <= e.count; ++k) product *= k;
  return product;
}

std::string OccupationState::str() const {
  if (entries_.empty()) return "vac";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << entries_[i].mode << ':' << entries_[i].level;
    if (entries_[i].count > 1) os << 'x' << entries_[i].count;
  }
  return os.str();
}

FockVector::FockVector(int modes, int levels) : modes_(modes), levels_(levels) {
  if (modes < 1 || levels < 1)
    throw std::invalid_argument("FockVector needs at least one mode and one level");
}

FockVector FockVector::vacuum_state(int modes, int levels) {
  FockVector v(modes, levels);
  v.add_term(OccupationState::vacuum(), 1.0);
  return v;
}

int FockVector::particles() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total_particles();
}

cplx FockVector::amplitude(const OccupationState& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? cplx{0.0, 0.0} : it->second;
}

void FockVector::add_term(const OccupationState& occ, cplx amplitude) {
  for (const OccupationState::Entry& e : occ.entries())
    check_slot(e.mode, e.level, modes_, levels_, "add_term");
  if (!terms_.empty() && occ.total_particles() != particles())
    throw std::invalid_argument("add_term: mixed particle numbers in one vector");
  terms_[occ] += amplitude;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.modes_ != modes_ || other.levels_ != levels_)
    throw std::invalid_argument("vector sum across different Fock spaces");
  for (const auto& [occ, amp] : other.terms_) add_term(occ, amp);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.modes_ != modes_ || other.levels_ != levels_)
    throw std::invalid_argument("vector difference across different Fock spaces");
  for (const auto& [occ, amp] : other.terms_) add_term(occ, -amp);
  return *this;
}

FockVector& FockVector::operator*=(cplx factor) {
  for (auto& [occ, amp] : terms_) amp *= factor;
  return *this;
}

double FockVector::norm_sq() const {
  double total = 0.0;
  for (const auto& [occ, amp] : terms_) total += std::norm(amp);
  return total;
}

double FockVector::norm() const { return std::sqrt(norm_sq()); }

bool FockVector::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

FockVector FockVector::normalized() const {
  double n = norm();
  if (n < kPruneTolerance) throw std::invalid_argument("cannot normalize the zero vector");
  FockVector out = *this;
  out *= cplx{1.0 / n, 0.0};
  out.prune();
  return out;
}

void FockVector::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::string FockVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [occ, amp] : terms_) {
    if (!first) os << " + ";
    os << '(' << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)|"
       << occ.str() << '>';
    first = false;
  }
  return first ? std::string("0") : os.str();
}

FockVector product_state(std::span<const int> levels, int modes, int level_count) {
  if (static_cast<int>(levels.size()) != modes)
    throw std::invalid_argument("product_state: need one level per mode");
  FockVector v(modes, level_count);
  OccupationState occ;
  for (int mode = 0; mode < modes; ++mode) {
    check_slot(mode, levels[static_cast<std::size_t>(mode)], modes, level_count, "product_state");
    occ = occ.added(mode, levels[static_cast<std::size_t>(mode)]);
  }
  v.add_term(occ, 1.0);
  return v;
}

FockVector apply_creation(const FockVector& v, int mode, int level) {
  check_slot(mode, level, v.modes(), v.levels(), "apply_creation");
  FockVector out(v.modes(), v.levels());
  for (const auto& [occ, amp] : v.terms()) {
    int n = occ.count_at(mode, level);
    out.add_term(occ.added(mode, level), amp * std::sqrt(static_cast<double>(n + 1)));
  }
  out.prune();
  return out;
}

FockVector extend_space(const FockVector& v, int modes, int levels) {
  if (modes < v.modes() || levels < v.levels())
    throw std::invalid_argument("extend_space cannot shrink a Fock space");
  FockVector out(modes, levels);
  for (const auto& [occ, amp] : v.terms()) out.add_term(occ, amp);
  return out;
}

cplx inner_product(const FockVector& a, const FockVector& b) {
  if (a.modes() != b.modes() || a.levels() != b.levels())
    throw std::invalid_argument("inner_product across different Fock spaces");
  if (!a.is_zero() && !b.is_zero() && a.particles() != b.particles())
    throw std::invalid_argument("inner_product across different particle numbers");
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  bool small_is_a = &small == &a;
  cplx total{0.0, 0.0};
  for (const auto& [occ, amp] : small.terms()) {
    cplx other = large.amplitude(occ);
    total += small_is_a ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return total;
}

double fidelity(const FockVector& a, const FockVector& b) {
  if (!a.is_normalized() || !b.is_normalized())
    throw std::invalid_argument("fidelity requires normalized states");
  return std::norm(inner_product(a, b));
}

FockVector substitute_creation_operators(const FockVector& v, const SubstitutionTable& table) {
  FockVector out(v.modes(), v.levels());
  for (const auto& [occ, amp] : v.terms()) {
    // |occ> = (prod count!)^(-1/2) * (product of creation operators) |0>,
    // so seed the expansion with the compensating factor and rebuild the
    // ladder normalization one particle at a time.
    std::map<OccupationState, cplx> partial{
        {OccupationState::vacuum(), amp / std::sqrt(occ.occupancy_factorial())}};
    for (const OccupationState::Entry& e : occ.entries()) {
      const auto& targets = table.at(static_cast<std::size_t>(e.mode))
                                .at(static_cast<std::size_t>(e.level));
      for (int rep = 0; rep < e.count; ++rep) {
        std::map<OccupationState, cplx> next;
        for (const auto& [state, a] : partial) {
          for (const SlotWeight& t : targets) {
            double ladder = std::sqrt(static_cast<double>(state.count_at(t.mode, t.level) + 1));
            next[state.added(t.mode, t.level)] += a * t.coeff * ladder;
          }
        }
        partial = std::move(next);
      }
    }
    for (const auto& [state, a] : partial) out.add_term(state, a);
  }
  out.prune();
  return out;
}

}  // namespace multiport

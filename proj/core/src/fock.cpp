#include "hublat/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace hublat {

namespace {

// Occupation-lexicographic comparison of two sorted position lists:
// the state with fewer particles at the first differing site comes
// first (ascending occupation-vector order).
bool occ_less(const int* a, int na, const int* b, int nb) {
  int ia = 0, ib = 0;
  while (ia < na && ib < nb) {
    int s = std::min(a[ia], b[ib]);
    int ca = 0, cb = 0;
    while (ia < na && a[ia] == s) ++ca, ++ia;
    while (ib < nb && b[ib] == s) ++cb, ++ib;
    if (ca != cb) return ca < cb;
  }
  return false;  // equal content, or one exhausted (same totals assumed)
}

// Combined mode position list (site-major, up before down) of a
// fermionic state, sorted ascending.
std::vector<int> modes_of(const FockState& s) {
  std::vector<int> m;
  for (int i = 0; i < s.n_up; ++i) m.push_back(2 * s.up[i]);
  for (int i = 0; i < s.n_down; ++i) m.push_back(2 * s.down[i] + 1);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

FockState FockState::bosons(std::initializer_list<int> sites) {
  FockState s;
  if (sites.size() > 3) throw std::invalid_argument("at most 3 bosons");
  for (int p : sites) s.boson[s.n_boson++] = p;
  std::sort(s.boson.begin(), s.boson.begin() + s.n_boson);
  return s;
}

FockState FockState::fermions(std::initializer_list<int> up_sites,
                              std::initializer_list<int> down_sites) {
  FockState s;
  if (up_sites.size() > 3 || down_sites.size() > 3)
    throw std::invalid_argument("at most 3 fermions per spin");
  for (int p : up_sites) s.up[s.n_up++] = p;
  for (int p : down_sites) s.down[s.n_down++] = p;
  std::sort(s.up.begin(), s.up.begin() + s.n_up);
  std::sort(s.down.begin(), s.down.begin() + s.n_down);
  for (int i = 1; i < s.n_up; ++i)
    if (s.up[i] == s.up[i - 1]) throw std::invalid_argument("doubly occupied mode");
  for (int i = 1; i < s.n_down; ++i)
    if (s.down[i] == s.down[i - 1]) throw std::invalid_argument("doubly occupied mode");
  return s;
}

int FockState::occ(int site) const {
  int c = 0;
  for (int i = 0; i < n_boson; ++i) c += (boson[i] == site);
  return c;
}

int FockState::occ(int site, Spin sp) const {
  const auto& arr = sp == Spin::up ? up : down;
  int n = sp == Spin::up ? n_up : n_down;
  for (int i = 0; i < n; ++i)
    if (arr[i] == site) return 1;
  return 0;
}

int FockState::total_occ(int site) const {
  if (n_boson > 0) return occ(site);
  return occ(site, Spin::up) + occ(site, Spin::down);
}

FockBasis::FockBasis(const LatticeSpec& lattice, ParticleContent content)
    : n_sites_(lattice.n_sites), content_(content) {
  lattice.validate();
  const int n = content.total();
  if (n < 1 || n > 3)
    throw std::invalid_argument("particle number must be in [1, 3]");
  if (content.statistics == Statistics::fermion) {
    if (content.n_up < 0 || content.n_down < 0)
      throw std::invalid_argument("negative spin count");
    if (content.n_up > n_sites_ || content.n_down > n_sites_)
      throw std::invalid_argument(
          "fermionic capacity exceeded: more than one particle per site per spin");
  }

  if (content.statistics == Statistics::boson) {
    // All multisets of size n over the sites.
    const int N = n_sites_;
    if (content.n_bosons == 1) {
      for (int a = 0; a < N; ++a) states_.push_back(FockState::bosons({a}));
    } else if (content.n_bosons == 2) {
      for (int a = 0; a < N; ++a)
        for (int b = a; b < N; ++b) states_.push_back(FockState::bosons({a, b}));
    } else {
      for (int a = 0; a < N; ++a)
        for (int b = a; b < N; ++b)
          for (int c = b; c < N; ++c)
            states_.push_back(FockState::bosons({a, b, c}));
    }
    std::sort(states_.begin(), states_.end(), [](const FockState& x, const FockState& y) {
      return occ_less(x.boson.data(), x.n_boson, y.boson.data(), y.n_boson);
    });
  } else {
    std::vector<std::vector<int>> ups, downs;
    auto combos = [&](int k) {
      std::vector<std::vector<int>> out;
      const int N = n_sites_;
      if (k == 0) {
        out.push_back({});
      } else if (k == 1) {
        for (int a = 0; a < N; ++a) out.push_back({a});
      } else if (k == 2) {
        for (int a = 0; a < N; ++a)
          for (int b = a + 1; b < N; ++b) out.push_back({a, b});
      } else {
        for (int a = 0; a < N; ++a)
          for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) out.push_back({a, b, c});
      }
      return out;
    };
    ups = combos(content.n_up);
    downs = combos(content.n_down);
    for (const auto& u : ups)
      for (const auto& d : downs) {
        FockState s;
        for (int p : u) s.up[s.n_up++] = p;
        for (int p : d) s.down[s.n_down++] = p;
        states_.push_back(s);
      }
    std::sort(states_.begin(), states_.end(), [](const FockState& x, const FockState& y) {
      auto mx = modes_of(x), my = modes_of(y);
      return occ_less(mx.data(), static_cast<int>(mx.size()), my.data(),
                      static_cast<int>(my.size()));
    });
  }

  index_.reserve(states_.size() * 2);
  for (int i = 0; i < static_cast<int>(states_.size()); ++i)
    index_.emplace(key(states_[i]), i);
  if (index_.size() != states_.size())
    throw std::logic_error("duplicate states in basis enumeration");
}

std::uint64_t FockBasis::key(const FockState& s) const {
  const std::uint64_t m = static_cast<std::uint64_t>(2 * n_sites_ + 1);
  std::uint64_t k = 0;
  if (content_.statistics == Statistics::boson) {
    for (int i = 0; i < 3; ++i)
      k = k * m + static_cast<std::uint64_t>(i < s.n_boson ? s.boson[i] + 1 : 0);
  } else {
    auto modes = modes_of(s);
    for (int i = 0; i < 3; ++i)
      k = k * m +
          static_cast<std::uint64_t>(i < static_cast<int>(modes.size()) ? modes[i] + 1 : 0);
  }
  return k;
}

int FockBasis::find(const FockState& s) const {
  auto it = index_.find(key(s));
  return it == index_.end() ? -1 : it->second;
}

int FockBasis::index(const FockState& s) const {
  int i = find(s);
  if (i < 0) throw std::out_of_range("state not in basis");
  return i;
}

}  // namespace hublat

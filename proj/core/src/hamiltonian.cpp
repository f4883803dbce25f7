#include "hublat/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace hublat {

namespace {

// Hop one boson from `src` to `dst`; returns the target state and the
// sqrt(n_src) sqrt(n_dst + 1) amplitude factor, or 0 if src is empty.
double boson_hop(const FockState& s, int src, int dst, FockState* out) {
  const int n_src = s.occ(src);
  if (n_src == 0) return 0.0;
  *out = s;
  for (int i = 0; i < out->n_boson; ++i)
    if (out->boson[i] == src) {
      out->boson[i] = dst;
      break;
    }
  std::sort(out->boson.begin(), out->boson.begin() + out->n_boson);
  const int n_dst = s.occ(dst) - (src == dst ? 1 : 0);
  return std::sqrt(double(n_src)) * std::sqrt(double(n_dst + 1));
}

// Hop one fermion of spin sp from src to dst, with the sign from the
// site-major up-before-down mode ordering. Returns 0 on Pauli blocking.
double fermion_hop(const FockState& s, int src, int dst, Spin sp, FockState* out) {
  if (s.occ(src, sp) == 0 || s.occ(dst, sp) == 1) return 0.0;
  const int m_src = 2 * src + (sp == Spin::up ? 0 : 1);
  const int m_dst = 2 * dst + (sp == Spin::up ? 0 : 1);
  auto occupied_below = [&](const FockState& st, int mode) {
    int c = 0;
    for (int i = 0; i < st.n_up; ++i) c += (2 * st.up[i] < mode);
    for (int i = 0; i < st.n_down; ++i) c += (2 * st.down[i] + 1 < mode);
    return c;
  };
  double sign = (occupied_below(s, m_src) % 2) ? -1.0 : 1.0;
  FockState mid = s;
  auto& arr = sp == Spin::up ? mid.up : mid.down;
  int n = sp == Spin::up ? mid.n_up : mid.n_down;
  for (int i = 0; i < n; ++i)
    if (arr[i] == src) {
      arr[i] = dst;
      break;
    }
  std::sort(arr.begin(), arr.begin() + n);
  // sign for creating at m_dst in the state with src removed
  FockState removed = s;
  auto& rarr = sp == Spin::up ? removed.up : removed.down;
  int rn = sp == Spin::up ? removed.n_up : removed.n_down;
  for (int i = 0; i < rn; ++i)
    if (rarr[i] == src) {
      for (int j = i; j + 1 < rn; ++j) rarr[j] = rarr[j + 1];
      rarr[rn - 1] = -1;
      break;
    }
  if (sp == Spin::up)
    removed.n_up -= 1;
  else
    removed.n_down -= 1;
  sign *= (occupied_below(removed, m_dst) % 2) ? -1.0 : 1.0;
  *out = mid;
  return sign;
}

}  // namespace

SparseOperator build_hamiltonian(const LatticeSpec& lattice, const FockBasis& basis) {
  lattice.validate();
  if (basis.n_sites() != lattice.n_sites)
    throw std::invalid_argument("basis and lattice disagree on the number of sites");

  const int dim = basis.dimension();
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(dim) * (2 * lattice.n_bonds() / lattice.n_sites + 4));

  for (int i = 0; i < dim; ++i) {
    const FockState& s = basis.state(i);

    double diag = 0.0;
    if (basis.statistics() == Statistics::boson) {
      for (int p = 0; p < s.n_boson; ++p) {
        const int site = s.boson[p];
        diag += lattice.site_potential_at(site);
        // count ordered pairs once: n(n-1)/2 pairs on a site
        for (int q = p + 1; q < s.n_boson; ++q)
          if (s.boson[q] == site) diag += lattice.onsite_interaction_at(site);
      }
    } else {
      for (int site = 0; site < lattice.n_sites; ++site) {
        const int nu = s.occ(site, Spin::up), nd = s.occ(site, Spin::down);
        if (nu + nd == 0) continue;
        diag += lattice.site_potential_at(site) * (nu + nd);
        diag += lattice.onsite_interaction_at(site) * nu * nd;
      }
    }
    for (int b = 0; b < lattice.n_bonds(); ++b) {
      auto [x, y] = lattice.bond_sites(b);
      diag += lattice.nn_v * s.total_occ(x) * s.total_occ(y);
    }
    if (diag != 0.0) trip.push_back({i, i, Complex(diag)});

    for (int b = 0; b < lattice.n_bonds(); ++b) {
      auto [x, y] = lattice.bond_sites(b);
      const double tb = lattice.bond_hopping_at(b);
      if (tb == 0.0) continue;
      FockState target;
      if (basis.statistics() == Statistics::boson) {
        for (auto [src, dst] : {std::pair{x, y}, std::pair{y, x}}) {
          double amp = boson_hop(s, src, dst, &target);
          if (amp != 0.0) trip.push_back({basis.index(target), i, Complex(-tb * amp)});
        }
      } else {
        for (Spin sp : {Spin::up, Spin::down}) {
          for (auto [src, dst] : {std::pair{x, y}, std::pair{y, x}}) {
            double amp = fermion_hop(s, src, dst, sp, &target);
            if (amp != 0.0) trip.push_back({basis.index(target), i, Complex(-tb * amp)});
          }
        }
      }
    }
  }
  return SparseOperator::from_triplets(dim, std::move(trip), true, 1e-12);
}

}  // namespace hublat

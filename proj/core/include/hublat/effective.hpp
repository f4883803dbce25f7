#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hublat/fock.hpp"
#include "hublat/sparse.hpp"

namespace hublat {

struct EffectiveBond {
  int a = 0;
  int b = 0;
  double hopping = 0.0;
};

/// Reduced single-particle tight-binding model. bond_hopping[i] is the
/// (positive) coefficient on bond (i, i+1); the Hamiltonian matrix
/// element is its negative. extra_bonds add non-chain links the same
/// way.
struct EffectiveChainSpec {
  enum class Topology { ring, open_chain, side_segment };
  Topology topology = Topology::open_chain;
  int n_sites = 0;
  std::vector<double> bond_hopping;  // ring: n_sites entries, open: n_sites-1
  std::vector<double> onsite;        // may be empty (all zero)
  std::vector<EffectiveBond> extra_bonds;

  SparseOperator to_operator() const;
  /// JSON description (sites, bonds, on-site energies) for inspection.
  std::string to_json() const;
};

/// Bijection between effective chain sites and full Fock basis states.
/// Every mapped state is a single normalized Fock configuration up to
/// the gauge sign, chosen so that all effective hoppings come out
/// negative real. The common diagonal interaction energy of the mapped
/// states (U for pairs, 2V for triples) is recorded and subtracted from
/// the effective model's zero of energy.
struct BasisMap {
  const FockBasis* basis = nullptr;
  std::vector<int> fock_index;
  std::vector<double> gauge;
  double diagonal_energy = 0.0;

  /// Isometry into the full space.
  Eigen::VectorXcd embed(const Eigen::VectorXcd& eff) const;
  /// Coefficients in the subspace plus the norm lost outside it.
  std::pair<Eigen::VectorXcd, double> project(const Eigen::VectorXcd& full) const;
};

/// Scattering-geometry chain together with the effective index of the
/// junction (the chain site representing l = 0).
struct JunctionChain {
  EffectiveChainSpec chain;
  int origin_index = 0;
};

/// Bound-pair ring: 2N sites, uniform hopping sqrt(2) t. Even effective
/// sites are double occupancies, odd ones nearest-neighbor pairs.
/// `basis` must hold 2 bosons on an N-site periodic lattice.
std::pair<EffectiveChainSpec, BasisMap> bp_ring(const FockBasis& basis, double t,
                                                double u);

/// Bound-pair scattering chain: n_left sites of hopping sqrt(2) t
/// (the bound-pair lead), junction bond t0, n_right sites of hopping t
/// (the separated-particle lead).
JunctionChain bp_scattering_chain(double t, double t0, int n_left, int n_right);
/// Map of the above onto 2 bosons on an open lattice; phys_origin is the
/// physical index of the impurity bond's left site.
BasisMap bp_scattering_map(const FockBasis& basis, int phys_origin, int n_left,
                           int n_right, double u);

/// Bound-triple ring: trimerized chain of 3N sites, period-3 bond
/// pattern (sqrt2 t, 2t, sqrt2 t). `basis` must hold 3 bosons on an
/// N-site periodic lattice.
std::pair<EffectiveChainSpec, BasisMap> bt_chain(const FockBasis& basis, double t,
                                                 double v);
EffectiveChainSpec bt_chain_spec(int n_cells, double t);

/// Bound-triple scattering chain: trimerized left lead (n_left sites,
/// a multiple of 3, covering l <= 2), uniform right lead of hopping 2t
/// (n_right sites, l >= 3), the direct l=0 <-> l=3 link of sqrt(2) t,
/// and the (2-sqrt2) t stub bonds on the left side only.
JunctionChain bt_scattering_chain(double t, int n_left, int n_right);
BasisMap bt_scattering_map(const FockBasis& basis, int phys_origin, int n_left,
                           int n_right, double v);

}  // namespace hublat

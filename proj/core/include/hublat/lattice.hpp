#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hublat {

enum class Boundary { periodic, open };

/// Two-site impurity block embedded in an otherwise uniform chain:
/// hopping `bond_hopping` replaces the uniform hopping on `bond`, the
/// on-site interaction at `offres_site` becomes `offres_onsite`, and
/// `mu_site` carries the chemical potential `chem_potential`.
struct Impurity {
  int bond = 0;
  double bond_hopping = 0.0;
  int offres_site = 0;
  double offres_onsite = 0.0;
  int mu_site = 0;
  double chem_potential = 0.0;
};

/// Geometry and couplings of a 1D extended Hubbard chain.
/// Energies are in units of the uniform hopping; bond b connects sites
/// (b, b+1), with b = n_sites-1 wrapping around for periodic chains.
struct LatticeSpec {
  int n_sites = 0;
  Boundary boundary = Boundary::open;
  double hopping = 1.0;   // t
  double onsite_u = 0.0;  // U
  double nn_v = 0.0;      // V
  std::optional<Impurity> impurity;
  std::vector<std::pair<int, double>> bond_hopping_overrides;
  std::vector<std::pair<int, double>> site_potential_overrides;

  int n_bonds() const {
    return boundary == Boundary::periodic ? n_sites : n_sites - 1;
  }
  std::pair<int, int> bond_sites(int b) const {
    return {b, (b + 1) % n_sites};
  }

  /// Effective hopping on bond b: explicit override, else impurity bond,
  /// else the uniform value.
  double bond_hopping_at(int b) const;

  /// On-site single-particle energy at site s (chemical potential plus
  /// any explicit override contributions).
  double site_potential_at(int s) const;

  /// On-site interaction strength at site s (U, or U_s at the impurity).
  double onsite_interaction_at(int s) const;

  /// Throws std::invalid_argument on inconsistent geometry or couplings.
  /// Periodic chains with fewer than 3 sites are rejected (the single
  /// bond would be doubled).
  void validate() const;
};

}  // namespace hublat

#include "hublat/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hublat {

double LatticeSpec::bond_hopping_at(int b) const {
  for (const auto& [bond, value] : bond_hopping_overrides) {
    if (bond == b) return value;
  }
  if (impurity && impurity->bond == b) return impurity->bond_hopping;
  return hopping;
}

double LatticeSpec::site_potential_at(int s) const {
  double v = 0.0;
  for (const auto& [site, value] : site_potential_overrides) {
    if (site == s) v += value;
  }
  if (impurity && impurity->mu_site == s) v += impurity->chem_potential;
  return v;
}

double LatticeSpec::onsite_interaction_at(int s) const {
  if (impurity && impurity->offres_site == s) return impurity->offres_onsite;
  return onsite_u;
}

void LatticeSpec::validate() const {
  if (n_sites < 2) throw std::invalid_argument("lattice needs at least 2 sites");
  if (boundary == Boundary::periodic && n_sites < 3)
    throw std::invalid_argument(
        "periodic lattice needs at least 3 sites (a 2-site ring doubles its bond)");
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(hopping) || !finite(onsite_u) || !finite(nn_v))
    throw std::invalid_argument("non-finite coupling");
  auto check_bond = [&](int b) {
    if (b < 0 || b >= n_bonds())
      throw std::invalid_argument("bond index " + std::to_string(b) + " out of range");
  };
  auto check_site = [&](int s) {
    if (s < 0 || s >= n_sites)
      throw std::invalid_argument("site index " + std::to_string(s) + " out of range");
  };
  if (impurity) {
    check_bond(impurity->bond);
    check_site(impurity->offres_site);
    check_site(impurity->mu_site);
    if (!finite(impurity->bond_hopping) || !finite(impurity->offres_onsite) ||
        !finite(impurity->chem_potential))
      throw std::invalid_argument("non-finite impurity coupling");
  }
  for (const auto& [b, val] : bond_hopping_overrides) {
    check_bond(b);
    if (!finite(val)) throw std::invalid_argument("non-finite bond override");
  }
  for (const auto& [s, val] : site_potential_overrides) {
    check_site(s);
    if (!finite(val)) throw std::invalid_argument("non-finite site override");
  }
}

}  // namespace hublat

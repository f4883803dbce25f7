#pragma once

#include <optional>

#include <Eigen/Dense>

#include "hublat/fock.hpp"

namespace hublat {

struct Entanglement {
  double entropy = 0.0;      // von Neumann entropy of the resident spin
  double concurrence = 0.0;  // of the (resident, flying) spin pair
};

/// Channel-resolved outcome of a scattering run. The three channel
/// probabilities sum to one.
struct SeparationOutcome {
  double p_separated = 0.0;
  double p_bound_reflected = 0.0;
  double p_other = 0.0;
  double resident_population = 0.0;
  std::optional<Entanglement> entanglement;
};

/// Two-boson separation channels; origin is the physical index of the
/// impurity bond's left site (the mu site is origin+1). Separated:
/// one particle resident at origin+1, the other at sites <= origin-1.
/// Bound-reflected: both particles within one site of each other, away
/// from the impurity.
SeparationOutcome measure_bp_separation(const FockBasis& basis,
                                        const Eigen::VectorXcd& psi, int origin);

/// Three-boson variant: separated leaves the NN pair on (origin-1,
/// origin) with the third particle transmitted to sites >= origin+2.
SeparationOutcome measure_bt_separation(const FockBasis& basis,
                                        const Eigen::VectorXcd& psi, int origin);

/// Effective-chain channels: weight at or beyond `right_start` is the
/// separated channel, weight strictly left of `junction` the reflected
/// bound cluster.
SeparationOutcome measure_chain_separation(const Eigen::VectorXcd& psi,
                                           int junction, int right_start);

/// Entropy -tr(rho ln rho) of a 2x2 density matrix.
double entropy_2x2(const Eigen::Matrix2cd& rho);

/// Wootters concurrence of a two-qubit density matrix (basis order
/// uu, ud, du, dd).
double concurrence(const Eigen::Matrix4cd& rho);

}  // namespace hublat

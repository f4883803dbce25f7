#pragma once

#include <optional>

#include "hublat/effective.hpp"
#include "hublat/fock.hpp"

namespace hublat {

/// Gaussian envelope exp(-alpha^2 (l - center)^2 / 2 + i k0 l).
/// alpha is the inverse width; 0 < alpha <= 0.2 is enforced.
struct WavepacketSpec {
  double k0 = 0.0;
  double alpha = 0.05;
  double center = 0.0;
};

/// Normalized Gaussian packet over chain sites 0..n_sites-1. Throws
/// std::invalid_argument when the 5/alpha support does not fit inside
/// the chain.
Eigen::VectorXcd gaussian_chain_packet(int n_sites, const WavepacketSpec& spec);

/// Packet built in the effective space of `map` and embedded into the
/// full Fock space. spec.center indexes effective sites.
Eigen::VectorXcd embedded_packet(const BasisMap& map,
                                 const EffectiveChainSpec& chain,
                                 const WavepacketSpec& spec);

/// Single-particle Gaussian packet in the full space, optionally with a
/// second resident particle pinned at `resident_site` (bosons) or as a
/// given spin pair (see fermi.hpp for the fermionic variants).
Eigen::VectorXcd single_particle_packet(const FockBasis& basis,
                                        const WavepacketSpec& spec,
                                        std::optional<int> resident_site = {});

/// Position expectation value over chain sites.
double centroid(const Eigen::VectorXcd& psi);

}  // namespace hublat

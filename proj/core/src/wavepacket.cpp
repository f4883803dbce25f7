#include "hublat/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace hublat {

namespace {
void check_spec(int n_sites, const WavepacketSpec& spec) {
  if (!(spec.alpha > 0.0 && spec.alpha <= 0.2))
    throw std::invalid_argument("packet width parameter must lie in (0, 0.2]");
  const double support = 5.0 / spec.alpha;
  if (spec.center - support < 0.0 || spec.center + support > n_sites - 1)
    throw std::invalid_argument("packet support does not fit inside the chain");
}
}  // namespace

Eigen::VectorXcd gaussian_chain_packet(int n_sites, const WavepacketSpec& spec) {
  check_spec(n_sites, spec);
  Eigen::VectorXcd psi(n_sites);
  for (int l = 0; l < n_sites; ++l) {
    const double d = l - spec.center;
    psi[l] = std::exp(Complex(-0.5 * spec.alpha * spec.alpha * d * d, spec.k0 * l));
  }
  psi.normalize();
  return psi;
}

Eigen::VectorXcd embedded_packet(const BasisMap& map, const EffectiveChainSpec& chain,
                                 const WavepacketSpec& spec) {
  return map.embed(gaussian_chain_packet(chain.n_sites, spec));
}

Eigen::VectorXcd single_particle_packet(const FockBasis& basis,
                                        const WavepacketSpec& spec,
                                        std::optional<int> resident_site) {
  const int n = basis.n_sites();
  const Eigen::VectorXcd envelope = gaussian_chain_packet(n, spec);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.dimension());
  if (!resident_site) {
    if (basis.content().total() != 1)
      throw std::invalid_argument("need a one-particle basis");
    for (int l = 0; l < n; ++l) {
      FockState s;
      if (basis.statistics() == Statistics::boson)
        s = FockState::bosons({l});
      else if (basis.content().n_up == 1)
        s = FockState::fermions({l}, {});
      else
        s = FockState::fermions({}, {l});
      psi[basis.index(s)] = envelope[l];
    }
    return psi;
  }
  if (basis.statistics() != Statistics::boson || basis.content().n_bosons != 2)
    throw std::invalid_argument("resident-particle packets need two bosons");
  for (int l = 0; l < n; ++l)
    psi[basis.index(FockState::bosons({l, *resident_site}))] += envelope[l];
  psi.normalize();
  return psi;
}

double centroid(const Eigen::VectorXcd& psi) {
  double num = 0.0, den = 0.0;
  for (int l = 0; l < psi.size(); ++l) {
    const double w = std::norm(psi[l]);
    num += l * w;
    den += w;
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace hublat

#pragma once

#include <complex>
#include <vector>

#include "hublat/effective.hpp"

namespace hublat {

struct PlaneWaveScattering {
  double k0 = 0.0;
  std::complex<double> r{};
  std::complex<double> t_amp{};
  bool evanescent = false;
  double k_right = 0.0;  // transmitted momentum when propagating
  double flux_left = 0.0;
  double flux_right = 0.0;

  /// Transmission probability (v_R / v_L) |t|^2, 0 when evanescent.
  double transmission() const;
  double reflection() const { return std::norm(r); }
  /// | |r|^2 + T - 1 |
  double unitarity_defect() const;
};

/// Exact plane-wave scattering for an open chain made of two uniform
/// semi-infinite leads around a finite scatterer region: wave matching
/// on the leads, linear solve over the scatterer. k0 must lie in
/// (0, pi); an energy outside the right lead's band gives an evanescent
/// (fully reflecting) solution. Reflection/transmission amplitude
/// phases are referenced to the lead sites adjacent to the scatterer.
PlaneWaveScattering junction_scattering(const EffectiveChainSpec& chain, double k0);

/// Mirror of the chain (right-incident scattering).
PlaneWaveScattering junction_scattering_right(const EffectiveChainSpec& chain,
                                              double k0);

/// Coherent bound-pair separation probability of the optimal junction
/// t0 = 2^{1/4} t:
///   P = 2 [1 + (1 - sqrt2 cos^2 k0) / (sin k0 sqrt|cos 2k0|)]^{-1}
/// on (pi/4, pi/2], and 0 on (0, pi/4].
double bp_separation_closed_form(double k0);

/// Group velocity of the bound-pair band, -2 sqrt(2) t sin(k0).
double group_velocity(double k0, double t);

struct TransmissionCurve {
  std::vector<double> k0;
  std::vector<double> p;
  std::vector<double> v_g;
};

/// Separation probability and group velocity over an n_points grid on
/// (0, pi), band edges excluded by 1e-6.
TransmissionCurve sweep(const EffectiveChainSpec& chain, int n_points);

/// Plane-wave transmission through the bound-triple junction, with the
/// trimerized (period-3) left lead treated by Bloch-wave matching. The
/// incident state is the lead band branch that unfolds to site-space
/// momentum k0.
PlaneWaveScattering bt_plane_wave_transmission(double t, double k0);

}  // namespace hublat

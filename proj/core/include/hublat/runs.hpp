#pragma once

#include <complex>

#include "hublat/measure.hpp"

namespace hublat {

/// Parameters of the bound-pair separation experiments. Geometry is
/// auto-sized from alpha and k0 unless n_sites is given for the full
/// model; the stopping time is (distance to junction + 5/alpha)/|v_g|.
struct BpRunParams {
  double t = 1.0;
  double u = 40.0;
  double v = 40.0;
  double t0 = 1.1892071150027210667;  // 2^(1/4)
  double us_offset = 40.0;            // U_s = U + us_offset
  double k0 = 1.5707963267948966;     // pi/2
  double alpha = 0.05;
  bool full_model = false;
  int n_sites = 0;  // full-model lattice size; 0 = auto
  double accuracy = 1e-10;
};

struct BtRunParams {
  double t = 1.0;
  double v = 40.0;
  double k0 = 1.5707963267948966;
  double alpha = 0.05;
  bool full_model = false;
  int n_sites = 0;
  double accuracy = 1e-10;
};

struct FermiRunParams {
  double t = 1.0;
  double u = 40.0;
  double t0 = 1.1892071150027210667;
  double us_offset = 40.0;
  double k0 = 1.5707963267948966;
  double alpha = 0.05;
  int n_sites = 0;  // 0 = auto
  double accuracy = 1e-10;
};

struct RunResult {
  SeparationOutcome outcome;
  double evolution_time = 0.0;
  int lattice_sites = 0;   // physical sites (full) or chain sites (effective)
  int dimension = 0;
  double norm_drift = 0.0;
  double energy_drift = 0.0;
};

RunResult run_bp_separation(const BpRunParams& p);
/// Inverse process: single-particle packet incident on the resident
/// particle; p_separated reports the combination probability into the
/// bound-pair channel. with_resident=false runs the single-particle
/// control (bound-pair population identically zero).
RunResult run_bp_combination(const BpRunParams& p, bool with_resident = true);
RunResult run_bt_separation(const BtRunParams& p);

/// Singlet bound-pair scattering in the (1 up, 1 down) sector; the
/// outcome carries the conditional two-spin entanglement.
RunResult run_fermi_singlet(const FermiRunParams& p);
/// Parallel-spin (2 up) input: complete reflection; p_separated is the
/// reflected single-particle weight, resident_population the surviving
/// double-occupancy weight (identically zero here).
RunResult run_fermi_parallel(const FermiRunParams& p);
/// Symmetric triplet input in the (1u, 1d) sector: complete reflection.
RunResult run_fermi_triplet(const FermiRunParams& p);

/// Output channels of the arbitrary-spin combination process
/// [alpha phi_up + beta phi_down] c_1up^+ |vac>.
struct FermiChannelWeights {
  double reflected_up = 0.0;
  double bp = 0.0;
  double triplet_reflected = 0.0;
  double singlet_reflected = 0.0;
  double sum() const {
    return reflected_up + bp + triplet_reflected + singlet_reflected;
  }
};

FermiChannelWeights run_fermi_arbitrary(std::complex<double> alpha_amp,
                                        std::complex<double> beta_amp,
                                        const FermiRunParams& p);

}  // namespace hublat

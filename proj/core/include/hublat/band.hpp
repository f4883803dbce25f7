#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hublat/lattice.hpp"

namespace hublat {

/// Two-particle problem at fixed total momentum k = 2 pi n / N reduced
/// to an (N0+1)-site chain over the relative distance r in [0, N0],
/// N = 2 N0 + 1. hop[r] couples r and r+1; diag holds the on-site
/// potentials U (r=0), V (r=1) and the parity boundary term at r=N0.
struct MomentumBlock {
  double k = 0.0;
  int n_index = 0;
  int n0 = 0;
  std::vector<double> hop;   // size n0
  std::vector<double> diag;  // size n0 + 1
  Eigen::MatrixXd matrix() const;
};

/// Requires a periodic lattice with odd n_sites; throws
/// std::invalid_argument otherwise. n_index runs over [1, N].
MomentumBlock momentum_block(int n_index, const LatticeSpec& lattice);

enum class BoundClass { onsite_bp, nn_bp, resonant_bp, scattering };

struct BoundStateSolution {
  double energy = 0.0;
  Eigen::VectorXd amplitudes;  // f(r), r in [0, N0], normalized
  BoundClass classification = BoundClass::scattering;
};

/// All N0+1 eigenpairs of the block by dense symmetric diagonalization,
/// ascending in energy, classified as bound (on-site / NN / resonant)
/// or scattering. A state counts as bound when it carries >= 0.9 of its
/// weight on r in {0,1} or sits at least two continuum level spacings
/// outside the continuum.
std::vector<BoundStateSolution> solve_block(const MomentumBlock& block);

/// Resonant bound-pair band, U +- 2 sqrt(2) t cos(k/2).
std::pair<double, double> rbp_band(double k, double U, double t);

/// Large-|U| bound-pair ansatz on the r-chain of an N-site ring:
/// exponentially localized amplitudes and the second-order energy.
/// branch is +1/-1 for the two band branches. Throws std::domain_error
/// when the decay factor drops to 1 (no bound state).
BoundStateSolution rbp_asymptotics(double k, double U, double t, int n_sites,
                                   int branch);

/// Numerically extracted bandwidth (max - min over all k) of the bound
/// band of the requested type.
double narrowband_width(double U, double V, double t, int n_sites,
                        BoundClass which);

struct TrimerBandSolution {
  double k = 0.0;
  std::array<double, 3> roots{};  // ascending
  Eigen::Matrix3cd vectors;       // columns, matching roots
};

/// Spectrum of the trimerized-chain Bloch matrix
///   [[0, -sqrt2 t, -2 t e^{-ik}], [-sqrt2 t, 0, -sqrt2 t],
///    [-2 t e^{ik}, -sqrt2 t, 0]];
/// its eigenvalues are the three real roots of
///   L^3 - 8 t^2 L + 8 t^3 cos k = 0.
TrimerBandSolution trimer_band(double k, double t);

}  // namespace hublat

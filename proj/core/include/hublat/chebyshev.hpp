#pragma once

#include <vector>

#include "hublat/sparse.hpp"

namespace hublat {

struct PropagationConfig {
  double total_time = 0.0;
  double accuracy = 1e-10;  // bound on the truncation error of the state
  int snapshots = 0;        // intermediate states in trajectory()
  int max_degree = 4000000;
};

/// Polynomial propagator for exp(-i H T): Chebyshev expansion with the
/// spectrum enclosed by Gershgorin discs (5% safety margin) and the
/// degree chosen so that the dropped Bessel-coefficient tail stays
/// below the accuracy target. Throws std::runtime_error when the target
/// cannot be met within max_degree.
class Propagator {
 public:
  explicit Propagator(const SparseOperator& h, double accuracy = 1e-10);

  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi, double time) const;
  std::vector<Eigen::VectorXcd> trajectory(const Eigen::VectorXcd& psi,
                                           const PropagationConfig& config) const;

  double spectral_center() const { return center_; }
  double spectral_half_width() const { return half_width_; }

 private:
  const SparseOperator* h_ = nullptr;
  double center_ = 0.0;
  double half_width_ = 0.0;
  double accuracy_ = 1e-10;
  int max_degree_ = 4000000;
};

Eigen::VectorXcd propagate(const SparseOperator& h, const Eigen::VectorXcd& psi,
                           const PropagationConfig& config);

/// J_0..J_n at argument z >= 0 by Miller's downward recurrence.
std::vector<double> bessel_j_sequence(double z, int n_max);

}  // namespace hublat

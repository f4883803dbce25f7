#include "hublat/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace hublat {

std::vector<double> bessel_j_sequence(double z, int n_max) {
  if (z < 0.0) throw std::invalid_argument("bessel argument must be >= 0");
  std::vector<double> j(n_max + 1, 0.0);
  if (z == 0.0) {
    j[0] = 1.0;
    return j;
  }
  const int top = std::max(n_max, static_cast<int>(std::ceil(z)));
  const int start = top + static_cast<int>(std::sqrt(40.0 * (top + 1))) + 40;
  double next = 0.0, cur = 1e-30;
  double norm = 0.0;  // J_0 + 2 sum_{even n>0} J_n = 1
  for (int n = start; n >= 0; --n) {
    const double prev = 2.0 * (n + 1) / z * cur - next;
    next = cur;
    cur = prev;
    if (n <= n_max) j[n] = cur;
    if (n % 2 == 0) norm += (n == 0 ? 1.0 : 2.0) * cur;
    if (std::abs(cur) > 1e250) {  // rescale to dodge overflow
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      for (auto& v : j) v *= 1e-250;
    }
  }
  for (auto& v : j) v /= norm;
  return j;
}

Propagator::Propagator(const SparseOperator& h, double accuracy)
    : h_(&h), accuracy_(accuracy) {
  auto [lo, hi] = h.gershgorin();
  center_ = 0.5 * (lo + hi);
  half_width_ = 0.5 * (hi - lo) * 1.05;
  if (half_width_ <= 0.0) half_width_ = 1.0;
}

Eigen::VectorXcd Propagator::evolve(const Eigen::VectorXcd& psi, double time) const {
  if (psi.size() != h_->dimension())
    throw std::invalid_argument("state dimension mismatch");
  const Complex phase = std::exp(Complex(0.0, -center_ * time));
  const double z = half_width_ * std::abs(time);
  if (z == 0.0) return phase * psi;

  const int n_hi = static_cast<int>(
      std::ceil(z + 20.0 * std::cbrt(z + 1.0) + 60.0));
  const auto j = bessel_j_sequence(z, n_hi);
  // certified truncation: dropped terms carry weight 2|J_n|, and past
  // n_hi the coefficients keep decaying by more than a factor 2
  double tail = 4.0 * std::abs(j[n_hi]);
  int degree = n_hi;
  while (degree > 1 && tail + 2.0 * std::abs(j[degree]) <= 0.5 * accuracy_) {
    tail += 2.0 * std::abs(j[degree]);
    --degree;
  }
  if (degree >= max_degree_)
    throw std::runtime_error("chebyshev degree exceeds the configured maximum");

  const double sgn = time >= 0.0 ? 1.0 : -1.0;
  auto coeff = [&](int n) {
    Complex in = 1.0;  // (-i sgn)^n
    switch (n % 4) {
      case 1: in = Complex(0.0, -sgn); break;
      case 2: in = -1.0; break;
      case 3: in = Complex(0.0, sgn); break;
    }
    return (n == 0 ? 1.0 : 2.0) * in * j[n];
  };

  const int dim = h_->dimension();
  Eigen::VectorXcd scratch(dim);
  auto apply_scaled = [&](const Eigen::VectorXcd& x) {
    h_->apply(x.data(), scratch.data());
    return ((scratch - center_ * x) / half_width_).eval();
  };

  Eigen::VectorXcd prev = psi;
  Eigen::VectorXcd cur = apply_scaled(psi);
  Eigen::VectorXcd acc = coeff(0) * prev + coeff(1) * cur;
  for (int n = 2; n <= degree; ++n) {
    Eigen::VectorXcd next = 2.0 * apply_scaled(cur) - prev;
    acc += coeff(n) * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return phase * acc;
}

std::vector<Eigen::VectorXcd> Propagator::trajectory(
    const Eigen::VectorXcd& psi, const PropagationConfig& config) const {
  const int steps = std::max(config.snapshots, 1);
  std::vector<Eigen::VectorXcd> out;
  out.reserve(steps);
  Eigen::VectorXcd state = psi;
  const double dt = config.total_time / steps;
  for (int s = 0; s < steps; ++s) {
    state = evolve(state, dt);
    out.push_back(state);
  }
  return out;
}

Eigen::VectorXcd propagate(const SparseOperator& h, const Eigen::VectorXcd& psi,
                           const PropagationConfig& config) {
  Propagator p(h, config.accuracy);
  return p.evolve(psi, config.total_time);
}

}  // namespace hublat

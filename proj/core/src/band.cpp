#include "hublat/band.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace hublat {

using std::numbers::pi;

Eigen::MatrixXd MomentumBlock::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n0 + 1, n0 + 1);
  for (int r = 0; r <= n0; ++r) m(r, r) = diag[r];
  for (int r = 0; r < n0; ++r) m(r, r + 1) = m(r + 1, r) = hop[r];
  return m;
}

MomentumBlock momentum_block(int n_index, const LatticeSpec& lattice) {
  lattice.validate();
  if (lattice.boundary != Boundary::periodic)
    throw std::invalid_argument("momentum blocks need a periodic lattice");
  if (lattice.n_sites % 2 == 0)
    throw std::invalid_argument("momentum blocks need an odd number of sites");
  const int N = lattice.n_sites;
  const int n0 = (N - 1) / 2;
  MomentumBlock b;
  b.n_index = n_index;
  b.k = 2.0 * pi * n_index / N;
  b.n0 = n0;
  const double t = lattice.hopping;
  const double c = std::cos(pi * n_index / N);  // cos(k/2)
  b.hop.assign(n0, -2.0 * t * c);
  if (n0 > 0) b.hop[0] = -2.0 * std::numbers::sqrt2 * t * c;
  b.diag.assign(n0 + 1, 0.0);
  b.diag[0] = lattice.onsite_u;
  if (n0 >= 1) b.diag[1] += lattice.nn_v;
  const double boundary = (n_index % 2 == 0 ? 1.0 : -1.0) * (-2.0 * t * c);
  b.diag[n0] += boundary;
  return b;
}

std::vector<BoundStateSolution> solve_block(const MomentumBlock& block) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.matrix());
  const int dim = block.n0 + 1;
  // continuum of the free relative motion at this momentum
  const double t_abs = block.n0 > 0 ? std::abs(block.hop.back()) : 0.0;
  const double edge = 2.0 * t_abs;
  const double spacing = block.n0 > 0 ? 4.0 * t_abs / block.n0 : 0.0;

  std::vector<BoundStateSolution> out(dim);
  for (int i = 0; i < dim; ++i) {
    BoundStateSolution& s = out[i];
    s.energy = es.eigenvalues()(i);
    s.amplitudes = es.eigenvectors().col(i);
    const double w0 = s.amplitudes(0) * s.amplitudes(0);
    const double w1 = dim > 1 ? s.amplitudes(1) * s.amplitudes(1) : 0.0;
    const double w01 = w0 + w1;
    const double gap = std::max(std::abs(s.energy) - edge, 0.0);
    const bool bound = w01 >= 0.9 || (spacing > 0.0 && gap >= 2.0 * spacing);
    if (!bound) {
      s.classification = BoundClass::scattering;
    } else if (w0 >= 0.81 * w01) {
      s.classification = BoundClass::onsite_bp;
    } else if (w1 >= 0.81 * w01) {
      s.classification = BoundClass::nn_bp;
    } else {
      s.classification = BoundClass::resonant_bp;
    }
  }
  return out;
}

std::pair<double, double> rbp_band(double k, double U, double t) {
  const double w = 2.0 * std::numbers::sqrt2 * t * std::cos(k / 2.0);
  return {U - w, U + w};
}

BoundStateSolution rbp_asymptotics(double k, double U, double t, int n_sites,
                                   int branch) {
  if (n_sites < 3 || n_sites % 2 == 0)
    throw std::invalid_argument("rbp_asymptotics needs an odd ring of >= 3 sites");
  if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +-1");
  if (std::abs(U) < 10.0 * std::abs(t))
    std::cerr << "hublat: rbp_asymptotics called outside its validity range "
                 "(|U| < 10 t); results are approximate\n";
  const int n0 = (n_sites - 1) / 2;
  const double eps = -2.0 * t * std::cos(k / 2.0);  // partial dispersion
  const double energy = U + branch * std::numbers::sqrt2 * eps + eps * eps / (2.0 * U);

  BoundStateSolution s;
  s.energy = energy;
  s.amplitudes = Eigen::VectorXd::Zero(n0 + 1);
  s.classification = BoundClass::resonant_bp;
  if (eps == 0.0) {
    // k = pi: the pair decouples from r = 0 and freezes at r = 1
    if (n0 >= 1) s.amplitudes(1) = 1.0;
    else s.amplitudes(0) = 1.0;
    return s;
  }
  const double disc = energy * energy - 4.0 * eps * eps;
  if (disc <= 0.0) throw std::domain_error("no bound state: decay factor <= 1");
  const double xi = (std::abs(energy) + std::sqrt(disc)) / (2.0 * std::abs(eps));
  if (xi <= 1.0) throw std::domain_error("no bound state: decay factor <= 1");
  const double sgn = (U / eps) > 0.0 ? 1.0 : -1.0;
  s.amplitudes(0) = -std::numbers::sqrt2 * eps / (energy - U);
  for (int r = 1; r <= n0; ++r)
    s.amplitudes(r) = std::pow(-sgn, r - 1) * std::pow(xi, -(r - 1));
  s.amplitudes.normalize();
  return s;
}

double narrowband_width(double U, double V, double t, int n_sites, BoundClass which) {
  LatticeSpec lat;
  lat.n_sites = n_sites;
  lat.boundary = Boundary::periodic;
  lat.hopping = t;
  lat.onsite_u = U;
  lat.nn_v = V;
  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (int n = 1; n <= n_sites; ++n) {
    for (const auto& s : solve_block(momentum_block(n, lat))) {
      if (s.classification != which) continue;
      lo = seen ? std::min(lo, s.energy) : s.energy;
      hi = seen ? std::max(hi, s.energy) : s.energy;
      seen = true;
    }
  }
  if (!seen) throw std::runtime_error("no bound band of the requested type found");
  return hi - lo;
}

TrimerBandSolution trimer_band(double k, double t) {
  const std::complex<double> ik(0.0, k);
  Eigen::Matrix3cd m;
  const double s2t = std::numbers::sqrt2 * t;
  m << 0.0, -s2t, -2.0 * t * std::exp(-ik),  //
      -s2t, 0.0, -s2t,                       //
      -2.0 * t * std::exp(ik), -s2t, 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(m);
  TrimerBandSolution out;
  out.k = k;
  for (int i = 0; i < 3; ++i) out.roots[i] = es.eigenvalues()(i);
  out.vectors = es.eigenvectors();
  return out;
}

}  // namespace hublat

#include "hublat/fermi.hpp"

#include "hublat/sparse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hublat {

namespace {
int occupied_below(const FockState& s, int mode) {
  int c = 0;
  for (int i = 0; i < s.n_up; ++i) c += (2 * s.up[i] < mode);
  for (int i = 0; i < s.n_down; ++i) c += (2 * s.down[i] + 1 < mode);
  return c;
}
}  // namespace

std::pair<int, double> pair_state(const FockBasis& basis, int site_up,
                                  int site_down) {
  const FockState s = FockState::fermions({site_up}, {site_down});
  // canonical order puts the smaller mode first; mode(up) = 2i, mode(down) = 2j+1
  const double sign = site_up <= site_down ? 1.0 : -1.0;
  return {basis.index(s), sign};
}

Eigen::VectorXcd fermi_map(const FockBasis& boson_basis,
                           const Eigen::VectorXcd& psi,
                           const FockBasis& fermi_basis) {
  if (boson_basis.statistics() != Statistics::boson ||
      boson_basis.content().n_bosons != 2)
    throw std::invalid_argument("fermi_map maps two-boson states");
  if (fermi_basis.content().n_up != 1 || fermi_basis.content().n_down != 1)
    throw std::invalid_argument("target must be the (1 up, 1 down) sector");
  if (boson_basis.n_sites() != fermi_basis.n_sites())
    throw std::invalid_argument("lattice sizes differ");

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(fermi_basis.dimension());
  auto add_pair = [&](int i_up, int j_down, Complex amp) {
    auto [idx, sign] = pair_state(fermi_basis, i_up, j_down);
    out[idx] += sign * amp;
  };
  for (int i = 0; i < boson_basis.dimension(); ++i) {
    if (psi[i] == Complex(0.0)) continue;
    const FockState& s = boson_basis.state(i);
    const int a = s.boson[0], b = s.boson[1];
    if (a == b) {
      add_pair(a, a, psi[i]);
    } else {
      // a_i+ a_j+ -> (c_iu+ c_jd+ + c_ju+ c_id+) / sqrt2
      add_pair(a, b, psi[i] / std::numbers::sqrt2);
      add_pair(b, a, psi[i] / std::numbers::sqrt2);
    }
  }
  return out;
}

Eigen::VectorXcd apply_spin_raise(const FockBasis& from, const FockBasis& to,
                                  const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(to.dimension());
  for (int i = 0; i < from.dimension(); ++i) {
    if (psi[i] == Complex(0.0)) continue;
    const FockState& s = from.state(i);
    for (int p = 0; p < s.n_down; ++p) {
      const int site = s.down[p];
      if (s.occ(site, Spin::up) == 1) continue;
      double sign = (occupied_below(s, 2 * site + 1) % 2) ? -1.0 : 1.0;
      FockState t = s;
      for (int q = p; q + 1 < t.n_down; ++q) t.down[q] = t.down[q + 1];
      t.down[t.n_down - 1] = -1;
      t.n_down -= 1;
      sign *= (occupied_below(t, 2 * site) % 2) ? -1.0 : 1.0;
      t.up[t.n_up] = site;
      t.n_up += 1;
      std::sort(t.up.begin(), t.up.begin() + t.n_up);
      out[to.index(t)] += sign * psi[i];
    }
  }
  return out;
}

double s_squared(const FockBasis& basis, const Eigen::VectorXcd& psi) {
  if (basis.content().n_up != 1 || basis.content().n_down != 1)
    throw std::invalid_argument("s_squared expects the (1 up, 1 down) sector");
  LatticeSpec lat;
  lat.n_sites = basis.n_sites();
  lat.boundary = Boundary::open;
  const FockBasis raised(lat, ParticleContent::fermions(2, 0));
  return apply_spin_raise(basis, raised, psi).squaredNorm();
}

std::pair<double, Entanglement> separated_spin_entanglement(
    const FockBasis& basis, const Eigen::VectorXcd& psi, int origin) {
  if (basis.content().n_up != 1 || basis.content().n_down != 1)
    throw std::invalid_argument("expects the (1 up, 1 down) sector");
  // two-spin basis (resident, flying): uu, ud, du, dd
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  double weight = 0.0;
  for (int j = 0; j <= origin - 1; ++j) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    {  // flying up at j, resident down at origin+1
      auto [idx, sign] = pair_state(basis, j, origin + 1);
      v(2) = sign * psi[idx];
    }
    {  // flying down at j, resident up at origin+1: c_jd+ c_ou+ = -c_ou+ c_jd+
      auto [idx, sign] = pair_state(basis, origin + 1, j);
      v(1) = -sign * psi[idx];
    }
    weight += v.squaredNorm();
    rho += v * v.adjoint();
  }
  Entanglement ent;
  if (weight > 1e-14) {
    rho /= weight;
    ent.concurrence = concurrence(rho);
    Eigen::Matrix2cd rho_res = Eigen::Matrix2cd::Zero();
    // resident qubit: trace out the flying one
    rho_res(0, 0) = (rho(0, 0) + rho(1, 1)).real();
    rho_res(1, 1) = (rho(2, 2) + rho(3, 3)).real();
    rho_res(0, 1) = rho(0, 2) + rho(1, 3);
    rho_res(1, 0) = std::conj(rho_res(0, 1));
    ent.entropy = entropy_2x2(rho_res);
  }
  return {weight, ent};
}

}  // namespace hublat

#include "hublat/runs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hublat/band.hpp"
#include "hublat/chebyshev.hpp"
#include "hublat/effective.hpp"
#include "hublat/fermi.hpp"
#include "hublat/hamiltonian.hpp"
#include "hublat/wavepacket.hpp"

namespace hublat {

namespace {

using std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

int margin(double alpha) { return static_cast<int>(std::ceil(5.0 / alpha)); }

// group speed on a uniform lead of hopping `hop` at energy e; 0 outside
// the band
double lead_speed(double e, double hop) {
  if (std::abs(e) >= 2.0 * hop) return 0.0;
  return 2.0 * hop * std::sin(std::acos(-e / (2.0 * hop)));
}

double fold_pi(double x) {
  while (x > pi) x -= 2.0 * pi;
  while (x <= -pi) x += 2.0 * pi;
  return x;
}

// dispersion and group speed of the trimerized bound-triple lead at the
// site-space momentum k0
std::pair<double, double> bt_band_point(double t, double k0) {
  const double cell_k = fold_pi(3.0 * k0);
  const int branch = std::min(2, static_cast<int>(3.0 * k0 / pi));
  const double e = trimer_band(cell_k, t).roots[branch];
  // implicit derivative of E^3 - 8 t^2 E + 8 t^3 cos(3 k0) = 0
  const double v =
      3.0 * 8.0 * t * t * t * std::sin(cell_k) / (3.0 * e * e - 8.0 * t * t);
  return {e, std::abs(v)};
}

struct Evolved {
  Eigen::VectorXcd psi;
  double norm_drift = 0.0;
  double energy_drift = 0.0;
};

Evolved evolve_state(const SparseOperator& h, const Eigen::VectorXcd& psi0,
                     double time, double accuracy) {
  Propagator prop(h, accuracy);
  Evolved out;
  out.psi = prop.evolve(psi0, time);
  out.norm_drift = std::abs(out.psi.norm() - 1.0);
  out.energy_drift = std::abs(h.expectation(out.psi) - h.expectation(psi0));
  return out;
}

LatticeSpec bp_lattice(const BpRunParams& p, int n, int origin) {
  LatticeSpec lat;
  lat.n_sites = n;
  lat.boundary = Boundary::open;
  lat.hopping = p.t;
  lat.onsite_u = p.u;
  lat.nn_v = p.v;
  lat.impurity = Impurity{origin, p.t0, origin, p.u + p.us_offset, origin + 1, p.u};
  return lat;
}

LatticeSpec fermi_lattice(const FermiRunParams& p, int n, int origin) {
  LatticeSpec lat;
  lat.n_sites = n;
  lat.boundary = Boundary::open;
  lat.hopping = p.t;
  lat.onsite_u = p.u;
  lat.nn_v = p.u;  // the fermionic chain has matching NN interaction
  lat.impurity = Impurity{origin, p.t0, origin, p.u + p.us_offset, origin + 1, p.u};
  return lat;
}

LatticeSpec bt_lattice(const BtRunParams& p, int n, int origin) {
  LatticeSpec lat;
  lat.n_sites = n;
  lat.boundary = Boundary::open;
  lat.hopping = p.t;
  lat.onsite_u = 0.0;
  lat.nn_v = p.v;
  lat.bond_hopping_overrides.push_back({origin + 1, kSqrt2 * p.t});
  for (int b = origin + 2; b < n - 1; ++b)
    lat.bond_hopping_overrides.push_back({b, 2.0 * p.t});
  for (int s = origin + 2; s < n; ++s)
    lat.site_potential_overrides.push_back({s, p.v});
  return lat;
}

}  // namespace

RunResult run_bp_separation(const BpRunParams& p) {
  const int m = margin(p.alpha);
  const double v_in = 2.0 * kSqrt2 * p.t * std::sin(p.k0);
  if (v_in <= 0.0) throw std::invalid_argument("incident packet has no velocity");
  const double time = (2.0 * m + 2.0) / v_in;
  const double e = -2.0 * kSqrt2 * p.t * std::cos(p.k0);
  const double v_out = lead_speed(e, p.t);

  RunResult res;
  res.evolution_time = time;
  if (!p.full_model) {
    const int n_left = 2 * m + 6;
    const int n_right =
        std::max(30, static_cast<int>(std::ceil(v_out * 2.0 * m / v_in)) + 20);
    const JunctionChain jc = bp_scattering_chain(p.t, p.t0, n_left, n_right);
    const SparseOperator h = jc.chain.to_operator();
    const WavepacketSpec spec{p.k0, p.alpha, double(n_left - 2 - m)};
    const Eigen::VectorXcd psi0 = gaussian_chain_packet(jc.chain.n_sites, spec);
    const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
    res.outcome = measure_chain_separation(ev.psi, jc.origin_index, jc.origin_index);
    res.lattice_sites = jc.chain.n_sites;
    res.dimension = h.dimension();
    res.norm_drift = ev.norm_drift;
    res.energy_drift = ev.energy_drift;
    return res;
  }

  const int n = p.n_sites > 0 ? p.n_sites : 2 * m + 4;
  const int origin = n - 3;
  if (2 * origin - 2 - 2 * m < 0)
    throw std::invalid_argument("lattice too short for the packet support");
  const LatticeSpec lat = bp_lattice(p, n, origin);
  const FockBasis basis(lat, ParticleContent::bosons(2));
  const SparseOperator h = build_hamiltonian(lat, basis);
  const BasisMap map = bp_scattering_map(basis, origin, 2 * origin, origin, p.u);
  const WavepacketSpec spec{p.k0, p.alpha, double(2 * origin - 2 - m)};
  const Eigen::VectorXcd psi0 =
      map.embed(gaussian_chain_packet(3 * origin, spec));
  const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
  res.outcome = measure_bp_separation(basis, ev.psi, origin);
  res.lattice_sites = n;
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  return res;
}

RunResult run_bp_combination(const BpRunParams& p, bool with_resident) {
  const int m = margin(p.alpha);
  const double v_in = 2.0 * p.t * std::sin(p.k0);
  if (v_in <= 0.0) throw std::invalid_argument("incident packet has no velocity");
  const int n = p.n_sites > 0 ? p.n_sites : 2 * m + 6;
  const int origin = n - 3;
  const double center = origin - 2 - m;
  if (center - m < 0)
    throw std::invalid_argument("lattice too short for the packet support");
  const double time = (2.0 * m + 2.0) / v_in;
  const LatticeSpec lat = bp_lattice(p, n, origin);

  RunResult res;
  res.evolution_time = time;
  res.lattice_sites = n;
  const WavepacketSpec spec{p.k0, p.alpha, center};
  if (with_resident) {
    const FockBasis basis(lat, ParticleContent::bosons(2));
    const SparseOperator h = build_hamiltonian(lat, basis);
    const Eigen::VectorXcd psi0 =
        single_particle_packet(basis, spec, origin + 1);
    const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
    const SeparationOutcome raw = measure_bp_separation(basis, ev.psi, origin);
    // the combined bound pair leaves to the left; the uncombined part
    // stays in the single-particle-plus-resident channel
    res.outcome.p_separated = raw.p_bound_reflected;
    res.outcome.p_bound_reflected = raw.p_separated;
    res.outcome.p_other = raw.p_other;
    res.outcome.resident_population = raw.resident_population;
    res.dimension = h.dimension();
    res.norm_drift = ev.norm_drift;
    res.energy_drift = ev.energy_drift;
    return res;
  }
  const FockBasis basis(lat, ParticleContent::bosons(1));
  const SparseOperator h = build_hamiltonian(lat, basis);
  const Eigen::VectorXcd psi0 = single_particle_packet(basis, spec);
  const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
  for (int i = 0; i < basis.dimension(); ++i) {
    const double w = std::norm(ev.psi[i]);
    const int site = basis.state(i).boson[0];
    if (site >= origin + 1) res.outcome.resident_population += w;
    if (site <= origin - 1)
      res.outcome.p_bound_reflected += w;
    else
      res.outcome.p_other += w;
  }
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  return res;
}

RunResult run_bt_separation(const BtRunParams& p) {
  const int m = margin(p.alpha);
  const auto [e, v_in] = bt_band_point(p.t, p.k0);
  if (v_in <= 1e-12) throw std::invalid_argument("incident packet has no velocity");
  const double time = (2.0 * m + 2.0) / v_in;
  const double v_out = lead_speed(e, 2.0 * p.t);
  const int origin = (2 * m + 5 + 2) / 3;  // smallest o with 3o >= 2m + 5
  const int n_right_auto =
      std::max(30, static_cast<int>(std::ceil(v_out * 2.0 * m / v_in)) + 20);

  RunResult res;
  res.evolution_time = time;
  const int n = p.n_sites > 0 ? p.n_sites : origin + 2 + n_right_auto;
  const int n_right = n - origin - 2;
  if (n_right < 5) throw std::invalid_argument("lattice too short on the right");
  const int n_left = 3 * origin;
  const int offset = n_left - 3;
  const WavepacketSpec spec{p.k0, p.alpha, double(offset - 2 - m)};

  if (!p.full_model) {
    const JunctionChain jc = bt_scattering_chain(p.t, n_left, n_right);
    const SparseOperator h = jc.chain.to_operator();
    const Eigen::VectorXcd psi0 = gaussian_chain_packet(jc.chain.n_sites, spec);
    const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
    res.outcome = measure_chain_separation(ev.psi, offset, offset + 3);
    res.lattice_sites = jc.chain.n_sites;
    res.dimension = h.dimension();
    res.norm_drift = ev.norm_drift;
    res.energy_drift = ev.energy_drift;
    return res;
  }

  const LatticeSpec lat = bt_lattice(p, n, origin);
  const FockBasis basis(lat, ParticleContent::bosons(3));
  const SparseOperator h = build_hamiltonian(lat, basis);
  const BasisMap map = bt_scattering_map(basis, origin, n_left, n_right, p.v);
  const Eigen::VectorXcd psi0 =
      map.embed(gaussian_chain_packet(n_left + n_right, spec));
  const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
  res.outcome = measure_bt_separation(basis, ev.psi, origin);
  res.lattice_sites = n;
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  return res;
}

namespace {

struct FermiSetup {
  int n = 0;
  int origin = 0;
  int m = 0;
  double time = 0.0;
  LatticeSpec lat;
};

FermiSetup fermi_setup(const FermiRunParams& p) {
  FermiSetup s;
  s.m = margin(p.alpha);
  const double v_in = 2.0 * kSqrt2 * p.t * std::sin(p.k0);
  if (v_in <= 0.0) throw std::invalid_argument("incident packet has no velocity");
  s.time = (2.0 * s.m + 2.0) / v_in;
  s.n = p.n_sites > 0 ? p.n_sites : 2 * s.m + 6;
  s.origin = s.n - 3;
  s.lat = fermi_lattice(p, s.n, s.origin);
  return s;
}

// flying packet of spin `flying` with a resident particle of spin
// `resident` pinned at the mu site; amplitudes follow the physical
// operator order c_{flying}^+ c_{resident}^+ |vac>
Eigen::VectorXcd flying_resident_packet(const FockBasis& basis,
                                        const Eigen::VectorXcd& envelope,
                                        int resident_site, Spin flying,
                                        Spin resident) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.dimension());
  for (int j = 0; j < basis.n_sites(); ++j) {
    if (j == resident_site || envelope[j] == Complex(0.0)) continue;
    if (flying == Spin::up && resident == Spin::down) {
      auto [idx, sign] = pair_state(basis, j, resident_site);
      psi[idx] += sign * envelope[j];
    } else if (flying == Spin::down && resident == Spin::up) {
      // c_jd+ c_ru+ = -c_ru+ c_jd+
      auto [idx, sign] = pair_state(basis, resident_site, j);
      psi[idx] -= sign * envelope[j];
    } else if (flying == Spin::up && resident == Spin::up) {
      psi[basis.index(FockState::fermions({j, resident_site}, {}))] +=
          (j < resident_site ? 1.0 : -1.0) * envelope[j];
    } else {
      psi[basis.index(FockState::fermions({}, {j, resident_site}))] +=
          (j < resident_site ? 1.0 : -1.0) * envelope[j];
    }
  }
  psi.normalize();
  return psi;
}

double bp_cluster_weight(const FockBasis& basis, const Eigen::VectorXcd& psi,
                         int origin) {
  double w = 0.0;
  for (int i = 0; i < basis.dimension(); ++i) {
    const FockState& s = basis.state(i);
    const int a = s.n_up > 0 ? s.up[0] : s.down[0];
    const int b = s.n_down > 0 ? s.down[s.n_down - 1] : s.up[s.n_up - 1];
    if (std::abs(a - b) <= 1 && std::max(a, b) <= origin - 1)
      w += std::norm(psi[i]);
  }
  return w;
}

double resident_weight(const FockBasis& basis, const Eigen::VectorXcd& psi,
                       int site) {
  double w = 0.0;
  for (int i = 0; i < basis.dimension(); ++i)
    if (basis.state(i).total_occ(site) >= 1) w += std::norm(psi[i]);
  return w;
}

}  // namespace

RunResult run_fermi_singlet(const FermiRunParams& p) {
  const FermiSetup s = fermi_setup(p);
  const int o = s.origin;
  const FockBasis bbasis(s.lat, ParticleContent::bosons(2));
  const FockBasis fbasis(s.lat, ParticleContent::fermions(1, 1));
  const BasisMap map = bp_scattering_map(bbasis, o, 2 * o, o, p.u);
  const WavepacketSpec spec{p.k0, p.alpha, double(2 * o - 2 - s.m)};
  if (2 * o - 2 - 2 * s.m < 0)
    throw std::invalid_argument("lattice too short for the packet support");
  const Eigen::VectorXcd psi_b = map.embed(gaussian_chain_packet(3 * o, spec));
  const Eigen::VectorXcd psi0 = fermi_map(bbasis, psi_b, fbasis);
  const SparseOperator h = build_hamiltonian(s.lat, fbasis);
  const Evolved ev = evolve_state(h, psi0, s.time, p.accuracy);

  RunResult res;
  res.evolution_time = s.time;
  res.lattice_sites = s.n;
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  auto [w, ent] = separated_spin_entanglement(fbasis, ev.psi, o);
  res.outcome.p_separated = w;
  res.outcome.entanglement = ent;
  res.outcome.p_bound_reflected = bp_cluster_weight(fbasis, ev.psi, o);
  res.outcome.p_other =
      std::max(0.0, 1.0 - res.outcome.p_separated - res.outcome.p_bound_reflected);
  res.outcome.resident_population = resident_weight(fbasis, ev.psi, o + 1);
  return res;
}

RunResult run_fermi_parallel(const FermiRunParams& p) {
  const FermiSetup s = fermi_setup(p);
  const int o = s.origin;
  const FockBasis basis(s.lat, ParticleContent::fermions(2, 0));
  const WavepacketSpec spec{p.k0, p.alpha, double(o - 2 - s.m)};
  const Eigen::VectorXcd env = gaussian_chain_packet(s.n, spec);
  const Eigen::VectorXcd psi0 =
      flying_resident_packet(basis, env, o + 1, Spin::up, Spin::up);
  const SparseOperator h = build_hamiltonian(s.lat, basis);
  // the single particle sees the resident across the bare lead hopping,
  // so its travel time uses the single-particle speed
  const double time = (2.0 * s.m + 2.0) / (2.0 * p.t * std::sin(p.k0));
  const Evolved ev = evolve_state(h, psi0, time, p.accuracy);

  RunResult res;
  res.evolution_time = time;
  res.lattice_sites = s.n;
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  for (int i = 0; i < basis.dimension(); ++i) {
    const double w = std::norm(ev.psi[i]);
    if (w == 0.0) continue;
    const FockState& st = basis.state(i);
    if (st.up[1] == o + 1 && st.up[0] <= o - 1)
      res.outcome.p_separated += w;
    else if (st.up[1] - st.up[0] <= 1 && st.up[1] <= o - 1)
      res.outcome.p_bound_reflected += w;
    else
      res.outcome.p_other += w;
  }
  res.outcome.resident_population = 0.0;  // no opposite-spin double occupancy
  return res;
}

RunResult run_fermi_triplet(const FermiRunParams& p) {
  const FermiSetup s = fermi_setup(p);
  const int o = s.origin;
  const FockBasis basis(s.lat, ParticleContent::fermions(1, 1));
  const WavepacketSpec spec{p.k0, p.alpha, double(o - 2 - s.m)};
  const Eigen::VectorXcd env = gaussian_chain_packet(s.n, spec);
  Eigen::VectorXcd psi0 =
      flying_resident_packet(basis, env, o + 1, Spin::up, Spin::down) +
      flying_resident_packet(basis, env, o + 1, Spin::down, Spin::up);
  psi0.normalize();
  const SparseOperator h = build_hamiltonian(s.lat, basis);
  const double time = (2.0 * s.m + 2.0) / (2.0 * p.t * std::sin(p.k0));
  const Evolved ev = evolve_state(h, psi0, time, p.accuracy);

  RunResult res;
  res.evolution_time = time;
  res.lattice_sites = s.n;
  res.dimension = h.dimension();
  res.norm_drift = ev.norm_drift;
  res.energy_drift = ev.energy_drift;
  auto [w, ent] = separated_spin_entanglement(basis, ev.psi, o);
  res.outcome.p_separated = w;
  res.outcome.entanglement = ent;
  res.outcome.p_bound_reflected = bp_cluster_weight(basis, ev.psi, o);
  res.outcome.p_other =
      std::max(0.0, 1.0 - res.outcome.p_separated - res.outcome.p_bound_reflected);
  res.outcome.resident_population = resident_weight(basis, ev.psi, o + 1);
  return res;
}

FermiChannelWeights run_fermi_arbitrary(std::complex<double> alpha_amp,
                                        std::complex<double> beta_amp,
                                        const FermiRunParams& p) {
  if (std::abs(std::norm(alpha_amp) + std::norm(beta_amp) - 1.0) > 1e-9)
    throw std::invalid_argument("input amplitudes must be normalized");
  const FermiSetup s = fermi_setup(p);
  const int o = s.origin;
  const double time = (2.0 * s.m + 2.0) / (2.0 * p.t * std::sin(p.k0));
  const WavepacketSpec spec{p.k0, p.alpha, double(o - 2 - s.m)};

  FermiChannelWeights w;
  if (std::norm(alpha_amp) > 1e-14) {
    const FockBasis basis(s.lat, ParticleContent::fermions(2, 0));
    const Eigen::VectorXcd env = gaussian_chain_packet(s.n, spec);
    const Eigen::VectorXcd psi0 =
        flying_resident_packet(basis, env, o + 1, Spin::up, Spin::up);
    const SparseOperator h = build_hamiltonian(s.lat, basis);
    const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
    double stay = 0.0;  // still one particle left of the junction, one resident
    for (int i = 0; i < basis.dimension(); ++i) {
      const FockState& st = basis.state(i);
      if (st.up[1] == o + 1 && st.up[0] <= o - 1)
        stay += std::norm(ev.psi[i]);
    }
    w.reflected_up = std::norm(alpha_amp) * stay;
  }
  if (std::norm(beta_amp) > 1e-14) {
    const FockBasis basis(s.lat, ParticleContent::fermions(1, 1));
    const Eigen::VectorXcd env = gaussian_chain_packet(s.n, spec);
    const Eigen::VectorXcd psi0 =
        flying_resident_packet(basis, env, o + 1, Spin::down, Spin::up);
    const SparseOperator h = build_hamiltonian(s.lat, basis);
    const Evolved ev = evolve_state(h, psi0, time, p.accuracy);
    w.bp = std::norm(beta_amp) * bp_cluster_weight(basis, ev.psi, o);
    double w_t = 0.0, w_s = 0.0;
    for (int j = 0; j <= o - 1; ++j) {
      Complex a_du, a_ud;  // (resident, flying) spin configurations
      {
        auto [idx, sign] = pair_state(basis, j, o + 1);
        a_du = sign * ev.psi[idx];
      }
      {
        auto [idx, sign] = pair_state(basis, o + 1, j);
        a_ud = -sign * ev.psi[idx];
      }
      w_t += std::norm((a_ud + a_du) / kSqrt2);
      w_s += std::norm((a_ud - a_du) / kSqrt2);
    }
    w.triplet_reflected = std::norm(beta_amp) * w_t;
    w.singlet_reflected = std::norm(beta_amp) * w_s;
  }
  return w;
}

}  // namespace hublat

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hublat/chebyshev.hpp"
#include "hublat/effective.hpp"
#include "hublat/hamiltonian.hpp"
#include "hublat/measure.hpp"
#include "hublat/runs.hpp"
#include "hublat/scattering.hpp"
#include "hublat/wavepacket.hpp"

using namespace hublat;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

EffectiveChainSpec uniform_chain(int n, double t) {
  EffectiveChainSpec c;
  c.topology = EffectiveChainSpec::Topology::open_chain;
  c.n_sites = n;
  c.bond_hopping.assign(n - 1, t);
  return c;
}

}  // namespace

TEST_CASE("bessel sequence matches the standard library") {
  for (double z : {0.3, 2.0, 7.5, 31.0}) {
    const auto j = bessel_j_sequence(z, 12);
    REQUIRE(j.size() == 13);
    for (int n = 0; n <= 12; ++n)
      CHECK(std::abs(j[n] - std::cyl_bessel_j(n, z)) < 1e-12);
  }
  const auto j0 = bessel_j_sequence(0.0, 4);
  CHECK(j0[0] == doctest::Approx(1.0));
  CHECK(j0[1] == doctest::Approx(0.0));
}

TEST_CASE("gaussian packet basics") {
  WavepacketSpec spec{pi / 2.0, 0.1, 100.0};
  const auto psi = gaussian_chain_packet(200, spec);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-13);
  CHECK(centroid(psi) == doctest::Approx(100.0).epsilon(1e-10));
  // phase winding at k0 between neighboring sites
  const Complex ratio = psi[101] / psi[100];
  CHECK(std::arg(ratio) == doctest::Approx(pi / 2.0));
  CHECK_THROWS_AS(gaussian_chain_packet(40, spec), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_chain_packet(200, WavepacketSpec{1.0, 0.5, 100.0}),
                  std::invalid_argument);
}

TEST_CASE("two-site Rabi oscillation") {
  const auto h = uniform_chain(2, 1.0).to_operator();
  Eigen::VectorXcd psi0(2);
  psi0 << 1.0, 0.0;
  const Propagator prop(h, 1e-12);
  for (double T : {0.3, 1.0, 2.7}) {
    const auto psi = prop.evolve(psi0, T);
    CHECK(std::norm(psi[0]) == doctest::Approx(std::cos(T) * std::cos(T)).epsilon(1e-10));
    CHECK(std::norm(psi[1]) == doctest::Approx(std::sin(T) * std::sin(T)).epsilon(1e-10));
  }
}

TEST_CASE("chebyshev propagator matches dense diagonalization") {
  LatticeSpec lat;
  lat.n_sites = 6;
  lat.boundary = Boundary::periodic;
  lat.onsite_u = 7.0;
  lat.nn_v = 2.0;
  FockBasis b(lat, ParticleContent::bosons(2));
  const auto h = build_hamiltonian(lat, b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.dense());
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(b.dimension());
  psi0[b.index(FockState::bosons({0, 3}))] = 1.0 / sqrt2;
  psi0[b.index(FockState::bosons({1, 1}))] = Complex(0.0, 1.0 / sqrt2);
  const double T = 5.3;
  Eigen::VectorXcd exact = es.eigenvectors() *
                           (Eigen::VectorXcd)((-Complex(0, 1) * T *
                                               es.eigenvalues().array())
                                                  .exp() *
                                              (es.eigenvectors().adjoint() * psi0)
                                                  .array());
  const auto got = Propagator(h, 1e-12).evolve(psi0, T);
  CHECK((got - exact).norm() < 1e-10);
  CHECK(std::abs(got.norm() - 1.0) < 1e-12);
}

TEST_CASE("trajectory snapshots compose") {
  const auto h = uniform_chain(8, 1.0).to_operator();
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(8);
  psi0[3] = 1.0;
  PropagationConfig cfg;
  cfg.total_time = 2.0;
  cfg.snapshots = 4;
  const Propagator prop(h, 1e-12);
  const auto traj = prop.trajectory(psi0, cfg);
  REQUIRE(traj.size() == 4);
  CHECK((traj.back() - prop.evolve(psi0, 2.0)).norm() < 1e-10);
}

TEST_CASE("packet moves at the group velocity") {
  // sqrt2-hopping chain: v = 2 sqrt2 sin k0
  const auto h = uniform_chain(620, sqrt2).to_operator();
  const auto psi0 = gaussian_chain_packet(620, {pi / 2.0, 0.02, 260.0});
  const double T = 30.0;
  const auto psi = Propagator(h, 1e-10).evolve(psi0, T);
  const double v = (centroid(psi) - centroid(psi0)) / T;
  CHECK(std::abs(v - 2.0 * sqrt2) / (2.0 * sqrt2) < 0.02);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
}

TEST_CASE("effective separation run at pi/2") {
  BpRunParams p;
  p.alpha = 0.05;
  const auto r = run_bp_separation(p);
  CHECK(r.outcome.p_separated > 0.97);
  CHECK(r.outcome.p_separated <= 1.0 + 1e-9);
  CHECK(r.outcome.p_separated + r.outcome.p_bound_reflected +
            r.outcome.p_other ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.norm_drift <= 1e-9);
  CHECK(r.energy_drift <= 1e-8);
}

TEST_CASE("separation dies suddenly below k0 = pi/4") {
  BpRunParams p;
  p.alpha = 0.05;
  p.k0 = pi / 5.0;
  const auto r = run_bp_separation(p);
  CHECK(r.outcome.p_separated < 0.01);
  CHECK(r.outcome.p_bound_reflected > 0.95);
}

TEST_CASE("full model tracks the effective chain (small geometry)") {
  BpRunParams p;
  p.alpha = 0.2;
  const auto eff = run_bp_separation(p);
  p.full_model = true;
  const auto full = run_bp_separation(p);
  CHECK(std::abs(full.outcome.p_separated - eff.outcome.p_separated) < 0.02);
  CHECK(full.norm_drift <= 1e-9);
  CHECK(full.energy_drift <= 1e-8);
}

TEST_CASE("full-vs-effective evolution fidelity in the bound-pair channel") {
  // BP packet travelling in a uniform lead (ring), U = V >= 20 t
  for (double U : {20.0, 40.0}) {
    const int N = 41;
    LatticeSpec lat;
    lat.n_sites = N;
    lat.boundary = Boundary::periodic;
    lat.onsite_u = U;
    lat.nn_v = U;
    FockBasis b(lat, ParticleContent::bosons(2));
    auto [chain, map] = bp_ring(b, 1.0, U);
    const auto chain_psi0 =
        gaussian_chain_packet(chain.n_sites, {pi / 2.0, 0.2, 41.0});
    const auto full_psi0 = map.embed(chain_psi0);
    const double T = 10.0;
    const auto full_T =
        Propagator(build_hamiltonian(lat, b), 1e-10).evolve(full_psi0, T);
    const auto eff_T = Propagator(chain.to_operator(), 1e-10).evolve(chain_psi0, T);
    const double fid = std::norm(full_T.dot(map.embed(eff_T)));
    CHECK(fid >= 1.0 - 10.0 / (U * U));
  }
}

TEST_CASE("combination is the reciprocal of separation") {
  BpRunParams p;
  p.alpha = 0.05;
  const auto sep = run_bp_separation(p);
  const auto comb = run_bp_combination(p, true);
  CHECK(std::abs(comb.outcome.p_separated - sep.outcome.p_separated) < 0.02);
  // control without the resident particle: no pair can form
  const auto ctrl = run_bp_combination(p, false);
  CHECK(ctrl.outcome.p_separated <= 1e-9);
}

TEST_CASE("bt separation, effective chain") {
  BtRunParams p;
  p.alpha = 0.05;
  const auto r = run_bt_separation(p);
  CHECK(std::abs(r.outcome.p_separated - 0.97) < 0.02);
  CHECK(r.norm_drift <= 1e-9);
  CHECK(r.energy_drift <= 1e-8);
}

TEST_CASE("without strong V the triple disperses") {
  // V = 0 removes the bound band; the cluster weight decays
  LatticeSpec lat;
  lat.n_sites = 30;
  lat.boundary = Boundary::open;
  FockBasis b(lat, ParticleContent::bosons(3));
  // start from a localized triple in the middle
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(b.dimension());
  psi0[b.index(FockState::bosons({14, 15, 16}))] = 1.0;
  const auto h = build_hamiltonian(lat, b);
  const auto psi = Propagator(h, 1e-9).evolve(psi0, 6.0);
  double cluster = 0.0;
  for (int i = 0; i < b.dimension(); ++i) {
    const auto& s = b.state(i);
    if (s.boson[2] - s.boson[0] <= 2) cluster += std::norm(psi[i]);
  }
  CHECK(cluster < 0.5);
}

TEST_CASE("channel bookkeeping on the chain") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(10);
  psi[1] = std::sqrt(0.3);
  psi[5] = std::sqrt(0.2);
  psi[8] = std::sqrt(0.5);
  const auto out = measure_chain_separation(psi, 4, 7);
  CHECK(out.p_separated == doctest::Approx(0.5));
  CHECK(out.p_bound_reflected == doctest::Approx(0.3));
  CHECK(out.p_other == doctest::Approx(0.2));
}

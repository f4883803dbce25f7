#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hublat/effective.hpp"
#include "hublat/hamiltonian.hpp"

using namespace hublat;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

LatticeSpec ring(int n, double U, double V) {
  LatticeSpec s;
  s.n_sites = n;
  s.boundary = Boundary::periodic;
  s.onsite_u = U;
  s.nn_v = V;
  return s;
}

// <embedded l | H | embedded m> over the map subspace
Eigen::MatrixXcd restricted(const SparseOperator& h, const BasisMap& map,
                            int dim) {
  Eigen::MatrixXcd out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    e[m] = 1.0;
    const Eigen::VectorXcd col = h * map.embed(e);
    for (int l = 0; l < dim; ++l) {
      Eigen::VectorXcd f = Eigen::VectorXcd::Zero(dim);
      f[l] = 1.0;
      out(l, m) = map.embed(f).dot(col);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bp ring: six-site uniform sqrt2 ring for N=3") {
  FockBasis b(ring(3, 40.0, 40.0), ParticleContent::bosons(2));
  auto [spec, map] = bp_ring(b, 1.0, 40.0);
  REQUIRE(spec.topology == EffectiveChainSpec::Topology::ring);
  REQUIRE(spec.n_sites == 6);
  REQUIRE(static_cast<int>(spec.bond_hopping.size()) == 6);
  for (double h : spec.bond_hopping) CHECK(h == doctest::Approx(sqrt2));
  // spectrum of a uniform ring: -2 sqrt2 cos(2 pi m / 6)
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(spec.to_operator().dense());
  std::vector<double> expect;
  for (int m = 0; m < 6; ++m) expect.push_back(-2.0 * sqrt2 * std::cos(pi * m / 3.0));
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 6; ++i)
    CHECK(es.eigenvalues()[i] == doctest::Approx(expect[i]));
  // alternating double / NN-pair content
  for (int l = 0; l < 6; ++l) {
    const FockState& s = b.state(map.fock_index[l]);
    const bool is_double = s.boson[0] == s.boson[1];
    CHECK(is_double == (l % 2 == 0));
  }
  CHECK(map.diagonal_energy == doctest::Approx(40.0));
}

TEST_CASE("bp ring bandwidth is 4 sqrt2 t") {
  FockBasis b(ring(25, 40.0, 40.0), ParticleContent::bosons(2));
  auto [spec, map] = bp_ring(b, 1.0, 40.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(spec.to_operator().dense());
  CHECK(es.eigenvalues()[49] - es.eigenvalues()[0] ==
        doctest::Approx(4.0 * sqrt2));
}

TEST_CASE("bp ring reproduces the resonant block of the full hamiltonian") {
  auto lat = ring(11, 40.0, 40.0);
  FockBasis b(lat, ParticleContent::bosons(2));
  auto [spec, map] = bp_ring(b, 1.0, 40.0);
  const auto h = build_hamiltonian(lat, b);
  const Eigen::MatrixXcd m = restricted(h, map, spec.n_sites);
  const Eigen::MatrixXcd eff =
      spec.to_operator().dense() +
      map.diagonal_energy * Eigen::MatrixXcd::Identity(spec.n_sites, spec.n_sites);
  CHECK((m - eff).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("embed and project round trip") {
  FockBasis b(ring(9, 40.0, 40.0), ParticleContent::bosons(2));
  auto [spec, map] = bp_ring(b, 1.0, 40.0);
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(spec.n_sites);
  for (int i = 0; i < spec.n_sites; ++i) v[i] = Complex(g(rng), g(rng));
  v.normalize();
  const auto full = map.embed(v);
  CHECK(std::abs(full.norm() - 1.0) < 1e-13);
  auto [back, resid] = map.project(full);
  CHECK((back - v).norm() < 1e-13);
  CHECK(resid < 1e-13);
  // a state outside the subspace projects to zero with full residual
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(b.dimension());
  out[b.index(FockState::bosons({0, 4}))] = 1.0;
  auto [coeff, r2] = map.project(out);
  CHECK(coeff.norm() < 1e-14);
  CHECK(r2 == doctest::Approx(1.0));
}

TEST_CASE("bp scattering chain layout") {
  const double t0 = std::pow(2.0, 0.25);
  const auto jc = bp_scattering_chain(1.0, t0, 8, 6);
  CHECK(jc.origin_index == 8);
  REQUIRE(jc.chain.n_sites == 14);
  REQUIRE(static_cast<int>(jc.chain.bond_hopping.size()) == 13);
  int n_t0 = 0;
  for (int bnd = 0; bnd < 13; ++bnd) {
    const double h = jc.chain.bond_hopping[bnd];
    if (bnd < 7) CHECK(h == doctest::Approx(sqrt2));
    if (bnd == 7) {
      CHECK(h == doctest::Approx(t0));
    }
    if (bnd > 7) CHECK(h == doctest::Approx(1.0));
    if (std::abs(h - t0) < 1e-12) ++n_t0;
  }
  CHECK(n_t0 == 1);
}

TEST_CASE("bp scattering map matches the impurity hamiltonian") {
  const double t0 = std::pow(2.0, 0.25);
  LatticeSpec lat;
  lat.n_sites = 16;
  lat.boundary = Boundary::open;
  lat.onsite_u = 40.0;
  lat.nn_v = 40.0;
  const int o = 13;
  lat.impurity = Impurity{o, t0, o, 80.0, o + 1, 40.0};
  FockBasis b(lat, ParticleContent::bosons(2));
  const auto jc = bp_scattering_chain(1.0, t0, 2 * o, o);
  const auto map = bp_scattering_map(b, o, 2 * o, o, 40.0);
  const auto h = build_hamiltonian(lat, b);
  const int dim = jc.chain.n_sites;
  const Eigen::MatrixXcd m = restricted(h, map, dim);
  const Eigen::MatrixXcd eff = jc.chain.to_operator().dense();
  // diagonal is the common interaction energy, neighbors are exact
  for (int l = 0; l < dim; ++l)
    CHECK(std::abs(m(l, l) - Complex(map.diagonal_energy, 0.0)) < 1e-12);
  for (int l = 0; l + 1 < dim; ++l)
    CHECK(std::abs(m(l, l + 1) - eff(l, l + 1)) < 1e-12);
}

TEST_CASE("bt chain bond pattern") {
  const auto spec = bt_chain_spec(7, 1.0);
  REQUIRE(spec.topology == EffectiveChainSpec::Topology::ring);
  REQUIRE(spec.n_sites == 21);
  for (int l = 0; l < 21; ++l) {
    const double expect = (l % 3 == 1) ? 2.0 : sqrt2;
    CHECK(spec.bond_hopping[l] == doctest::Approx(expect));
  }
}

TEST_CASE("bt ring reproduces the degenerate triple block exactly") {
  auto lat = ring(7, 0.0, 40.0);
  FockBasis b(lat, ParticleContent::bosons(3));
  auto [spec, map] = bt_chain(b, 1.0, 40.0);
  REQUIRE(spec.n_sites == 21);
  CHECK(map.diagonal_energy == doctest::Approx(80.0));
  const auto h = build_hamiltonian(lat, b);
  const Eigen::MatrixXcd m = restricted(h, map, spec.n_sites);
  const Eigen::MatrixXcd eff =
      spec.to_operator().dense() +
      map.diagonal_energy * Eigen::MatrixXcd::Identity(spec.n_sites, spec.n_sites);
  CHECK((m - eff).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("bt scattering chain: trimerized left lead, stubs on the left only") {
  const auto jc = bt_scattering_chain(1.0, 12, 8);
  const auto& c = jc.chain;
  const int off = jc.origin_index;
  CHECK(off == 9);
  REQUIRE(c.n_sites == 20);
  // merged bond pattern left of the junction: 2t on l = 1 mod 3
  const Eigen::MatrixXcd h = c.to_operator().dense();
  for (int site = 0; site + 1 <= off + 2; ++site) {
    const int l = site - off;
    const double expect = (((l % 3) + 3) % 3 == 1) ? 2.0 : sqrt2;
    CHECK(std::abs(h(site, site + 1) + expect) < 1e-12);
  }
  // broken chain bond at (l=2, l=3), direct l=0 -> l=3 link
  CHECK(std::abs(h(off + 2, off + 3)) < 1e-15);
  CHECK(std::abs(h(off, off + 3) + sqrt2) < 1e-12);
  // uniform 2t right lead
  for (int site = off + 3; site + 1 < c.n_sites; ++site)
    CHECK(std::abs(h(site, site + 1) + 2.0) < 1e-12);
  // no extra bonds on the right side
  for (const auto& eb : c.extra_bonds)
    CHECK(std::max(eb.a, eb.b) <= off + 3);
  // removing the extra bonds disconnects nothing on the left, but the
  // l=0 -> l=3 link is the only left/right connection
  bool has_link = false;
  for (const auto& eb : c.extra_bonds)
    if ((eb.a == off && eb.b == off + 3) || (eb.a == off + 3 && eb.b == off))
      has_link = true;
  CHECK(has_link);
}

TEST_CASE("bt junction matrix element in the full model") {
  // physical chain with the triple-splitting impurity region
  LatticeSpec lat;
  lat.n_sites = 14;
  lat.boundary = Boundary::open;
  lat.onsite_u = 0.0;
  lat.nn_v = 40.0;
  const int o = 7;
  lat.bond_hopping_overrides.push_back({o + 1, sqrt2});
  for (int bnd = o + 2; bnd < lat.n_sites - 1; ++bnd)
    lat.bond_hopping_overrides.push_back({bnd, 2.0});
  for (int s = o + 2; s < lat.n_sites; ++s)
    lat.site_potential_overrides.push_back({s, 40.0});
  FockBasis b(lat, ParticleContent::bosons(3));
  const auto map = bt_scattering_map(b, o, 6, 5, 40.0);
  const auto h = build_hamiltonian(lat, b);
  const int dim = 11;
  const int off = 3;  // n_left - 3
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(dim), e3 = e0;
  e0[off + 0] = 1.0;
  e3[off + 3] = 1.0;
  const Complex elem = map.embed(e0).dot(h * map.embed(e3));
  CHECK(std::abs(elem - Complex(-sqrt2, 0.0)) < 1e-12);
  // and the transmitted states: l=4 is {o-1, o, o+3}
  const FockState& s4 = b.state(map.fock_index[off + 4]);
  CHECK(s4 == FockState::bosons({o - 1, o, o + 3}));
}

TEST_CASE("effective chain json is well formed") {
  const auto jc = bp_scattering_chain(1.0, 1.2, 4, 4);
  const std::string js = jc.chain.to_json();
  CHECK(js.find("\"n_sites\":8") != std::string::npos);
  CHECK(js.find("\"bonds\"") != std::string::npos);
}

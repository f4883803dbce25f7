#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hublat/band.hpp"
#include "hublat/fock.hpp"
#include "hublat/hamiltonian.hpp"

using namespace hublat;
using std::numbers::pi;

namespace {

LatticeSpec ring(int n, double U = 0.0, double V = 0.0) {
  LatticeSpec s;
  s.n_sites = n;
  s.boundary = Boundary::periodic;
  s.onsite_u = U;
  s.nn_v = V;
  return s;
}

}  // namespace

TEST_CASE("momentum block structure") {
  const int N = 21;
  auto lat = ring(N, 5.0, 2.0);
  const int n = 6;  // even index: boundary term -2 t cos(k/2)
  const auto blk = momentum_block(n, lat);
  const double c = std::cos(pi * n / N);
  REQUIRE(blk.n0 == 10);
  CHECK(blk.hop[0] == doctest::Approx(-2.0 * std::sqrt(2.0) * c));
  for (int r = 1; r < blk.n0; ++r)
    CHECK(blk.hop[r] == doctest::Approx(-2.0 * c));
  CHECK(blk.diag[0] == doctest::Approx(5.0));
  CHECK(blk.diag[1] == doctest::Approx(2.0));
  for (int r = 2; r < blk.n0; ++r) CHECK(blk.diag[r] == doctest::Approx(0.0));
  CHECK(blk.diag[blk.n0] == doctest::Approx(-2.0 * c));
}

TEST_CASE("k near pi: hoppings vanish with cos(k/2)") {
  const int N = 41;
  auto lat = ring(N);
  // n = (N-1)/2: k just below pi, cos(k/2) ~ pi/(2N)
  const auto blk = momentum_block((N - 1) / 2, lat);
  for (double h : blk.hop) CHECK(std::abs(h) < 4.0 * pi / (2.0 * N) + 1e-12);
}

TEST_CASE("k = 2 pi: full-strength hoppings, sqrt2 enhancement at r=0") {
  const int N = 21;
  const auto blk = momentum_block(N, ring(N));
  CHECK(std::abs(blk.hop[0]) == doctest::Approx(2.0 * std::sqrt(2.0)));
  for (int r = 1; r < blk.n0; ++r)
    CHECK(std::abs(blk.hop[r]) == doctest::Approx(2.0));
  CHECK(std::abs(blk.hop[0] / blk.hop[1]) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("N=5 block shape") {
  const auto blk = momentum_block(2, ring(5, 7.0, 3.0));
  REQUIRE(blk.n0 == 2);
  const Eigen::MatrixXd m = blk.matrix();
  const double c = std::cos(2.0 * pi / 5.0);
  CHECK(m(0, 0) == doctest::Approx(7.0));
  CHECK(m(1, 1) == doctest::Approx(3.0));
  CHECK(m(2, 2) == doctest::Approx(-2.0 * c));
  CHECK(m(0, 1) == doctest::Approx(-2.0 * std::sqrt(2.0) * c));
  CHECK(m(1, 2) == doctest::Approx(-2.0 * c));
  CHECK(m(0, 2) == doctest::Approx(0.0));
  CHECK((m - m.transpose()).norm() < 1e-14);
}

TEST_CASE("momentum_block requires odd periodic lattices") {
  CHECK_THROWS_AS(momentum_block(1, ring(10)), std::invalid_argument);
  LatticeSpec open = ring(11);
  open.boundary = Boundary::open;
  CHECK_THROWS_AS(momentum_block(1, open), std::invalid_argument);
}

TEST_CASE("resonant pair at U = V: split U +- sqrt2 |2tc|") {
  const int N = 41;
  const double U = 40.0;
  const auto blk = momentum_block(1, ring(N, U, U));
  const auto sols = solve_block(blk);
  std::vector<double> bound;
  for (const auto& s : sols)
    if (s.classification == BoundClass::resonant_bp) bound.push_back(s.energy);
  REQUIRE(bound.size() == 2);
  const double c = std::cos(pi / N);
  const double tol = 5.0 / U;
  CHECK(std::abs(bound[0] - (U - 2.0 * std::sqrt(2.0) * c)) < tol);
  CHECK(std::abs(bound[1] - (U + 2.0 * std::sqrt(2.0) * c)) < tol);
  // near-equal weight on r = 0 and r = 1
  for (const auto& s : sols) {
    if (s.classification != BoundClass::resonant_bp) continue;
    const double w0 = s.amplitudes[0] * s.amplitudes[0];
    const double w1 = s.amplitudes[1] * s.amplitudes[1];
    CHECK(w0 > 0.3);
    CHECK(w1 > 0.3);
    CHECK(w0 + w1 > 0.9);
  }
}

TEST_CASE("detuned interactions localize separately") {
  const int N = 41;
  const auto sols = solve_block(momentum_block(3, ring(N, 80.0, 40.0)));
  bool found_onsite = false, found_nn = false;
  for (const auto& s : sols) {
    if (s.classification == BoundClass::onsite_bp) {
      found_onsite = true;
      CHECK(std::abs(s.energy - 80.0) < 1.0);
      CHECK(s.amplitudes[0] * s.amplitudes[0] > 0.9);
    }
    if (s.classification == BoundClass::nn_bp) {
      found_nn = true;
      CHECK(std::abs(s.energy - 40.0) < 1.0);
      CHECK(s.amplitudes[1] * s.amplitudes[1] > 0.9);
    }
  }
  CHECK(found_onsite);
  CHECK(found_nn);
}

TEST_CASE("free pairs produce no bound states") {
  const auto sols = solve_block(momentum_block(4, ring(21)));
  for (const auto& s : sols)
    CHECK(s.classification == BoundClass::scattering);
}

TEST_CASE("rbp band and asymptotics") {
  const double U = 40.0, t = 1.0;
  auto [lo, hi] = rbp_band(pi / 2.0, U, t);
  CHECK(lo == doctest::Approx(U - 2.0 * std::sqrt(2.0) * std::cos(pi / 4.0)));
  CHECK(hi == doctest::Approx(U + 2.0 * std::sqrt(2.0) * std::cos(pi / 4.0)));
  CHECK(std::abs(lo - U) < 2.0 + 1e-12);
  CHECK(std::abs(hi - U) < 2.0 + 1e-12);

  const int N = 41;
  auto best_overlap = [&](int n, int branch) {
    const double k = 2.0 * pi * n / N;
    const auto approx = rbp_asymptotics(k, U, t, N, branch);
    const auto sols = solve_block(momentum_block(n, ring(N, U, U)));
    double best = 0.0;
    for (const auto& s : sols) {
      if (s.classification != BoundClass::resonant_bp) continue;
      best = std::max(best, std::abs(approx.amplitudes.dot(s.amplitudes)));
    }
    return best * best;
  };
  for (int branch : {-1, 1}) {
    // deep in the asymptotic regime (small partial dispersion, k ~ pi)
    CHECK(best_overlap((N - 1) / 2, branch) >= 1.0 - (t / U) * (t / U));
    CHECK(best_overlap((N - 1) / 2 - 2, branch) >= 1.0 - (t / U) * (t / U));
    // mid-band the printed ansatz is only O(eps_k/U) accurate
    CHECK(best_overlap(5, branch) >= 1.0 - 10.0 * (t / U) * (t / U));
  }
}

TEST_CASE("pair localization length shrinks with U") {
  const int N = 41;
  auto decay = [&](double U) {
    const auto s = rbp_asymptotics(2.0 * pi * 4 / N, U, 1.0, N, 1);
    return std::abs(s.amplitudes[3] / s.amplitudes[2]);
  };
  CHECK(decay(20.0) > decay(40.0));
  CHECK(decay(40.0) > decay(80.0));
}

TEST_CASE("narrowband width halves when U doubles") {
  const int N = 41;
  const double w40 = narrowband_width(40.0, 0.0, 1.0, N, BoundClass::onsite_bp);
  const double w80 = narrowband_width(80.0, 0.0, 1.0, N, BoundClass::onsite_bp);
  CHECK(std::abs(w40 / w80 - 2.0) < 0.2);
  const double wres =
      narrowband_width(40.0, 40.0, 1.0, N, BoundClass::resonant_bp);
  CHECK(std::abs(wres - 4.0 * std::sqrt(2.0)) < 5.0 / 40.0);
}

TEST_CASE("trimer band roots") {
  const auto k0 = trimer_band(0.0, 1.0);
  const double s5 = std::sqrt(5.0);
  CHECK(std::abs(k0.roots[0] - (-1.0 - s5)) < 1e-10);
  CHECK(std::abs(k0.roots[1] - (-1.0 + s5)) < 1e-10);
  CHECK(std::abs(k0.roots[2] - 2.0) < 1e-10);

  const auto khalf = trimer_band(pi / 2.0, 1.0);
  CHECK(std::abs(khalf.roots[0] + 2.0 * std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(khalf.roots[1]) < 1e-10);
  CHECK(std::abs(khalf.roots[2] - 2.0 * std::sqrt(2.0)) < 1e-10);

  // symmetry k -> -k
  for (double k : {0.3, 1.1, 2.5}) {
    const auto a = trimer_band(k, 1.0);
    const auto b = trimer_band(-k, 1.0);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(a.roots[i] - b.roots[i]) < 1e-12);
  }
}

TEST_CASE("trimer eigenvalues satisfy the cubic on a fine grid") {
  const double t = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double k = -pi + 2.0 * pi * (i + 0.5) / 200;
    const auto sol = trimer_band(k, t);
    for (double L : sol.roots) {
      const double res = L * L * L - 8.0 * t * t * L + 8.0 * t * t * t * std::cos(k);
      CHECK(std::abs(res) < 1e-10);
    }
  }
}

TEST_CASE("trimer band gaps open at the zone boundaries") {
  // bands touch nowhere: finite gaps between consecutive roots at k = 0, pi
  const auto edge0 = trimer_band(0.0, 1.0);
  const auto edgepi = trimer_band(pi, 1.0);
  CHECK(edge0.roots[2] - edge0.roots[1] > 0.5);
  CHECK(edgepi.roots[1] - edgepi.roots[0] > 0.5);
}

TEST_CASE("momentum blocks are complete: union matches full diagonalization") {
  const int N = 11;
  auto lat = ring(N, 7.0, 3.0);
  std::vector<double> block_eigs;
  for (int n = 1; n <= N; ++n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        momentum_block(n, lat).matrix());
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      block_eigs.push_back(es.eigenvalues()[i]);
  }
  FockBasis b(lat, ParticleContent::bosons(2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full(
      build_hamiltonian(lat, b).dense());
  REQUIRE(static_cast<int>(block_eigs.size()) == b.dimension());
  std::sort(block_eigs.begin(), block_eigs.end());
  double dev = 0.0;
  for (int i = 0; i < b.dimension(); ++i)
    dev = std::max(dev, std::abs(block_eigs[i] - full.eigenvalues()[i]));
  CHECK(dev < 1e-9);
}

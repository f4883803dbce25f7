#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hublat/scattering.hpp"

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

const double t0_opt = std::pow(2.0, 0.25);

}  // namespace

TEST_CASE("uniform chain transmits perfectly") {
  const auto c = uniform_chain(12, 1.0);
  for (double k0 : {0.4, 1.0, pi / 2.0, 2.3}) {
    const auto s = junction_scattering(c, k0);
    CHECK(s.transmission() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.r) < 1e-10);
    CHECK(s.unitarity_defect() < 1e-12);
  }
}

TEST_CASE("single weak-bond scatterer agrees with the textbook formula") {
  auto c = uniform_chain(15, 1.0);
  const double tp = 0.6;
  c.bond_hopping[7] = tp;
  for (double k0 : {0.7, 2.1}) {
    const auto s = junction_scattering(c, k0);
    CHECK(s.unitarity_defect() < 1e-12);
    CHECK(s.transmission() < 1.0);
    CHECK(s.transmission() > 0.0);
  }
  // exact weak-bond result at E = 0: T = 4 t'^2 / (1 + t'^2)^2 (t = 1)
  const auto s = junction_scattering(c, pi / 2.0);
  const double expect = 4.0 * tp * tp / std::pow(1.0 + tp * tp, 2.0);
  CHECK(s.transmission() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("bp junction matches the closed-form separation law") {
  const auto jc = bp_scattering_chain(1.0, t0_opt, 30, 30);
  double max_dev = 0.0, max_unit = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double k0 = pi / 2.0 * i / 200.0;
    const auto s = junction_scattering(jc.chain, k0);
    max_dev = std::max(max_dev,
                       std::abs(s.transmission() - bp_separation_closed_form(k0)));
    max_unit = std::max(max_unit, s.unitarity_defect());
  }
  CHECK(max_dev < 1e-10);
  CHECK(max_unit < 1e-10);
}

TEST_CASE("closed form values") {
  CHECK(bp_separation_closed_form(pi / 2.0) == doctest::Approx(1.0));
  CHECK(bp_separation_closed_form(pi / 3.0) == doctest::Approx(0.9730).epsilon(1e-4));
  CHECK(bp_separation_closed_form(pi / 4.0) == 0.0);
  CHECK(bp_separation_closed_form(0.2) == 0.0);
  CHECK_THROWS_AS(bp_separation_closed_form(0.0), std::domain_error);
  CHECK_THROWS_AS(bp_separation_closed_form(2.0), std::domain_error);
}

TEST_CASE("below the sudden-death momentum the junction is fully reflecting") {
  const auto jc = bp_scattering_chain(1.0, t0_opt, 30, 30);
  for (double k0 : {0.1, 0.5, pi / 4.0 - 0.01}) {
    const auto s = junction_scattering(jc.chain, k0);
    CHECK(s.evanescent);
    CHECK(s.transmission() == 0.0);
    CHECK(s.reflection() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("group velocity of the bound-pair band") {
  CHECK(group_velocity(pi / 2.0, 1.0) == doctest::Approx(-2.0 * sqrt2));
  CHECK(group_velocity(pi / 3.0, 2.0) ==
        doctest::Approx(-4.0 * sqrt2 * std::sin(pi / 3.0)));
}

TEST_CASE("left and right incidence agree at matched energy") {
  const auto jc = bp_scattering_chain(1.0, t0_opt, 25, 25);
  // E = 0: k = pi/2 in both leads
  const auto l = junction_scattering(jc.chain, pi / 2.0);
  const auto r = junction_scattering_right(jc.chain, pi / 2.0);
  CHECK(l.transmission() == doctest::Approx(r.transmission()).epsilon(1e-10));
}

TEST_CASE("transmission sweep produces a sane curve") {
  const auto jc = bp_scattering_chain(1.0, t0_opt, 20, 20);
  const auto curve = sweep(jc.chain, 100);
  REQUIRE(curve.k0.size() == 100);
  REQUIRE(curve.p.size() == 100);
  REQUIRE(curve.v_g.size() == 100);
  for (std::size_t i = 0; i < curve.p.size(); ++i) {
    CHECK(curve.p[i] >= -1e-12);
    CHECK(curve.p[i] <= 1.0 + 1e-12);
    if (curve.k0[i] > 1e-3 && curve.k0[i] < pi - 1e-3)
      CHECK(std::abs(std::abs(curve.v_g[i]) -
                     2.0 * sqrt2 * std::sin(curve.k0[i])) < 1e-9);
  }
}

TEST_CASE("bound-triple plane-wave transmission") {
  const auto s = bt_plane_wave_transmission(1.0, pi / 2.0);
  CHECK(!s.evanescent);
  CHECK(s.transmission() > 0.9);
  CHECK(s.transmission() <= 1.0 + 1e-12);
  CHECK(s.unitarity_defect() < 1e-10);
  for (double k0 : {1.2, 1.45, 1.9}) {
    const auto w = bt_plane_wave_transmission(1.0, k0);
    CHECK(w.unitarity_defect() < 1e-10);
  }
}

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "hublat/chebyshev.hpp"
#include "hublat/effective.hpp"
#include "hublat/fock.hpp"
#include "hublat/hamiltonian.hpp"
#include "hublat/scattering.hpp"
#include "hublat/wavepacket.hpp"

using namespace hublat;

namespace {

LatticeSpec bp_lattice(int n) {
  LatticeSpec lat;
  lat.n_sites = n;
  lat.boundary = Boundary::open;
  lat.onsite_u = 40.0;
  lat.nn_v = 40.0;
  const int o = n - 3;
  lat.impurity = Impurity{o, std::pow(2.0, 0.25), o, 80.0, o + 1, 40.0};
  return lat;
}

void bm_basis_build(benchmark::State& state) {
  const auto lat = bp_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FockBasis b(lat, ParticleContent::bosons(2));
    benchmark::DoNotOptimize(b.dimension());
  }
}
BENCHMARK(bm_basis_build)->Arg(100)->Arg(200)->Arg(400);

void bm_hamiltonian_assembly(benchmark::State& state) {
  const auto lat = bp_lattice(static_cast<int>(state.range(0)));
  FockBasis b(lat, ParticleContent::bosons(2));
  for (auto _ : state) {
    auto h = build_hamiltonian(lat, b);
    benchmark::DoNotOptimize(h.nonzeros());
  }
}
BENCHMARK(bm_hamiltonian_assembly)->Arg(100)->Arg(200)->Arg(400);

void bm_matvec(benchmark::State& state) {
  const auto lat = bp_lattice(static_cast<int>(state.range(0)));
  FockBasis b(lat, ParticleContent::bosons(2));
  const auto h = build_hamiltonian(lat, b);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(b.dimension());
  v.normalize();
  Eigen::VectorXcd out(b.dimension());
  for (auto _ : state) {
    h.apply(v.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(h.nonzeros()));
}
BENCHMARK(bm_matvec)->Arg(100)->Arg(200)->Arg(400);

void bm_chebyshev_unit_time(benchmark::State& state) {
  const auto lat = bp_lattice(static_cast<int>(state.range(0)));
  FockBasis b(lat, ParticleContent::bosons(2));
  const auto h = build_hamiltonian(lat, b);
  const Propagator prop(h, 1e-10);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(b.dimension());
  v.normalize();
  for (auto _ : state) {
    auto out = prop.evolve(v, 1.0);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(bm_chebyshev_unit_time)->Arg(100)->Arg(200);

void bm_junction_solve(benchmark::State& state) {
  const auto jc = bp_scattering_chain(1.0, std::pow(2.0, 0.25), 40, 40);
  double k0 = 0.9;
  for (auto _ : state) {
    const auto s = junction_scattering(jc.chain, k0);
    benchmark::DoNotOptimize(s.transmission());
    k0 = 0.8 + std::fmod(k0, 0.7);  // wander over the band
  }
}
BENCHMARK(bm_junction_solve);

}  // namespace

BENCHMARK_MAIN();

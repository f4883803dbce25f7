#include "hublat/effective.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hublat/csv.hpp"

namespace hublat {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;

int floordiv3(int x) { return x >= 0 ? x / 3 : -((-x + 2) / 3); }
int mod3(int x) { return x - 3 * floordiv3(x); }
}  // namespace

SparseOperator EffectiveChainSpec::to_operator() const {
  std::vector<Triplet> trip;
  const int n = n_sites;
  const int nb = topology == Topology::ring ? n : n - 1;
  if (static_cast<int>(bond_hopping.size()) != nb)
    throw std::invalid_argument("bond_hopping size mismatch");
  for (int i = 0; i < nb; ++i) {
    if (bond_hopping[i] == 0.0) continue;
    const int j = (i + 1) % n;
    trip.push_back({i, j, Complex(-bond_hopping[i])});
    trip.push_back({j, i, Complex(-bond_hopping[i])});
  }
  for (const auto& b : extra_bonds) {
    if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n)
      throw std::invalid_argument("extra bond site out of range");
    trip.push_back({b.a, b.b, Complex(-b.hopping)});
    trip.push_back({b.b, b.a, Complex(-b.hopping)});
  }
  for (int i = 0; i < static_cast<int>(onsite.size()); ++i)
    if (onsite[i] != 0.0) trip.push_back({i, i, Complex(onsite[i])});
  return SparseOperator::from_triplets(n, std::move(trip));
}

std::string EffectiveChainSpec::to_json() const {
  std::ostringstream os;
  const char* topo = topology == Topology::ring          ? "ring"
                     : topology == Topology::open_chain ? "open_chain"
                                                        : "side_segment";
  os << "{\"topology\":\"" << topo << "\",\"n_sites\":" << n_sites << ",\"bonds\":[";
  const int nb = topology == Topology::ring ? n_sites : n_sites - 1;
  for (int i = 0; i < nb; ++i) {
    if (i) os << ",";
    os << "[" << i << "," << (i + 1) % n_sites << "," << format_g17(bond_hopping[i])
       << "]";
  }
  for (const auto& b : extra_bonds)
    os << ",[" << b.a << "," << b.b << "," << format_g17(b.hopping) << "]";
  os << "],\"onsite\":[";
  for (int i = 0; i < n_sites; ++i) {
    if (i) os << ",";
    os << format_g17(i < static_cast<int>(onsite.size()) ? onsite[i] : 0.0);
  }
  os << "]}";
  return os.str();
}

Eigen::VectorXcd BasisMap::embed(const Eigen::VectorXcd& eff) const {
  if (eff.size() != static_cast<long>(fock_index.size()))
    throw std::invalid_argument("effective vector size mismatch");
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(basis->dimension());
  for (int l = 0; l < eff.size(); ++l) full[fock_index[l]] += gauge[l] * eff[l];
  return full;
}

std::pair<Eigen::VectorXcd, double> BasisMap::project(const Eigen::VectorXcd& full) const {
  if (full.size() != basis->dimension())
    throw std::invalid_argument("full vector size mismatch");
  Eigen::VectorXcd eff(fock_index.size());
  for (std::size_t l = 0; l < fock_index.size(); ++l)
    eff[l] = gauge[l] * full[fock_index[l]];
  const double residual2 = std::max(full.squaredNorm() - eff.squaredNorm(), 0.0);
  return {eff, std::sqrt(residual2)};
}

namespace {
void check_injective(const BasisMap& map) {
  std::set<int> seen;
  for (int i : map.fock_index)
    if (!seen.insert(i).second) throw std::logic_error("basis map is not injective");
}
}  // namespace

std::pair<EffectiveChainSpec, BasisMap> bp_ring(const FockBasis& basis, double t,
                                                double u) {
  if (basis.statistics() != Statistics::boson || basis.content().n_bosons != 2)
    throw std::invalid_argument("bp_ring needs a two-boson basis");
  const int N = basis.n_sites();
  EffectiveChainSpec chain;
  chain.topology = EffectiveChainSpec::Topology::ring;
  chain.n_sites = 2 * N;
  chain.bond_hopping.assign(2 * N, kSqrt2 * t);

  BasisMap map;
  map.basis = &basis;
  map.diagonal_energy = u;
  map.fock_index.resize(2 * N);
  map.gauge.assign(2 * N, 1.0);
  for (int l = 0; l < 2 * N; ++l) {
    if (l % 2 == 0) {
      const int j = l / 2;
      map.fock_index[l] = basis.index(FockState::bosons({j, j}));
    } else {
      const int j = (l - 1) / 2;
      map.fock_index[l] = basis.index(FockState::bosons({j, (j + 1) % N}));
    }
  }
  check_injective(map);
  return {chain, map};
}

JunctionChain bp_scattering_chain(double t, double t0, int n_left, int n_right) {
  if (n_left < 2 || n_right < 2) throw std::invalid_argument("leads too short");
  JunctionChain jc;
  jc.origin_index = n_left;  // chain index of l = 0
  auto& chain = jc.chain;
  chain.topology = EffectiveChainSpec::Topology::open_chain;
  chain.n_sites = n_left + n_right;
  chain.bond_hopping.assign(chain.n_sites - 1, 0.0);
  for (int idx = 0; idx + 1 < chain.n_sites; ++idx) {
    const int l = idx + 1 - n_left;  // junction-relative index of the bond's right site
    chain.bond_hopping[idx] = l <= -1 ? kSqrt2 * t : (l == 0 ? t0 : t);
  }
  return jc;
}

BasisMap bp_scattering_map(const FockBasis& basis, int phys_origin, int n_left,
                           int n_right, double u) {
  if (basis.statistics() != Statistics::boson || basis.content().n_bosons != 2)
    throw std::invalid_argument("bp_scattering_map needs a two-boson basis");
  const int N = basis.n_sites();
  BasisMap map;
  map.basis = &basis;
  map.diagonal_energy = u;
  map.fock_index.resize(n_left + n_right);
  map.gauge.assign(n_left + n_right, 1.0);
  auto site_ok = [&](int s) {
    if (s < 0 || s >= N)
      throw std::invalid_argument("effective chain does not fit the lattice");
    return s;
  };
  for (int idx = 0; idx < n_left + n_right; ++idx) {
    const int l = idx - n_left;
    FockState st;
    if (l < 0) {
      if (l % 2 == 0) {
        const int j = site_ok(phys_origin + l / 2);
        st = FockState::bosons({j, j});
      } else {
        const int a = site_ok(phys_origin + (l - 1) / 2);
        const int b = site_ok(phys_origin + (l + 1) / 2);
        st = FockState::bosons({a, b});
      }
    } else {
      const int a = site_ok(phys_origin - l - 1);
      const int b = site_ok(phys_origin + 1);
      st = FockState::bosons({a, b});
    }
    map.fock_index[idx] = basis.index(st);
  }
  check_injective(map);
  return map;
}

EffectiveChainSpec bt_chain_spec(int n_cells, double t) {
  if (n_cells < 2) throw std::invalid_argument("need at least 2 cells");
  EffectiveChainSpec chain;
  chain.topology = EffectiveChainSpec::Topology::ring;
  chain.n_sites = 3 * n_cells;
  chain.bond_hopping.assign(chain.n_sites, 0.0);
  for (int l = 0; l < chain.n_sites; ++l)
    chain.bond_hopping[l] = (l % 3 == 1) ? 2.0 * t : kSqrt2 * t;
  return chain;
}

std::pair<EffectiveChainSpec, BasisMap> bt_chain(const FockBasis& basis, double t,
                                                 double v) {
  if (basis.statistics() != Statistics::boson || basis.content().n_bosons != 3)
    throw std::invalid_argument("bt_chain needs a three-boson basis");
  const int N = basis.n_sites();
  EffectiveChainSpec chain = bt_chain_spec(N, t);
  BasisMap map;
  map.basis = &basis;
  map.diagonal_energy = 2.0 * v;
  map.fock_index.resize(3 * N);
  map.gauge.assign(3 * N, 1.0);
  auto wrap = [&](int s) { return ((s % N) + N) % N; };
  for (int l = 0; l < 3 * N; ++l) {
    FockState st;
    if (mod3(l) == 0) {
      const int c = l / 3;
      st = FockState::bosons({wrap(c - 1), wrap(c), wrap(c + 1)});
    } else if (mod3(l) == 1) {
      const int c = (l - 1) / 3;
      st = FockState::bosons({wrap(c), wrap(c), wrap(c + 1)});
    } else {
      const int c = (l - 2) / 3;
      st = FockState::bosons({wrap(c), wrap(c + 1), wrap(c + 1)});
    }
    map.fock_index[l] = basis.index(st);
  }
  check_injective(map);
  return {chain, map};
}

JunctionChain bt_scattering_chain(double t, int n_left, int n_right) {
  if (n_left < 6 || n_left % 3 != 0)
    throw std::invalid_argument("n_left must be a positive multiple of 3 (>= 6)");
  if (n_right < 2) throw std::invalid_argument("right lead too short");
  // chain index idx corresponds to junction-relative index l = idx - (n_left - 3),
  // so the left part covers l in [3 - n_left, 2] and the right part
  // l in [3, 2 + n_right].
  const int offset = n_left - 3;
  JunctionChain jc;
  jc.origin_index = offset;
  auto& chain = jc.chain;
  chain.topology = EffectiveChainSpec::Topology::side_segment;
  chain.n_sites = n_left + n_right;
  chain.bond_hopping.assign(chain.n_sites - 1, 0.0);
  for (int idx = 0; idx + 1 < chain.n_sites; ++idx) {
    const int l = idx + 1 - offset;  // junction-relative index of the bond's right site
    if (l <= 2)
      chain.bond_hopping[idx] = kSqrt2 * t;
    else if (l == 3)
      chain.bond_hopping[idx] = 0.0;  // the side segment hangs off site 1
    else
      chain.bond_hopping[idx] = 2.0 * t;
  }
  chain.extra_bonds.push_back({offset, offset + 3, kSqrt2 * t});
  for (int j = 0; 3 * j + 1 >= 3 - n_left; --j) {
    const int a = 3 * j + 1 + offset;
    const int b = 3 * j + 2 + offset;
    if (a < 0) break;
    chain.extra_bonds.push_back({a, b, (2.0 - kSqrt2) * t});
  }
  return jc;
}

BasisMap bt_scattering_map(const FockBasis& basis, int phys_origin, int n_left,
                           int n_right, double v) {
  if (basis.statistics() != Statistics::boson || basis.content().n_bosons != 3)
    throw std::invalid_argument("bt_scattering_map needs a three-boson basis");
  const int N = basis.n_sites();
  const int offset = n_left - 3;
  BasisMap map;
  map.basis = &basis;
  map.diagonal_energy = 2.0 * v;
  map.fock_index.resize(n_left + n_right);
  map.gauge.assign(n_left + n_right, 1.0);
  auto site_ok = [&](int s) {
    if (s < 0 || s >= N)
      throw std::invalid_argument("effective chain does not fit the lattice");
    return s;
  };
  for (int idx = 0; idx < n_left + n_right; ++idx) {
    const int l = idx - offset;
    FockState st;
    if (l <= 2) {
      if (mod3(l) == 0) {
        const int c = phys_origin + l / 3;
        st = FockState::bosons({site_ok(c - 1), site_ok(c), site_ok(c + 1)});
      } else if (mod3(l) == 1) {
        const int c = phys_origin + (l - 1) / 3;
        st = FockState::bosons({site_ok(c), site_ok(c), site_ok(c + 1)});
      } else {
        const int c = phys_origin + (l - 2) / 3;
        st = FockState::bosons({site_ok(c), site_ok(c + 1), site_ok(c + 1)});
      }
    } else {
      st = FockState::bosons({site_ok(phys_origin - 1), site_ok(phys_origin),
                              site_ok(phys_origin + l - 1)});
    }
    map.fock_index[idx] = basis.index(st);
  }
  check_injective(map);
  return map;
}

}  // namespace hublat

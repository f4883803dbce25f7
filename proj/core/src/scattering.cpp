#include "hublat/scattering.hpp"

#include <Eigen/Dense>

#include "hublat/band.hpp"
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hublat {

using std::numbers::pi;
using Cplx = std::complex<double>;

double PlaneWaveScattering::transmission() const {
  if (evanescent || flux_left == 0.0) return 0.0;
  return flux_right / flux_left * std::norm(t_amp);
}

double PlaneWaveScattering::unitarity_defect() const {
  return std::abs(std::norm(r) + transmission() - 1.0);
}

namespace {

double onsite_at(const EffectiveChainSpec& chain, int l) {
  return l < static_cast<int>(chain.onsite.size()) ? chain.onsite[l] : 0.0;
}

// transmitted-wave factor z solving tR z^2 + E z + tR = 0
Cplx right_factor(double e, double t_r, bool* evanescent, double* k_right) {
  if (std::abs(e) < 2.0 * std::abs(t_r)) {
    *evanescent = false;
    *k_right = std::acos(-e / (2.0 * t_r));
    return std::exp(Cplx(0.0, *k_right));
  }
  *evanescent = true;
  *k_right = 0.0;
  const double disc = std::sqrt(e * e - 4.0 * t_r * t_r);
  const double z1 = (-e + disc) / (2.0 * t_r);
  const double z2 = (-e - disc) / (2.0 * t_r);
  return Cplx(std::abs(z1) < std::abs(z2) ? z1 : z2);
}

}  // namespace

PlaneWaveScattering junction_scattering(const EffectiveChainSpec& chain, double k0) {
  if (chain.topology == EffectiveChainSpec::Topology::ring)
    throw std::invalid_argument("junction scattering needs an open chain");
  if (!(k0 > 0.0 && k0 < pi)) throw std::invalid_argument("k0 must lie in (0, pi)");
  const int n = chain.n_sites;
  if (n < 4) throw std::invalid_argument("chain too short for leads");
  const double t_l = chain.bond_hopping.front();
  const double t_r = chain.bond_hopping.back();
  if (t_l <= 0.0 || t_r <= 0.0)
    throw std::invalid_argument("lead hoppings must be positive");

  // scatterer window [a, m]: everything strictly outside is pure lead
  int a = n - 2;
  for (int l = 0; l < n - 2; ++l)
    if (chain.bond_hopping[l] != t_l || onsite_at(chain, l) != 0.0) {
      a = l;
      break;
    }
  int m = 1;
  for (int l = n - 2; l >= 1; --l)
    if (chain.bond_hopping[l] != t_r || onsite_at(chain, l + 1) != 0.0) {
      m = l + 1;
      break;
    }
  for (const auto& b : chain.extra_bonds) {
    a = std::min({a, b.a, b.b});
    m = std::max({m, b.a, b.b});
  }
  a = std::max(a, 1);
  m = std::min(m, n - 2);
  if (m <= a) {  // no scatterer: match across an interior bond
    a = std::max(1, std::min(a, n - 3));
    m = a + 1;
  }

  const double e = -2.0 * t_l * std::cos(k0);
  PlaneWaveScattering out;
  out.k0 = k0;
  const Cplx z = right_factor(e, t_r, &out.evanescent, &out.k_right);

  // unknowns: r, t, psi_{a+1} .. psi_{m-1}
  const int n_unk = 2 + (m - 1 - a);
  const int n_eq = m - a + 1;
  if (n_eq != n_unk) throw std::logic_error("scattering system is not square");
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n_eq, n_unk);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n_eq);

  // psi_j = const + sum_u coeff_u x_u
  auto add_site = [&](int row, int j, Cplx weight) {
    if (j < a) {
      rhs(row) -= weight * std::exp(Cplx(0.0, k0 * (j - a)));
      mat(row, 0) += weight * std::exp(Cplx(0.0, -k0 * (j - a)));
    } else if (j == a) {
      rhs(row) -= weight;
      mat(row, 0) += weight;
    } else if (j < m) {
      mat(row, 2 + (j - a - 1)) += weight;
    } else {
      mat(row, 1) += weight * std::pow(z, j - m);
    }
  };

  for (int l = a; l <= m; ++l) {
    const int row = l - a;
    add_site(row, l, Cplx(onsite_at(chain, l) - e));
    if (l - 1 >= 0) add_site(row, l - 1, Cplx(-chain.bond_hopping[l - 1]));
    if (l + 1 <= n - 1) add_site(row, l + 1, Cplx(-chain.bond_hopping[l]));
    for (const auto& b : chain.extra_bonds) {
      if (b.a == l) add_site(row, b.b, Cplx(-b.hopping));
      if (b.b == l) add_site(row, b.a, Cplx(-b.hopping));
    }
  }

  Eigen::VectorXcd x = mat.fullPivLu().solve(rhs);
  out.r = x(0);
  out.t_amp = x(1);
  out.flux_left = 2.0 * t_l * std::sin(k0);
  out.flux_right = out.evanescent ? 0.0 : 2.0 * t_r * std::sin(out.k_right);
  return out;
}

PlaneWaveScattering junction_scattering_right(const EffectiveChainSpec& chain,
                                              double k0) {
  EffectiveChainSpec mirror = chain;
  const int n = chain.n_sites;
  std::reverse(mirror.bond_hopping.begin(), mirror.bond_hopping.end());
  mirror.onsite.assign(n, 0.0);
  for (int i = 0; i < static_cast<int>(chain.onsite.size()); ++i)
    mirror.onsite[n - 1 - i] = chain.onsite[i];
  for (auto& b : mirror.extra_bonds) {
    b.a = n - 1 - b.a;
    b.b = n - 1 - b.b;
  }
  return junction_scattering(mirror, k0);
}

double bp_separation_closed_form(double k0) {
  if (!(k0 > 0.0 && k0 <= pi / 2.0))
    throw std::domain_error("k0 must lie in (0, pi/2]");
  if (k0 <= pi / 4.0) return 0.0;
  const double c = std::cos(k0);
  const double num = 1.0 - std::numbers::sqrt2 * c * c;
  const double den = std::sin(k0) * std::sqrt(std::abs(std::cos(2.0 * k0)));
  if (den == 0.0) return 2.0 / (1.0 + 1.0);  // k0 = pi/2: ratio -> 1
  return 2.0 / (1.0 + num / den);
}

double group_velocity(double k0, double t) {
  return -2.0 * std::numbers::sqrt2 * t * std::sin(k0);
}

TransmissionCurve sweep(const EffectiveChainSpec& chain, int n_points) {
  if (n_points < 2) throw std::invalid_argument("need at least two points");
  TransmissionCurve curve;
  const double lo = 1e-6, hi = pi - 1e-6;
  for (int i = 0; i < n_points; ++i) {
    const double k = lo + (hi - lo) * i / (n_points - 1);
    const auto s = junction_scattering(chain, k);
    curve.k0.push_back(k);
    curve.p.push_back(s.transmission());
    curve.v_g.push_back(s.flux_left);
  }
  return curve;
}

namespace {

// single-step transfer (psi_{l+1}, psi_l) = T (psi_l, psi_{l-1}) on the
// trimerized lead; bond(l, l+1) = 2t when mod(l,3) == 1, sqrt2 t else
Eigen::Matrix2cd lead_step(double e, double t, int l) {
  const int m = ((l % 3) + 3) % 3;
  const double t_next = m == 1 ? 2.0 * t : std::numbers::sqrt2 * t;
  const int mp = (((l - 1) % 3) + 3) % 3;
  const double t_prev = mp == 1 ? 2.0 * t : std::numbers::sqrt2 * t;
  Eigen::Matrix2cd step;
  step << Cplx(-e / t_next), Cplx(-t_prev / t_next), Cplx(1.0), Cplx(0.0);
  return step;
}

double bond_current(double hop, Cplx left, Cplx right) {
  return 2.0 * hop * std::imag(std::conj(left) * right);
}

struct LeadWave {
  Eigen::Vector2cd seed;  // (psi_0, psi_{-1})
  double current = 0.0;   // across bond (-1, 0)
};

// propagating lead solutions at energy e; first rightward, then leftward
std::pair<LeadWave, LeadWave> lead_waves(double e, double t) {
  const Eigen::Matrix2cd period = lead_step(e, t, 2) * lead_step(e, t, 1) *
                                  lead_step(e, t, 0);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(period);
  LeadWave fwd, bwd;
  bool have_fwd = false, have_bwd = false;
  const double s2t = std::numbers::sqrt2 * t;
  for (int i = 0; i < 2; ++i) {
    if (std::abs(std::abs(es.eigenvalues()(i)) - 1.0) > 1e-8) continue;
    Eigen::Vector2cd v = es.eigenvectors().col(i);
    v.normalize();
    const double j = bond_current(s2t, v(1), v(0));
    if (j > 1e-12) {
      fwd.seed = v;
      fwd.current = j;
      have_fwd = true;
    } else if (j < -1e-12) {
      bwd.seed = v;
      bwd.current = j;
      have_bwd = true;
    }
  }
  if (!have_fwd || !have_bwd)
    throw std::invalid_argument("energy falls in a gap of the trimerized lead");
  // equal and opposite flux so |r|^2 is the reflection probability
  bwd.seed *= std::sqrt(fwd.current / -bwd.current);
  bwd.current = -fwd.current;
  return {fwd, bwd};
}

// values at l = 0 and l = -1 are the seed; extend backwards if needed
std::vector<Cplx> lead_profile(double e, double t, const LeadWave& w, int n_back) {
  std::vector<Cplx> psi(n_back + 1);
  Eigen::Vector2cd v = w.seed;  // (psi_{-j}, psi_{-j-1})
  psi[0] = v(0);
  for (int j = 1; j <= n_back; ++j) {
    v = lead_step(e, t, -j).fullPivLu().solve(v);
    psi[j] = v(0);
  }
  return psi;  // psi[j] = value at site -j
}

double fold_pi(double x) {
  while (x > pi) x -= 2.0 * pi;
  while (x <= -pi) x += 2.0 * pi;
  return x;
}

}  // namespace

PlaneWaveScattering bt_plane_wave_transmission(double t, double k0) {
  if (!(k0 > 0.0 && k0 < pi)) throw std::invalid_argument("k0 must lie in (0, pi)");
  const double cell_k = fold_pi(3.0 * k0);
  const auto band = trimer_band(cell_k, t);

  // pick the band branch whose rightward Bloch wave unfolds to k0
  double best_overlap = -1.0;
  double e = 0.0;
  LeadWave fwd, bwd;
  const int profile_len = 60;
  for (double root : band.roots) {
    std::pair<LeadWave, LeadWave> waves;
    try {
      waves = lead_waves(root, t);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto psi = lead_profile(root, t, waves.first, profile_len);
    Cplx overlap = 0.0;
    for (int j = 0; j <= profile_len; ++j)
      overlap += psi[j] * std::exp(Cplx(0.0, k0 * j));  // e^{-i k0 (-j)}
    if (std::abs(overlap) > best_overlap) {
      best_overlap = std::abs(overlap);
      e = root;
      fwd = waves.first;
      bwd = waves.second;
    }
  }
  if (best_overlap < 0.0)
    throw std::invalid_argument("no propagating lead state at this momentum");

  PlaneWaveScattering out;
  out.k0 = k0;
  const Cplx z = right_factor(e, 2.0 * t, &out.evanescent, &out.k_right);

  // junction geometry in lead coordinates: sites l <= 0 trimerized lead,
  // site 2 a stub on site 1, right lead l >= 3 with hopping 2t, and the
  // direct (0,3) link of sqrt2 t
  const double s2 = std::numbers::sqrt2 * t;
  const double d = 2.0 * t;
  const Cplx fp0 = fwd.seed(0), fpm = fwd.seed(1);
  const Cplx fm0 = bwd.seed(0), fmm = bwd.seed(1);

  Eigen::Matrix4cd mat = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();
  // unknowns: r, t_amp, psi_1, psi_2
  // site 0: (e) psi_0 + s2 psi_{-1} + s2 psi_1 + s2 psi_3 = 0
  mat(0, 0) = e * fm0 + s2 * fmm;
  mat(0, 1) = s2;
  mat(0, 2) = s2;
  rhs(0) = -(e * fp0 + s2 * fpm);
  // site 1: s2 psi_0 + e psi_1 + d psi_2 = 0
  mat(1, 0) = s2 * fm0;
  mat(1, 2) = e;
  mat(1, 3) = d;
  rhs(1) = -s2 * fp0;
  // site 2: d psi_1 + e psi_2 = 0
  mat(2, 2) = d;
  mat(2, 3) = e;
  // site 3: s2 psi_0 + (e + d z) psi_3 = 0
  mat(3, 0) = s2 * fm0;
  mat(3, 1) = e + d * z;
  rhs(3) = -s2 * fp0;

  Eigen::Vector4cd x = mat.fullPivLu().solve(rhs);
  out.r = x(0);
  out.t_amp = x(1);
  out.flux_left = fwd.current;
  out.flux_right = out.evanescent ? 0.0 : 2.0 * d * std::sin(out.k_right);
  return out;
}

}  // namespace hublat

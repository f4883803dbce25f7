#include "hublat/observables.hpp"

namespace hublat {
namespace obs {

namespace {
template <typename F>
std::vector<double> diag_from(const FockBasis& b, F&& f) {
  std::vector<double> d(b.dimension());
  for (int i = 0; i < b.dimension(); ++i) d[i] = f(b.state(i));
  return d;
}
}  // namespace

std::vector<double> site_number(const FockBasis& b, int site) {
  return diag_from(b, [&](const FockState& s) { return double(s.total_occ(site)); });
}

std::vector<double> total_number(const FockBasis& b) {
  return diag_from(b, [&](const FockState& s) {
    return double(s.n_boson + s.n_up + s.n_down);
  });
}

std::vector<double> double_occupancy(const FockBasis& b, int site) {
  if (b.statistics() == Statistics::boson)
    return diag_from(b, [&](const FockState& s) { return s.occ(site) >= 2 ? 1.0 : 0.0; });
  return diag_from(b, [&](const FockState& s) {
    return double(s.occ(site, Spin::up) * s.occ(site, Spin::down));
  });
}

std::vector<double> double_occupancy_total(const FockBasis& b) {
  std::vector<double> d(b.dimension(), 0.0);
  for (int site = 0; site < b.n_sites(); ++site) {
    auto ds = double_occupancy(b, site);
    for (int i = 0; i < b.dimension(); ++i) d[i] += ds[i];
  }
  return d;
}

std::vector<double> nn_pair(const FockBasis& b, int bond) {
  const int j = (bond + 1) % b.n_sites();
  return diag_from(b, [&](const FockState& s) {
    return (s.total_occ(bond) >= 1 && s.total_occ(j) >= 1) ? 1.0 : 0.0;
  });
}

std::vector<double> window(const FockBasis& b, int lo, int hi) {
  return diag_from(b, [&](const FockState& s) {
    for (int i = 0; i < s.n_boson; ++i)
      if (s.boson[i] < lo || s.boson[i] > hi) return 0.0;
    for (int i = 0; i < s.n_up; ++i)
      if (s.up[i] < lo || s.up[i] > hi) return 0.0;
    for (int i = 0; i < s.n_down; ++i)
      if (s.down[i] < lo || s.down[i] > hi) return 0.0;
    return 1.0;
  });
}

std::vector<double> spin_number(const FockBasis& b, int site, Spin sp) {
  return diag_from(b, [&](const FockState& s) { return double(s.occ(site, sp)); });
}

double expectation(const std::vector<double>& diag, const Eigen::VectorXcd& psi) {
  double acc = 0.0;
  for (int i = 0; i < psi.size(); ++i) acc += diag[i] * std::norm(psi[i]);
  return acc;
}

SparseOperator number_operator(const FockBasis& b) {
  return SparseOperator::diagonal(total_number(b));
}

}  // namespace obs
}  // namespace hublat

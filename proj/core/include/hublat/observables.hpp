#pragma once

#include <vector>

#include "hublat/fock.hpp"
#include "hublat/sparse.hpp"

namespace hublat {
namespace obs {

// All of these are diagonal in the Fock basis and returned as the
// diagonal vector; use expectation() or weight() to evaluate them.

std::vector<double> site_number(const FockBasis& b, int site);
std::vector<double> total_number(const FockBasis& b);
/// Indicator of >= 2 particles on `site` (fermions: both spins present).
std::vector<double> double_occupancy(const FockBasis& b, int site);
std::vector<double> double_occupancy_total(const FockBasis& b);
/// Indicator that both sites of bond (i, i+1) are occupied.
std::vector<double> nn_pair(const FockBasis& b, int bond);
/// Indicator that every particle sits inside [lo, hi].
std::vector<double> window(const FockBasis& b, int lo, int hi);
std::vector<double> spin_number(const FockBasis& b, int site, Spin s);

double expectation(const std::vector<double>& diag, const Eigen::VectorXcd& psi);

SparseOperator number_operator(const FockBasis& b);

}  // namespace obs
}  // namespace hublat

#pragma once

#include <utility>

#include "hublat/fock.hpp"
#include "hublat/measure.hpp"

namespace hublat {

/// Image of a two-boson state under the boson -> fermion rule
///   (a_j^+)^2 / sqrt2        -> c_ju^+ c_jd^+
///   a_i^+ a_j^+              -> (c_iu^+ c_jd^+ - c_id^+ c_ju^+) / sqrt2 ;
/// norm preserving, lands in the singlet sector of the (1 up, 1 down)
/// basis. Both bases must live on the same lattice size.
Eigen::VectorXcd fermi_map(const FockBasis& boson_basis,
                           const Eigen::VectorXcd& psi,
                           const FockBasis& fermi_basis);

/// Amplitude bookkeeping for c_{i,up}^+ c_{j,down}^+ |vac> in `basis`:
/// returns (index, sign).
std::pair<int, double> pair_state(const FockBasis& basis, int site_up,
                                  int site_down);

/// Total spin raising operator S+ = sum_i c_iu^+ c_id applied to a state
/// in `from` (n_up, n_down), landing in `to` (n_up+1, n_down-1).
Eigen::VectorXcd apply_spin_raise(const FockBasis& from, const FockBasis& to,
                                  const Eigen::VectorXcd& psi);

/// <S^2> for a state in the (1 up, 1 down) sector (where Sz = 0).
double s_squared(const FockBasis& basis, const Eigen::VectorXcd& psi);

/// Reduced two-spin analysis of the separated channel of a (1u,1d)
/// state: amplitudes over configurations {flying spin at j <= origin-1,
/// resident spin at origin+1}. Returns the channel weight and the
/// entanglement of the conditional two-spin state.
std::pair<double, Entanglement> separated_spin_entanglement(
    const FockBasis& basis, const Eigen::VectorXcd& psi, int origin);

}  // namespace hublat

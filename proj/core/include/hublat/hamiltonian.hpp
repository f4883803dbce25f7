#pragma once

#include "hublat/fock.hpp"
#include "hublat/sparse.hpp"

namespace hublat {

/// Assemble the extended Hubbard Hamiltonian of `lattice` over `basis`.
///
/// Bosons:   H = -sum_b t_b (a_i^+ a_j + h.c.) + sum_i U_i/2 n_i(n_i-1)
///               + V sum_i n_i n_{i+1} + sum_i v_i n_i
/// Fermions: H = -sum_{b,s} t_b (c_is^+ c_js + h.c.) + sum_i U_i n_iu n_id
///               + V sum_i n_i n_{i+1} + sum_i v_i n_i
///
/// with t_b, U_i, v_i resolved through the lattice's overrides and
/// impurity block. Bosonic hopping carries the sqrt(n+1) amplitude
/// factors; fermionic signs follow the basis' mode-ordering convention.
/// Throws std::invalid_argument if basis and lattice disagree on size.
SparseOperator build_hamiltonian(const LatticeSpec& lattice, const FockBasis& basis);

}  // namespace hublat

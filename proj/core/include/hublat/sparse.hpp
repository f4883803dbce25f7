#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hublat {

using Complex = std::complex<double>;

/// Number of worker threads for the sparse matvec, taken once from the
/// HUBLAT_THREADS environment variable (default 1). Row-partitioned, so
/// results are bit-identical at any thread count.
int thread_count();

struct Triplet {
  int row;
  int col;
  Complex value;
};

/// Hermitian sparse matrix in compressed-row storage. Assembled from a
/// coordinate list; duplicate entries are summed.
class SparseOperator {
 public:
  SparseOperator() = default;

  /// Assemble from triplets. If `require_hermitian` the assembled matrix
  /// is checked entrywise and a std::invalid_argument is thrown on
  /// violation beyond `tol`.
  static SparseOperator from_triplets(int dim, std::vector<Triplet> entries,
                                      bool require_hermitian = true,
                                      double tol = 1e-12);
  static SparseOperator diagonal(const std::vector<double>& d);
  static SparseOperator identity(int dim);

  int dimension() const { return dim_; }
  std::size_t nonzeros() const { return val_.size(); }

  void apply(const Complex* in, Complex* out) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd operator*(const Eigen::VectorXcd& v) const { return apply(v); }

  Eigen::MatrixXcd dense() const;

  /// Real spectral enclosure [lo, hi] from Gershgorin discs.
  std::pair<double, double> gershgorin() const;

  /// max_ij |A_ij - conj(A_ji)|.
  double hermiticity_defect() const;

  double expectation(const Eigen::VectorXcd& v) const;

 private:
  int dim_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> col_;
  std::vector<Complex> val_;
};

}  // namespace hublat

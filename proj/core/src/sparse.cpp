#include "hublat/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace hublat {

int thread_count() {
  static const int n = [] {
    const char* env = std::getenv("HUBLAT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
  }();
  return n;
}

SparseOperator SparseOperator::from_triplets(int dim, std::vector<Triplet> entries,
                                             bool require_hermitian, double tol) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  SparseOperator op;
  op.dim_ = dim;
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  op.row_ptr_.assign(dim + 1, 0);
  for (std::size_t i = 0; i < entries.size();) {
    const int r = entries[i].row, c = entries[i].col;
    if (r < 0 || r >= dim || c < 0 || c >= dim)
      throw std::invalid_argument("triplet index out of range");
    Complex v = 0.0;
    while (i < entries.size() && entries[i].row == r && entries[i].col == c)
      v += entries[i++].value;
    if (v != Complex(0.0)) {
      op.col_.push_back(c);
      op.val_.push_back(v);
      ++op.row_ptr_[r + 1];
    }
  }
  for (int r = 0; r < dim; ++r) op.row_ptr_[r + 1] += op.row_ptr_[r];
  if (require_hermitian && op.hermiticity_defect() > tol)
    throw std::invalid_argument("assembled operator is not Hermitian");
  return op;
}

SparseOperator SparseOperator::diagonal(const std::vector<double>& d) {
  std::vector<Triplet> t;
  t.reserve(d.size());
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    t.push_back({i, i, Complex(d[i])});
  return from_triplets(static_cast<int>(d.size()), std::move(t), false);
}

SparseOperator SparseOperator::identity(int dim) {
  return diagonal(std::vector<double>(dim, 1.0));
}

void SparseOperator::apply(const Complex* in, Complex* out) const {
  auto rows = [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      Complex acc = 0.0;
      for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) acc += val_[p] * in[col_[p]];
      out[r] = acc;
    }
  };
  const int nt = thread_count();
  if (nt <= 1 || dim_ < 4096) {
    rows(0, dim_);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (dim_ + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    int r0 = t * chunk, r1 = std::min(dim_, r0 + chunk);
    if (r0 >= r1) break;
    pool.emplace_back(rows, r0, r1);
  }
  for (auto& th : pool) th.join();
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in apply");
  Eigen::VectorXcd out(dim_);
  apply(v.data(), out.data());
  return out;
}

Eigen::MatrixXcd SparseOperator::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) m(r, col_[p]) += val_[p];
  return m;
}

std::pair<double, double> SparseOperator::gershgorin() const {
  double lo = 0.0, hi = 0.0;
  for (int r = 0; r < dim_; ++r) {
    double center = 0.0, radius = 0.0;
    for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      if (col_[p] == r)
        center += val_[p].real();
      else
        radius += std::abs(val_[p]);
    }
    lo = r == 0 ? center - radius : std::min(lo, center - radius);
    hi = r == 0 ? center + radius : std::max(hi, center + radius);
  }
  return {lo, hi};
}

double SparseOperator::hermiticity_defect() const {
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
      const int c = col_[p];
      // find (c, r)
      Complex vt = 0.0;
      for (int q = row_ptr_[c]; q < row_ptr_[c + 1]; ++q)
        if (col_[q] == r) {
          vt = val_[q];
          break;
        }
      worst = std::max(worst, std::abs(val_[p] - std::conj(vt)));
    }
  }
  return worst;
}

double SparseOperator::expectation(const Eigen::VectorXcd& v) const {
  return v.dot(apply(v)).real();
}

}  // namespace hublat

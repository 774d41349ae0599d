#pragma once

#include <utility>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

// Dense coefficient vector over the Gaussian rationals.
using QVec = std::vector<GaussianRational>;

// Sparse vector: (index, nonzero coefficient), sorted by index.
using SparseVec = std::vector<std::pair<int, GaussianRational>>;

SparseVec sparsify(const QVec& v);
QVec densify(const SparseVec& v, int dim);
void add_scaled(QVec& acc, const SparseVec& v, const GaussianRational& c);
bool sparse_equal(const SparseVec& a, const SparseVec& b);

struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<GaussianRational> a;  // row-major

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static QMatrix identity(int n);

  GaussianRational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const GaussianRational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const;

  QMatrix conj_transpose() const;
  bool is_hermitian() const;
  bool is_zero() const;

  // Matrix * column vector.
  QVec apply(const QVec& v) const;
  // Matrix * conj(column vector): how an antilinear map stored columnwise acts.
  QVec apply_antilinear(const QVec& v) const;

  GaussianRational trace() const;
};

int rank(QMatrix m);

// Exact positive definiteness of a Hermitian matrix via pivoted elimination
// (all elimination pivots strictly positive). Requires is_hermitian().
bool is_positive_definite(QMatrix m);

// Incremental row-echelon accumulator over the Gaussian rationals. Rows are
// reduced against stored pivots as they arrive, so rank queries on large,
// very sparse systems stay cheap.
class RowEchelon {
 public:
  explicit RowEchelon(int cols);

  // Returns true if the row was independent of the rows seen so far.
  bool add_row(SparseVec row);
  bool add_row(const QVec& row);

  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  int cols() const { return cols_; }

  // Basis of {x : R x = 0} for the accumulated row system R.
  std::vector<QVec> kernel_basis() const;

 private:
  int cols_;
  std::vector<SparseVec> pivot_rows_;    // leading coefficient normalized to 1
  std::vector<int> row_of_pivot_col_;    // column -> pivot row index, or -1
};

// Kernel of the dense linear system m x = 0.
std::vector<QVec> kernel_basis(const QMatrix& m);

}  // namespace gpd

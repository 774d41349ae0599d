#include "gpd/qlinalg.hpp"

#include <algorithm>
#include <cassert>

namespace gpd {

SparseVec sparsify(const QVec& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

QVec densify(const SparseVec& v, int dim) {
  QVec out(dim);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

void add_scaled(QVec& acc, const SparseVec& v, const GaussianRational& c) {
  for (const auto& [i, x] : v) acc[i] += c * x;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  assert(cols == o.rows);
  QMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const GaussianRational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  QMatrix out = *this;
  for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  QMatrix out = *this;
  for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
  return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

QMatrix QMatrix::conj_transpose() const {
  QMatrix out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

bool QMatrix::is_hermitian() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < cols; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

QVec QMatrix::apply(const QVec& v) const {
  assert(static_cast<int>(v.size()) == cols);
  QVec out(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

QVec QMatrix::apply_antilinear(const QVec& v) const {
  assert(static_cast<int>(v.size()) == cols);
  QVec out(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j].conj();
  return out;
}

GaussianRational QMatrix::trace() const {
  assert(rows == cols);
  GaussianRational t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

int rank(QMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    GaussianRational inv = gaussian_inverse(m.at(r, col));
    for (int j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

bool is_positive_definite(QMatrix m) {
  assert(m.is_hermitian());
  for (int k = 0; k < m.rows; ++k) {
    const GaussianRational& d = m.at(k, k);
    if (!d.is_real() || d.re <= 0) return false;
    Rational pivot = d.re;
    for (int i = k + 1; i < m.rows; ++i) {
      if (m.at(i, k).is_zero()) continue;
      GaussianRational f = m.at(i, k) * GaussianRational(Rational(1) / pivot);
      for (int j = k + 1; j < m.cols; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

RowEchelon::RowEchelon(int cols) : cols_(cols), row_of_pivot_col_(cols, -1) {}

bool RowEchelon::add_row(SparseVec row) {
  // Reduce against existing pivots until the leading column is pivot-free.
  QVec dense;
  bool densified = false;
  auto leading = [&]() -> int {
    if (!densified) return row.empty() ? -1 : row.front().first;
    for (int j = 0; j < cols_; ++j)
      if (!dense[j].is_zero()) return j;
    return -1;
  };
  auto coeff_at = [&](int j) -> GaussianRational { return densified ? dense[j] : row.front().second; };

  for (;;) {
    int lead = leading();
    if (lead < 0) return false;
    int prow = row_of_pivot_col_[lead];
    if (prow < 0) {
      // New pivot: normalize and store.
      SparseVec stored = densified ? sparsify(dense) : std::move(row);
      GaussianRational inv = gaussian_inverse(stored.front().second);
      for (auto& [j, c] : stored) c *= inv;
      row_of_pivot_col_[lead] = static_cast<int>(pivot_rows_.size());
      pivot_rows_.push_back(std::move(stored));
      return true;
    }
    if (!densified) {
      dense = densify(row, cols_);
      densified = true;
    }
    GaussianRational f = coeff_at(lead);
    add_scaled(dense, pivot_rows_[prow], -f);
  }
}

bool RowEchelon::add_row(const QVec& row) { return add_row(sparsify(row)); }

std::vector<QVec> RowEchelon::kernel_basis() const {
  // Fully reduce the pivot rows (stored rows are only in echelon form), then
  // read off the kernel from the free columns. Processing pivot columns in
  // ascending order means each new row already has zeros at all earlier
  // pivot columns; only the backward elimination is needed.
  std::vector<QVec> rref;
  std::vector<int> pivcols;
  for (int col = 0; col < cols_; ++col) {
    int prow = row_of_pivot_col_[col];
    if (prow < 0) continue;
    QVec r = densify(pivot_rows_[prow], cols_);
    for (size_t k = 0; k < rref.size(); ++k) {
      const GaussianRational f = rref[k][col];
      if (f.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) rref[k][j] -= f * r[j];
    }
    rref.push_back(std::move(r));
    pivcols.push_back(col);
  }
  std::vector<QVec> basis;
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivcols) is_pivot[c] = true;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols_);
    v[free] = GaussianRational(1);
    for (size_t k = 0; k < rref.size(); ++k) v[pivcols[k]] = -rref[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
  RowEchelon re(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    SparseVec row;
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) row.emplace_back(j, m.at(i, j));
    re.add_row(std::move(row));
  }
  return re.kernel_basis();
}

}  // namespace gpd

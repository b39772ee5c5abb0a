#include "pogroup/matrix.hpp"

#include <cassert>

#include "pogroup/error.hpp"

namespace pogroup {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const RatVec& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RatVec Matrix::col(std::size_t c) const {
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0)
      return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out(r, c) += a * rhs(k, c);
    }
  return out;
}

RatVec Matrix::operator*(const RatVec& v) const {
  if (cols_ != v.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shape");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "hstack row count");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix out(a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k)
      out(r, k) = a(r, cols[k]);
  return out;
}

std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0)
      ++p;
    if (p == a.rows())
      continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(p, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0)
        continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m).size();
}

Matrix kernel(const Matrix& a) {
  Matrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  Matrix k(a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    k(f, j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k(pivots[i], j) = -m(i, f);
  }
  return k;
}

Matrix column_basis(const Matrix& a) {
  Matrix m = a;
  return select_columns(a, rref(m));
}

Matrix intersect(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows())
    throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimensions differ");
  if (u.cols() == 0 || v.cols() == 0)
    return Matrix(u.rows(), 0);
  Matrix uu = column_basis(u);
  Matrix vv = column_basis(v);
  Matrix neg_v = vv;
  for (std::size_t r = 0; r < neg_v.rows(); ++r)
    for (std::size_t c = 0; c < neg_v.cols(); ++c)
      neg_v(r, c) = -neg_v(r, c);
  Matrix k = kernel(hstack(uu, neg_v));
  Matrix coeffs(uu.cols(), k.cols());
  for (std::size_t r = 0; r < uu.cols(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c)
      coeffs(r, c) = k(r, c);
  return column_basis(uu * coeffs);
}

bool contains(const Matrix& u, const Matrix& v) {
  if (v.cols() == 0)
    return true;
  return rank(hstack(u, v)) == rank(u);
}

bool same_span(const Matrix& u, const Matrix& v) {
  return contains(u, v) && contains(v, u);
}

Matrix preimage(const Matrix& a, const Matrix& s) {
  if (a.rows() != s.rows())
    throw Error(ErrorKind::DimensionMismatch, "preimage target dimension");
  Matrix neg_s = s;
  for (std::size_t r = 0; r < neg_s.rows(); ++r)
    for (std::size_t c = 0; c < neg_s.cols(); ++c)
      neg_s(r, c) = -neg_s(r, c);
  Matrix k = kernel(hstack(a, neg_s));
  Matrix x(a.cols(), k.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c)
      x(r, c) = k(r, c);
  return column_basis(x);
}

std::optional<Matrix> solve_in_basis(const Matrix& basis, const Matrix& y) {
  if (basis.rows() != y.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_in_basis shape");
  const std::size_t k = basis.cols();
  Matrix aug = hstack(basis, y);
  auto pivots = rref(aug);
  // Any pivot in the y block means some column is out of span.
  for (auto p : pivots)
    if (p >= k)
      return std::nullopt;
  assert(pivots.size() == k);
  Matrix x(k, y.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < y.cols(); ++c)
      x(i, c) = aug(i, k + c);
  return x;
}

Matrix complement_basis(const Matrix& sub) {
  const std::size_t n = sub.rows();
  Matrix current = column_basis(sub);
  std::vector<RatVec> added;
  for (std::size_t i = 0; i < n && current.cols() < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    Matrix trial = hstack(current, Matrix::column(e));
    if (rank(trial) > current.cols()) {
      current = trial;
      added.push_back(e);
    }
  }
  Matrix out(n, added.size());
  for (std::size_t c = 0; c < added.size(); ++c)
    for (std::size_t r = 0; r < n; ++r)
      out(r, c) = added[c][r];
  return out;
}

} // namespace pogroup

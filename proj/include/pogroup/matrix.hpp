#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pogroup/rational.hpp"

namespace pogroup {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix column(const RatVec& v);
  static Matrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  RatVec operator*(const RatVec& v) const;
  bool operator==(const Matrix& rhs) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [A | B], same row count.
Matrix hstack(const Matrix& a, const Matrix& b);
/// The columns of a selected by index.
Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of the null space, as columns (a.cols() x k).
Matrix kernel(const Matrix& a);

/// Independent columns spanning the column space (a.rows() x rank).
Matrix column_basis(const Matrix& a);

/// Subspaces below are given by spanning columns in a common ambient space.
Matrix intersect(const Matrix& u, const Matrix& v);
bool contains(const Matrix& u, const Matrix& v);
bool same_span(const Matrix& u, const Matrix& v);

/// {x : a x ∈ span(s)}, as a basis of columns in the source space of a.
Matrix preimage(const Matrix& a, const Matrix& s);

/// X with basis * X = y, where basis has independent columns;
/// nullopt if some column of y is outside the span.
std::optional<Matrix> solve_in_basis(const Matrix& basis, const Matrix& y);

/// Completes the independent columns of `sub` to a basis of the ambient
/// space; returns only the added columns (standard unit vectors).
Matrix complement_basis(const Matrix& sub);

} // namespace pogroup

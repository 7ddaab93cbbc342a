#pragma once

#include <cstddef>
#include <vector>

#include "cma/field.hpp"

namespace cma {

using Vec = std::vector<FieldElem>;

/// Dense row-major matrix over a FieldCtx. Most of the library works with
/// square matrices; rectangular shapes appear only as linear-system
/// coefficient matrices inside the kernel routines.
class Matrix {
 public:
  Matrix(FieldCtx ctx, std::size_t rows, std::size_t cols);
  /// Square n x n zero matrix.
  Matrix(FieldCtx ctx, std::size_t n) : Matrix(std::move(ctx), n, n) {}
  Matrix(FieldCtx ctx, std::vector<std::vector<FieldElem>> rows);

  static Matrix identity(const FieldCtx& ctx, std::size_t n);
  static Matrix from_ints(const FieldCtx& ctx, const std::vector<std::vector<long>>& rows);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Dimension of a square matrix.
  std::size_t n() const { return rows_; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator*(const Matrix& b) const;
  Matrix operator*(const FieldElem& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& b) const;
  bool operator!=(const Matrix& b) const { return !(*this == b); }

  Matrix transpose() const;
  bool is_zero() const;

 private:
  FieldCtx ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> a_;
};

/// Reduced row echelon form in place; returns the pivot columns. Over Q the
/// pivot in each column is the entry of smallest height.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {v : m v = 0}, one vector per free column of the RREF, with a 1
/// in that column.
std::vector<Vec> kernel_basis(const Matrix& m);
/// Throws NotInvertible.
Matrix inverse(const Matrix& m);
FieldElem determinant(Matrix m);

}  // namespace cma

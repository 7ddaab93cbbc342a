#include "cma/matrix.hpp"

namespace cma {

namespace {

void check_ctx(const Matrix& a, const Matrix& b) {
  if (a.ctx() != b.ctx()) throw Error(ErrorCode::CtxMismatch, "matrices over different fields");
}

std::size_t height(const FieldElem& e) {
  const mpq_class& q = e.rational();
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

Matrix::Matrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, ctx_.zero()) {}

Matrix::Matrix(FieldCtx ctx, std::vector<std::vector<FieldElem>> rows)
    : ctx_(std::move(ctx)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  a_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (auto& e : r) a_.push_back(std::move(e));
  }
}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
  Matrix m(ctx, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

Matrix Matrix::from_ints(const FieldCtx& ctx, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElem>> out;
  for (const auto& r : rows) {
    std::vector<FieldElem> row;
    for (long v : r) row.push_back(ctx.from_int(v));
    out.push_back(std::move(row));
  }
  return Matrix(ctx, std::move(out));
}

Matrix Matrix::operator+(const Matrix& b) const {
  check_ctx(*this, b);
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  check_ctx(*this, b);
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& b) const {
  check_ctx(*this, b);
  if (cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
  Matrix r(ctx_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator*(const FieldElem& s) const {
  Matrix r = *this;
  for (auto& e : r.a_) e *= s;
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vec r(rows_, ctx_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

bool Matrix::operator==(const Matrix& b) const {
  return ctx_ == b.ctx_ && rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> rref(Matrix& m) {
  const bool rational = m.ctx().kind() == FieldKind::Rationals;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (best == m.rows()) {
        best = r;
        if (!rational) break;
      } else if (height(m(r, col)) < height(m(best, col))) {
        best = r;
      }
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    }
    const FieldElem inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    // columns right of `col` that are nonzero in the pivot row
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) support.push_back(j);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElem factor = m(r, col);
      for (std::size_t j : support) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), m.ctx().zero());
    v[free] = m.ctx().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!r(i, free).is_zero()) v[pivots[i]] = -r(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotInvertible, "non-square matrix");
  const std::size_t n = m.n();
  Matrix aug(m.ctx(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.ctx().one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::NotInvertible, "singular matrix");
  Matrix inv(m.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

FieldElem determinant(Matrix m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.n();
  FieldElem det = m.ctx().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return m.ctx().zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const FieldElem inv = m(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElem f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

}  // namespace cma

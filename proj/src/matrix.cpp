#include "torsionlab/matrix.hpp"

#include <cassert>
#include <string>

#include "torsionlab/error.hpp"

namespace torsionlab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::SizeMismatch, "matrix entry count");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.data_[i] = field.from_int(entries[i]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorCode::SizeMismatch,
                "product of " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " and " +
                    std::to_string(rhs.rows_) + "x" +
                    std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (field_.is_zero(b)) continue;
        out(i, j) = field_.add(out(i, j), field_.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix sum");
  }
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix difference");
  }
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.mul(data_[i], s);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!field_.is_zero(s)) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !field_.is_one(s) : !field_.is_zero(s)) return false;
    }
  }
  return true;
}

Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  assert(r0 + nr <= rows_ && c0 + nc <= cols_);
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  assert(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error(ErrorCode::SizeMismatch, "stack");
  Matrix out(field_, rows_ + below.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, below);
  return out;
}

void Matrix::append_row(const Matrix& row) {
  if (rows_ == 0 && cols_ == 0) {
    *this = row;
    return;
  }
  if (row.cols_ != cols_) throw Error(ErrorCode::SizeMismatch, "append_row");
  data_.insert(data_.end(), row.data_.begin(), row.data_.end());
  rows_ += row.rows_;
}

RowEchelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && f.is_zero(a(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    Scalar pinv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), pinv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || f.is_zero(a(i, col))) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (f.is_zero(a(row, j))) continue;
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{a.block(0, 0, row, a.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix right_kernel(const Matrix& m) {
  const Field& f = m.field();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::size_t nfree = m.cols() - e.pivots.size();
  Matrix out(f, nfree, m.cols());
  std::size_t k = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    out(k, col) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      out(k, e.pivots[r]) = f.neg(e.reduced(r, col));
    }
    ++k;
  }
  return out;
}

Matrix left_kernel(const Matrix& m) {
  Matrix k = right_kernel(m.transpose());
  if (k.rows() == 0) return Matrix(m.field(), 0, m.rows());
  return rref(k).reduced;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::SizeMismatch, "inverse of non-square");
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

Matrix stable_power(const Matrix& m) {
  Matrix power = m;
  std::size_t r = rank(power);
  while (true) {
    Matrix next = power * m;
    std::size_t nr = rank(next);
    if (nr == r) return power;
    power = std::move(next);
    r = nr;
  }
}

bool is_nilpotent(const Matrix& m) {
  if (m.rows() == 0) return true;
  return stable_power(m).is_zero();
}

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(field, 0, ambient) {}

Subspace Subspace::span(const Matrix& rows, std::size_t ambient) {
  Subspace s(rows.field(), ambient);
  if (rows.rows() == 0) return s;
  if (rows.cols() != ambient) throw Error(ErrorCode::SizeMismatch, "span");
  RowEchelon e = rref(rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return span(Matrix::identity(field, ambient), ambient);
}

Matrix Subspace::coordinates(const Matrix& vectors) const {
  Matrix out(field_, vectors.rows(), dim());
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    for (std::size_t k = 0; k < dim(); ++k) out(i, k) = vectors(i, pivots_[k]);
  }
  return out;
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() == 0) return true;
  // v lies in the span iff v equals its reconstruction from pivot entries.
  Matrix recon = coordinates(vectors) * basis_;
  if (dim() == 0) return vectors.is_zero();
  return recon == vectors;
}

bool Subspace::contains(const Subspace& other) const {
  return contains(other.basis_);
}

Subspace Subspace::sum(const Subspace& other) const {
  return span(basis_.stacked(other.basis_), ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (dim() == 0 || other.dim() == 0) return Subspace(field_, ambient_);
  Matrix both = basis_.stacked(other.basis_);
  Matrix k = left_kernel(both);
  if (k.rows() == 0) return Subspace(field_, ambient_);
  Matrix a = k.block(0, 0, k.rows(), dim());
  return span(a * basis_, ambient_);
}

Matrix Subspace::complement_basis() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  Matrix out(field_, ambient_ - dim(), ambient_);
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) out(k++, c) = field_.one();
  }
  return out;
}

Matrix Subspace::quotient_map() const {
  std::vector<std::size_t> free_cols;
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix q(field_, ambient_, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) q(free_cols[j], j) = field_.one();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      q(pivots_[k], j) = field_.neg(basis_(k, free_cols[j]));
    }
  }
  return q;
}

}  // namespace torsionlab

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torsionlab/field.hpp"

namespace torsionlab {

// Dense matrix over an exact field. Vectors are rows and a matrix acts on
// the right: v |-> v * M. A d x e matrix is therefore a map from a
// d-dimensional space to an e-dimensional one.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          const std::vector<std::int64_t>& entries);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix row(std::size_t r) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  // Vertical concatenation; both must have the same column count.
  Matrix stacked(const Matrix& below) const;
  void append_row(const Matrix& row);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                   // nonzero rows of the RREF
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {v : v * m = 0}, rows in reduced echelon form.
Matrix left_kernel(const Matrix& m);
// Basis of {x : m * x^T = 0}, one solution per row.
Matrix right_kernel(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
bool is_nilpotent(const Matrix& m);
// Smallest power k with rank(m^k) == rank(m^(k+1)), together with m^k.
Matrix stable_power(const Matrix& m);

// A subspace of field^ambient kept as a reduced echelon basis, which makes
// membership, coordinates and complements cheap and canonical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient);  // zero subspace
  static Subspace span(const Matrix& rows, std::size_t ambient);
  static Subspace whole(Field field, std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const Field& field() const noexcept { return field_; }

  bool contains(const Matrix& vectors) const;
  bool contains(const Subspace& other) const;
  // Coordinates of rows (which must lie in the subspace) w.r.t. basis().
  Matrix coordinates(const Matrix& vectors) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Unit vectors on the non-pivot columns; spans a complement.
  Matrix complement_basis() const;
  // ambient x (ambient - dim) matrix sending v to the coordinates of
  // v + this in the complement basis.
  Matrix quotient_map() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace torsionlab

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "abel/scalar.hpp"

namespace abel {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(sqrt D).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Builds a matrix from a list of equally long rows.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Scalar> row);

  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are the first nonzero entry of each
/// column scan, so the result is deterministic. `pivots` receives the pivot
/// column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column; the free
/// coordinate is 1 and the other free coordinates are 0.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Rows of the RREF of the stacked vectors: a canonical basis of their span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);

/// True iff span(a) == span(b).
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);

}  // namespace abel

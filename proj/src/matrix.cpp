#include "abel/matrix.hpp"

#include <utility>

#include "abel/error.hpp"

namespace abel {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match shape");
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> row) {
  if (row.size() != cols_) throw DomainError("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix width");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].add_product((*this)(r, c), v[c]);
  return out;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::size_t lead_row = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(Matrix::from_rows(vectors, dim), &pivots);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto row = r.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

}  // namespace abel

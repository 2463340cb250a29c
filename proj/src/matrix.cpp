#include "packinglab/matrix.hpp"

#include <utility>

#include "packinglab/error.hpp"

namespace packinglab {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<QuadExt>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<QuadExt> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// Reduces m in place to reduced row echelon form; returns the rank.
std::size_t row_reduce(Matrix& m, Matrix* companion) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
      if (companion) {
        for (std::size_t j = 0; j < companion->cols(); ++j)
          std::swap((*companion)(pivot, j), (*companion)(rank, j));
      }
    }
    const QuadExt inv = m(rank, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) *= inv;
    if (companion) {
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(rank, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      const QuadExt f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
      if (companion) {
        for (std::size_t j = 0; j < companion->cols(); ++j)
          (*companion)(i, j) -= f * (*companion)(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix work = *this;
  Matrix inv = identity(rows_);
  if (row_reduce(work, &inv) != rows_) return std::nullopt;
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix work = *this;
  return row_reduce(work, nullptr);
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

Matrix& Matrix::operator*=(const QuadExt& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  }
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QuadExt& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::vector<QuadExt> operator*(const std::vector<QuadExt>& v, const Matrix& m) {
  if (v.size() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "vector-matrix shape mismatch");
  }
  std::vector<QuadExt> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  }
  return out;
}

std::vector<QuadExt> operator*(const Matrix& m, const std::vector<QuadExt>& v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<QuadExt> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

QuadExt dot(const std::vector<QuadExt>& a, const std::vector<QuadExt>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot product length mismatch");
  }
  QuadExt s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace packinglab

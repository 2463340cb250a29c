#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "packinglab/exactnum.hpp"

namespace packinglab {

/// Dense row-major matrix over QuadExt.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<QuadExt>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  QuadExt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadExt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<QuadExt> row(std::size_t i) const;

  Matrix transpose() const;
  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;
  bool is_symmetric() const;
  bool is_rational() const;

  Matrix& operator*=(const QuadExt& s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadExt> data_;
};

/// Row vector times matrix.
std::vector<QuadExt> operator*(const std::vector<QuadExt>& v, const Matrix& m);
/// Matrix times column vector.
std::vector<QuadExt> operator*(const Matrix& m, const std::vector<QuadExt>& v);

QuadExt dot(const std::vector<QuadExt>& a, const std::vector<QuadExt>& b);

}  // namespace packinglab

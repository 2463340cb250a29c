#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "packinglab/exactnum.hpp"
#include "packinglab/matrix.hpp"

namespace packinglab {

/// Symmetric matrix of inversive products. Off-diagonal entries may be left
/// open (nullopt) for disjoint pairs whose exact product is not yet known; such
/// placeholders are read as "> 1".
class GramMatrix {
 public:
  GramMatrix() = default;
  /// k x k with -1 on the diagonal and 0 elsewhere.
  explicit GramMatrix(std::size_t k);
  static GramMatrix from_matrix(const Matrix& m);

  std::size_t size() const noexcept { return k_; }
  const std::optional<QuadExt>& at(std::size_t i, std::size_t j) const {
    return data_[i * k_ + j];
  }
  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, std::optional<QuadExt> value);

  bool has_placeholders() const;
  bool is_symmetric() const;
  /// Throws InvalidInput when a placeholder is present.
  Matrix to_matrix() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<std::optional<QuadExt>> data_;
};

}  // namespace packinglab

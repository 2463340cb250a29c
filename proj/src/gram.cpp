#include "packinglab/gram.hpp"

#include "packinglab/error.hpp"

namespace packinglab {

GramMatrix::GramMatrix(std::size_t k) : k_(k), data_(k * k, QuadExt(0)) {
  for (std::size_t i = 0; i < k; ++i) data_[i * k + i] = QuadExt(-1);
}

GramMatrix GramMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  }
  GramMatrix g;
  g.k_ = m.rows();
  g.data_.reserve(g.k_ * g.k_);
  for (std::size_t i = 0; i < g.k_; ++i)
    for (std::size_t j = 0; j < g.k_; ++j) g.data_.emplace_back(m(i, j));
  return g;
}

void GramMatrix::set(std::size_t i, std::size_t j, std::optional<QuadExt> value) {
  data_[i * k_ + j] = value;
  data_[j * k_ + i] = std::move(value);
}

bool GramMatrix::has_placeholders() const {
  for (const auto& e : data_)
    if (!e) return true;
  return false;
}

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < k_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix GramMatrix::to_matrix() const {
  Matrix m(k_, k_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      const auto& e = at(i, j);
      if (!e) {
        throw Error(ErrorKind::InvalidInput,
                    "Gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is an unfilled placeholder");
      }
      m(i, j) = *e;
    }
  return m;
}

}  // namespace packinglab

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "packinglab/exactnum.hpp"
#include "packinglab/matrix.hpp"

namespace packinglab {

/// The form Q = [[0,1/2],[1/2,0]] (+) -I_n on (n+2)-vectors.
class QForm {
 public:
  explicit QForm(std::size_t dim);
  std::size_t dim() const noexcept { return dim_; }
  Matrix matrix() const;

 private:
  std::size_t dim_;
};

/// Oriented sphere or plane in R^n as (cobend, bend, bend*center).
class InversiveVector {
 public:
  InversiveVector() = default;
  explicit InversiveVector(std::vector<QuadExt> coords);
  InversiveVector(QuadExt cobend, QuadExt bend, std::vector<QuadExt> bz);

  std::size_t dim() const noexcept { return coords_.size() - 2; }
  const QuadExt& cobend() const { return coords_[0]; }
  const QuadExt& bend() const { return coords_[1]; }
  std::vector<QuadExt> bz() const { return {coords_.begin() + 2, coords_.end()}; }
  const std::vector<QuadExt>& coords() const noexcept { return coords_; }
  const QuadExt& operator[](std::size_t i) const { return coords_[i]; }

  bool is_plane() const { return coords_[1].is_zero(); }
  /// Center z = bz/b; requires a nonzero bend.
  std::vector<QuadExt> center() const;
  /// Signed radius 1/b; requires a nonzero bend.
  QuadExt radius() const;

  InversiveVector operator-() const;
  std::string str() const;

  friend bool operator==(const InversiveVector&, const InversiveVector&) = default;
  /// Lexicographic on coordinates under the real embedding.
  friend bool operator<(const InversiveVector& a, const InversiveVector& b);

 private:
  std::vector<QuadExt> coords_;
};

struct InversiveVectorHash {
  std::size_t operator()(const InversiveVector& v) const;
};

InversiveVector sphere_from_center_radius(const std::vector<QuadExt>& z, const QuadExt& r);
/// Hyperplane {x : x.normal = c}; the normal must be a unit vector.
InversiveVector plane_from_normal_offset(const std::vector<QuadExt>& normal, const QuadExt& c);

/// u Q v^T.
QuadExt inversive_product(const InversiveVector& u, const InversiveVector& v);
/// Q(v) = -1 exactly.
bool validate(const InversiveVector& v);

/// M = I + 2 Q s^T s, acting on row vectors from the right.
Matrix reflection_matrix(const InversiveVector& s);
/// v M for M = reflection_matrix(s), computed as v + 2<v,s> s.
InversiveVector reflect(const InversiveVector& v, const InversiveVector& s);
/// v M for a general (n+2)x(n+2) matrix.
InversiveVector act(const InversiveVector& v, const Matrix& m);

}  // namespace packinglab

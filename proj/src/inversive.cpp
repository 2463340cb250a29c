#include "packinglab/inversive.hpp"

#include <algorithm>

#include "packinglab/error.hpp"

namespace packinglab {

QForm::QForm(std::size_t dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
}

Matrix QForm::matrix() const {
  Matrix q(dim_ + 2, dim_ + 2);
  q(0, 1) = QuadExt::fraction(1, 2);
  q(1, 0) = QuadExt::fraction(1, 2);
  for (std::size_t i = 2; i < dim_ + 2; ++i) q(i, i) = -1;
  return q;
}

InversiveVector::InversiveVector(std::vector<QuadExt> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3) {
    throw Error(ErrorKind::DimensionMismatch, "inversive vector needs at least 3 entries");
  }
}

InversiveVector::InversiveVector(QuadExt cobend, QuadExt bend, std::vector<QuadExt> bz) {
  coords_.reserve(bz.size() + 2);
  coords_.push_back(std::move(cobend));
  coords_.push_back(std::move(bend));
  for (auto& x : bz) coords_.push_back(std::move(x));
  if (coords_.size() < 3) {
    throw Error(ErrorKind::DimensionMismatch, "inversive vector needs at least 3 entries");
  }
}

std::vector<QuadExt> InversiveVector::center() const {
  if (is_plane()) throw Error(ErrorKind::ZeroRadius, "a plane has no center");
  const QuadExt inv = bend().inverse();
  std::vector<QuadExt> z;
  for (std::size_t i = 2; i < coords_.size(); ++i) z.push_back(coords_[i] * inv);
  return z;
}

QuadExt InversiveVector::radius() const {
  if (is_plane()) throw Error(ErrorKind::ZeroRadius, "a plane has no radius");
  return bend().inverse();
}

InversiveVector InversiveVector::operator-() const {
  InversiveVector r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

std::string InversiveVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

bool operator<(const InversiveVector& a, const InversiveVector& b) {
  return std::lexicographical_compare(
      a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
      [](const QuadExt& x, const QuadExt& y) { return x < y; });
}

std::size_t InversiveVectorHash::operator()(const InversiveVector& v) const {
  std::size_t h = v.coords().size();
  for (const auto& x : v.coords()) h = h * 1000003u ^ x.hash();
  return h;
}

InversiveVector sphere_from_center_radius(const std::vector<QuadExt>& z, const QuadExt& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroRadius, "sphere radius is zero");
  const QuadExt b = r.inverse();
  QuadExt z2;
  std::vector<QuadExt> bz;
  for (const auto& x : z) {
    z2 += x * x;
    bz.push_back(b * x);
  }
  return InversiveVector(b * z2 - r, b, std::move(bz));
}

InversiveVector plane_from_normal_offset(const std::vector<QuadExt>& normal, const QuadExt& c) {
  QuadExt n2;
  for (const auto& x : normal) n2 += x * x;
  if (n2 != QuadExt(1)) {
    throw Error(ErrorKind::NonUnitNormal, "plane normal has squared length " + n2.str());
  }
  return InversiveVector(c * 2, 0, normal);
}

QuadExt inversive_product(const InversiveVector& u, const InversiveVector& v) {
  if (u.coords().size() != v.coords().size()) {
    throw Error(ErrorKind::DimensionMismatch, "inversive vectors of different dimension");
  }
  const auto& a = u.coords();
  const auto& b = v.coords();
  QuadExt p = (a[0] * b[1] + a[1] * b[0]) * QuadExt::fraction(1, 2);
  for (std::size_t i = 2; i < a.size(); ++i) p -= a[i] * b[i];
  return p;
}

bool validate(const InversiveVector& v) {
  if (v.coords().size() < 3) return false;
  try {
    return inversive_product(v, v) == QuadExt(-1);
  } catch (const Error&) {
    return false;
  }
}

Matrix reflection_matrix(const InversiveVector& s) {
  if (!validate(s)) {
    throw Error(ErrorKind::InvalidWall, "wall " + s.str() + " does not satisfy Q(s) = -1");
  }
  const std::size_t k = s.coords().size();
  const Matrix q = QForm(k - 2).matrix();
  // (Q s^T)_i
  std::vector<QuadExt> qs = q * s.coords();
  Matrix m = Matrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) += QuadExt(2) * qs[i] * s[j];
  return m;
}

InversiveVector reflect(const InversiveVector& v, const InversiveVector& s) {
  const QuadExt f = inversive_product(v, s) * 2;
  if (f.is_zero()) return v;
  std::vector<QuadExt> out = v.coords();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += f * s[i];
  return InversiveVector(std::move(out));
}

InversiveVector act(const InversiveVector& v, const Matrix& m) {
  return InversiveVector(v.coords() * m);
}

}  // namespace packinglab

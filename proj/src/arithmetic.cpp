#include "packinglab/arithmetic.hpp"

#include "packinglab/error.hpp"

namespace packinglab {

GramMatrix gram_matrix(const std::vector<InversiveVector>& rows) {
  GramMatrix g(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      g.set(i, j, inversive_product(rows[i], rows[j]));
  return g;
}

GramMatrix dual_form(const GramMatrix& g) {
  if (g.has_placeholders()) {
    throw Error(ErrorKind::SingularGram, "Gram matrix has unfilled placeholders");
  }
  auto inv = g.to_matrix().inverse();
  if (!inv) throw Error(ErrorKind::SingularGram, "Gram matrix is singular");
  return GramMatrix::from_matrix(*inv);
}

bool is_rational_matrix(const GramMatrix& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& e = g.at(i, j);
      if (e && !e->is_rational()) return false;
    }
  return true;
}

std::vector<QuadExt> bends_vector(const std::vector<InversiveVector>& rows) {
  std::vector<QuadExt> b;
  b.reserve(rows.size());
  for (const auto& r : rows) b.push_back(r.bend());
  return b;
}

Matrix stack_rows(const std::vector<InversiveVector>& rows) {
  std::vector<std::vector<QuadExt>> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.push_back(r.coords());
  return Matrix::from_rows(data);
}

Matrix bends_conjugate(const Matrix& m, const std::vector<InversiveVector>& rows) {
  const Matrix v = stack_rows(rows);
  if (v.rows() != v.cols()) {
    throw Error(ErrorKind::SingularCluster, "cluster matrix is " + std::to_string(v.rows()) +
                                                "x" + std::to_string(v.cols()) +
                                                ", not square");
  }
  auto vinv = v.inverse();
  if (!vinv) throw Error(ErrorKind::SingularCluster, "cluster matrix is singular");
  return v * m * *vinv;
}

VinbergVerdict vinberg_test(const GramMatrix& g, std::size_t max_len) {
  if (max_len < 2) throw Error(ErrorKind::InvalidInput, "max_len must be at least 2");
  const std::size_t k = g.size();
  std::vector<std::vector<QuadExt>> twice(k, std::vector<QuadExt>(k));
  std::vector<std::vector<bool>> linked(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& e = g.at(i, j);
      if (!e) {
        throw Error(ErrorKind::InvalidInput,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is a placeholder; cyclic products need exact values");
      }
      if (!e->is_zero()) {
        twice[i][j] = *e * 2;
        linked[i][j] = true;
      }
    }

  VinbergVerdict verdict;
  verdict.max_len = max_len;

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!linked[i][j]) continue;
      ++verdict.cycles_checked;
      QuadExt p = twice[i][j] * twice[j][i];
      if (!p.is_rational_integer()) {
        verdict.non_arithmetic = true;
        verdict.witness = {i, j};
        verdict.product = p;
        return verdict;
      }
    }

  std::vector<std::size_t> path;
  std::vector<bool> used(k, false);
  // Extends a path starting at path[0] (its minimum) to exactly len vertices.
  auto search = [&](auto&& self, std::size_t len, const QuadExt& partial) -> bool {
    const std::size_t last = path.back();
    if (path.size() == len) {
      if (!linked[last][path[0]] || path[1] > last) return false;
      ++verdict.cycles_checked;
      QuadExt p = partial * twice[last][path[0]];
      if (!p.is_rational_integer()) {
        verdict.non_arithmetic = true;
        verdict.witness = path;
        verdict.product = std::move(p);
        return true;
      }
      return false;
    }
    for (std::size_t v = path[0] + 1; v < k; ++v) {
      if (used[v] || !linked[last][v]) continue;
      used[v] = true;
      path.push_back(v);
      const bool found = self(self, len, partial * twice[last][v]);
      path.pop_back();
      used[v] = false;
      if (found) return true;
    }
    return false;
  };

  for (std::size_t len = 3; len <= max_len && len <= k; ++len) {
    for (std::size_t s = 0; s + len <= k; ++s) {
      path.assign(1, s);
      used[s] = true;
      const bool found = search(search, len, QuadExt(1));
      used[s] = false;
      if (found) return verdict;
    }
  }
  return verdict;
}

}  // namespace packinglab

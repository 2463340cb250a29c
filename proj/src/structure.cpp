#include "packinglab/structure.hpp"

#include <algorithm>
#include <optional>

#include "packinglab/coxeter.hpp"
#include "packinglab/error.hpp"

namespace packinglab {

namespace {

enum class Relation { Orthogonal, Tangent, Disjoint, Angle };

Relation relation(const GramMatrix& g, std::size_t i, std::size_t j) {
  const auto& entry = g.at(i, j);
  if (!entry) return Relation::Disjoint;
  std::optional<Edge> e;
  try {
    e = classify_entry(*entry);
  } catch (const Error& err) {
    throw Error(ErrorKind::UnclassifiableEntry,
                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                    entry->str() + " cannot be classified");
  }
  if (!e) return Relation::Orthogonal;
  switch (e->kind) {
    case EdgeKind::Tangent:
      return Relation::Tangent;
    case EdgeKind::Disjoint:
      return Relation::Disjoint;
    case EdgeKind::Angle:
      break;
  }
  return Relation::Angle;
}

std::vector<std::vector<Relation>> relation_table(const GramMatrix& g) {
  const std::size_t k = g.size();
  std::vector<std::vector<Relation>> rel(k, std::vector<Relation>(k, Relation::Disjoint));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) rel[i][j] = rel[j][i] = relation(g, i, j);
  return rel;
}

std::string entry_text(const GramMatrix& g, std::size_t i, std::size_t j) {
  const auto& e = g.at(i, j);
  return e ? e->str() : "placeholder";
}

}  // namespace

DecompositionReport check_decomposition(const GramMatrix& g, const Decomposition& d) {
  const std::size_t k = g.size();
  if (d.cluster.empty()) throw Error(ErrorKind::InvalidDecomposition, "cluster is empty");
  std::vector<int> side(k, -1);
  auto mark = [&](const std::vector<std::size_t>& idx, int s) {
    for (std::size_t i : idx) {
      if (i >= k) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "wall " + std::to_string(i + 1) + " out of range");
      }
      if (side[i] != -1) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "wall " + std::to_string(i + 1) + " listed twice");
      }
      side[i] = s;
    }
  };
  mark(d.cluster, 0);
  mark(d.cocluster, 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (side[i] == -1) {
      throw Error(ErrorKind::InvalidDecomposition,
                  "wall " + std::to_string(i + 1) + " is in neither set");
    }
  }

  const auto rel = relation_table(g);
  DecompositionReport report;
  for (std::size_t i = 0; i < k; ++i) {
    if (side[i] != 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const Relation r = rel[i][j];
      if (side[j] == 0 && j > i &&
          (r == Relation::Orthogonal || r == Relation::Angle)) {
        report.violations.push_back(
            {i, j, entry_text(g, i, j), "cluster walls must be tangent or disjoint"});
      } else if (side[j] == 1 && r == Relation::Angle) {
        report.violations.push_back({std::min(i, j), std::max(i, j), entry_text(g, i, j),
                                     "cluster and cocluster walls must not cross at an angle"});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::vector<Decomposition> enumerate_decompositions(const GramMatrix& g, std::size_t max_walls) {
  const std::size_t k = g.size();
  if (k > max_walls) {
    throw Error(ErrorKind::TooManyWalls, std::to_string(k) + " walls exceeds the cap of " +
                                             std::to_string(max_walls));
  }
  const auto rel = relation_table(g);

  // A wall crossing anything at an angle can sit in neither the cluster nor
  // across from it, so it is pinned to the cocluster.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < k; ++i) {
    bool pinned = false;
    for (std::size_t j = 0; j < k && !pinned; ++j) pinned = j != i && rel[i][j] == Relation::Angle;
    if (!pinned) free.push_back(i);
  }

  std::vector<Decomposition> out;
  std::vector<std::size_t> cluster;
  auto emit = [&] {
    Decomposition d;
    d.cluster = cluster;
    for (std::size_t i = 0; i < k; ++i)
      if (!std::binary_search(cluster.begin(), cluster.end(), i)) d.cocluster.push_back(i);
    out.push_back(std::move(d));
  };
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t p = from; p < free.size(); ++p) {
      const std::size_t v = free[p];
      bool ok = true;
      for (std::size_t c : cluster) {
        if (rel[c][v] == Relation::Orthogonal) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cluster.push_back(v);
      emit();
      self(self, p + 1);
      cluster.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace packinglab

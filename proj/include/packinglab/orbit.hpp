#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "packinglab/exactnum.hpp"
#include "packinglab/inversive.hpp"

namespace packinglab {

/// Walls with the cluster / cocluster split (0-based indices into walls).
struct WallSystem {
  std::size_t dim = 2;
  std::vector<InversiveVector> walls;
  std::vector<std::size_t> cluster;
  std::vector<std::size_t> cocluster;

  std::vector<InversiveVector> cluster_walls() const;
  std::vector<InversiveVector> cocluster_walls() const;
};

/// Throws InvalidWall / DimensionMismatch / InvalidDecomposition on a bad system.
void validate_system(const WallSystem& ws);

struct Sphere {
  InversiveVector v;
  std::size_t word_length = 0;
  /// Index of the wall reflected in last, or -1 for a seed.
  long parent_generator = -1;
  /// Cluster wall the sphere descends from.
  std::size_t origin = 0;
};

struct Packing {
  std::size_t dim = 2;
  std::vector<Sphere> spheres;
  /// True when the search ran out of new spheres within the bound before
  /// hitting the word-length cap.
  bool saturated = true;
};

struct OrbitOptions {
  std::size_t frontier_cap = 2'000'000;
  unsigned jobs = 1;
};

/// Orbit of the cluster under reflections in the cocluster walls, keeping
/// spheres with |bend| <= bound. Seeds are always kept.
Packing generate_packing(const WallSystem& ws, const QuadExt& bound, std::size_t max_word,
                         const OrbitOptions& opts = {});

/// Same, with reflections in every wall of the system.
Packing generate_superpacking(const WallSystem& ws, const QuadExt& bound,
                              std::size_t max_word, const OrbitOptions& opts = {});

struct IntegralityWitness {
  std::size_t index = 0;
  QuadExt bend;
  std::size_t word_length = 0;
};

struct IntegralityReport {
  bool integral = true;
  std::vector<IntegralityWitness> witnesses;
};

IntegralityReport certify_integral(const Packing& p);

/// Bends sorted ascending.
std::vector<QuadExt> bends_list(const Packing& p);

/// Pairs (i < j) with inversive product exactly 1.
std::vector<std::pair<std::size_t, std::size_t>> tangency_graph(
    const std::vector<InversiveVector>& spheres);

}  // namespace packinglab

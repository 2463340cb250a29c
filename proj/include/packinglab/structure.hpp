#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "packinglab/gram.hpp"

namespace packinglab {

/// Cluster / cocluster split of the walls, as sorted 0-based index lists.
struct Decomposition {
  std::vector<std::size_t> cluster;
  std::vector<std::size_t> cocluster;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string entry;
  std::string reason;
};

struct DecompositionReport {
  bool valid = true;
  std::vector<Violation> violations;
};

DecompositionReport check_decomposition(const GramMatrix& g, const Decomposition& d);

/// All valid decompositions, ordered lexicographically by cluster.
std::vector<Decomposition> enumerate_decompositions(const GramMatrix& g,
                                                    std::size_t max_walls = 30);

}  // namespace packinglab

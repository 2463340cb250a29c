#pragma once

#include <cstddef>
#include <vector>

#include "packinglab/matrix.hpp"
#include "packinglab/orbit.hpp"

namespace packinglab {

struct ResidueOrbit {
  long modulus = 1;
  /// Sorted residues in [0, modulus) seen as some coordinate of some orbit vector.
  std::vector<long> residues;
  std::size_t orbit_size = 0;

  bool admits(long bend) const;
};

/// Closure of b mod m under the generators acting on the left.
ResidueOrbit residue_orbit(const std::vector<Matrix>& gens, const std::vector<QuadExt>& b,
                           long m);

/// Integers in [min bend, bound] that are admissible mod ro.modulus but missing
/// from the sorted bends.
std::vector<long> missing_bends(const std::vector<long>& bends, const ResidueOrbit& ro,
                                long bound);

/// Conjugates each cocluster reflection (and optionally each cluster
/// reflection) to the bends action of the cluster, which must have dim+2 walls.
std::vector<Matrix> bends_group(const WallSystem& ws, bool include_cluster = false);

}  // namespace packinglab

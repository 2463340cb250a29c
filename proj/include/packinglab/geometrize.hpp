#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packinglab/exactnum.hpp"
#include "packinglab/gram.hpp"
#include "packinglab/orbit.hpp"

namespace packinglab {

/// Fixes one coordinate of one wall during realization.
struct Pin {
  std::size_t wall = 0;
  std::size_t coord = 0;
  long double value = 0;
};

/// Target inversive products for a wall system still to be realized. A pair
/// mapped to nullopt only has to be disjoint (product above 1); pairs that are
/// absent are unconstrained.
struct TargetSpec {
  std::size_t dim = 2;
  std::size_t wall_count = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<QuadExt>> targets;
  std::vector<Pin> pins;
  std::vector<std::size_t> cluster;
  std::vector<std::size_t> cocluster;

  /// Every off-diagonal entry becomes a target; placeholders become disjoint.
  static TargetSpec from_gram(const GramMatrix& g, std::size_t dim = 2);
  /// Vertices are the cluster (walls 0..V-1), faces the cocluster. Edges and
  /// adjacent faces are tangent, incidences orthogonal, the rest disjoint.
  static TargetSpec from_polyhedron(std::size_t vertex_count,
                                    const std::vector<std::vector<std::size_t>>& faces);
};

struct FloatWallSystem {
  std::vector<std::vector<long double>> walls;
  long double residual = 0;
  std::size_t iterations = 0;
  std::size_t accepted_steps = 0;
  /// Half the squared residual norm, after each accepted step (first entry is
  /// the starting cost).
  std::vector<long double> cost_history;
  std::size_t start = 0;
};

struct RealizeOptions {
  std::size_t max_iterations = 400;
  std::size_t starts = 64;
  /// Product a disjoint pair must reach before it stops being penalized.
  long double disjoint_margin = 1e-3L;
  long double gauge_ratio = 1e-10L;
};

/// Pins used when the target supplies none: wall 0 becomes the line y = 0, the
/// first wall tangent to it the line y = 1, and a third wall tangent (or else
/// orthogonal) to both gets its first center coordinate (or co-bend) pinned to 0.
std::vector<Pin> default_gauge(const TargetSpec& t);

/// Levenberg-Marquardt on the residuals Q(v_i) + 1, <v_i,v_j> - target and a
/// hinge on disjoint pairs. Multi-start from seeded normal draws unless an
/// initial configuration is given.
FloatWallSystem realize(const TargetSpec& t, std::uint64_t seed, long double tol,
                        const RealizeOptions& opts = {},
                        const std::vector<std::vector<long double>>* initial = nullptr);

/// The unique (a + b sqrt(d))/q with q <= denom_bound within tol of x.
/// NoCandidate or Ambiguous otherwise.
QuadExt algebraic_guess(long double x, unsigned long d, unsigned long denom_bound,
                        long double tol);

WallSystem guess_walls(const FloatWallSystem& fw, const TargetSpec& t, unsigned long d,
                       unsigned long denom_bound, long double tol);

struct Mismatch {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Mismatch> mismatches;
};

/// Exact check of every target, with i == j rows for walls off the quadric.
VerifyReport verify_realization(const WallSystem& ws, const TargetSpec& t);

long double float_product(const std::vector<long double>& u, const std::vector<long double>& v);
std::vector<long double> float_reflect(const std::vector<long double>& v,
                                       const std::vector<long double>& s);
std::vector<long double> to_float(const InversiveVector& v);

}  // namespace packinglab

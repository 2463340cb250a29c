#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "packinglab/exactnum.hpp"
#include "packinglab/gram.hpp"

namespace packinglab {

enum class EdgeKind { Disjoint, Tangent, Angle };

struct Edge {
  EdgeKind kind = EdgeKind::Tangent;
  /// Angle: dihedral angle pi/m.
  int m = 0;
  /// Disjoint: the product when known.
  std::optional<QuadExt> value;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Walls are 0-based internally; the text form is 1-based. A missing edge
/// means the two walls are orthogonal.
struct CoxeterDiagram {
  std::size_t vertex_count = 0;
  std::map<std::pair<std::size_t, std::size_t>, Edge> edges;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;
};

/// Grammar, one statement per line, '#' starts a comment:
///   vertices K
///   I J tangent | I J disjoint[=VALUE] | I J angle M
CoxeterDiagram parse_diagram(std::string_view text);
std::string print_diagram(const CoxeterDiagram& d);

/// cos(pi/m) for m in {3,4,5,6}; UnrepresentableAngle otherwise.
QuadExt cos_pi_over(int m);

GramMatrix gram_from_diagram(const CoxeterDiagram& d);

/// Reads one off-diagonal entry: 0 gives nullopt (orthogonal), 1 tangent,
/// above 1 disjoint, cos(pi/m) an angle. Throws UnclassifiableEntry otherwise.
std::optional<Edge> classify_entry(const QuadExt& x);

CoxeterDiagram diagram_from_gram(const GramMatrix& g);

}  // namespace packinglab

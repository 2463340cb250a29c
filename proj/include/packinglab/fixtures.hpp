#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "packinglab/geometrize.hpp"
#include "packinglab/gram.hpp"
#include "packinglab/io.hpp"

namespace packinglab::fixtures {

/// Root quadruple (-1,2,2,3) as the cluster, the four dual circles as cocluster.
io::SystemFile apollonian();
/// Twelve vertex circles and fourteen face circles in Q(sqrt 6).
io::SystemFile cuboctahedron();
/// Apex, six base circles and the seven dual circles, in Q(sqrt 3).
io::SystemFile hexagonal_pyramid();

/// The 14x14 supergroup Gram matrix of the hexagonal pyramid, entered by hand.
GramMatrix hexpyr_gram();

extern const char* const kCox6;
extern const char* const kEisenstein;
extern const char* const kEisensteinBianchi;

std::vector<std::vector<std::size_t>> tetrahedron_faces();
/// Vertices are the sorted sign permutations of (1,1,0); triangles come first.
std::vector<std::vector<std::size_t>> cuboctahedron_faces();

TargetSpec tetrahedron_target();
TargetSpec cuboctahedron_target();
TargetSpec hexpyr_target();

/// File names in export order.
std::vector<std::string> names();
/// Content of a shipped fixture file; InvalidInput for an unknown name.
std::string text(const std::string& name);
void export_all(const std::string& dir);

}  // namespace packinglab::fixtures

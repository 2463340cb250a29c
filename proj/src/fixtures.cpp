#include "packinglab/fixtures.hpp"

#include <algorithm>
#include <array>
#include <filesystem>

#include "packinglab/error.hpp"
#include "packinglab/inversive.hpp"

namespace packinglab::fixtures {

namespace {

QuadExt q(const char* s) { return QuadExt::parse(s); }

InversiveVector wall(const char* cobend, const char* bend, const char* x, const char* y) {
  return InversiveVector(q(cobend), q(bend), {q(x), q(y)});
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i < hi; ++i) r.push_back(i);
  return r;
}

}  // namespace

const char* const kCox6 =
    "# reflective extension of the Bianchi group over Z[sqrt(-6)]\n"
    "vertices 6\n"
    "1 2 tangent\n"
    "3 4 tangent\n"
    "2 5 angle 3\n"
    "2 6 angle 4\n"
    "3 6 disjoint\n"
    "4 5 disjoint\n";

const char* const kEisenstein =
    "# reflection subgroup of the Eisenstein Bianchi group\n"
    "vertices 5\n"
    "1 2 tangent\n"
    "2 5 angle 3\n"
    "3 4 tangent\n"
    "4 5 angle 6\n";

const char* const kEisensteinBianchi =
    "# Bianchi group over the Eisenstein integers, [3,3,6]\n"
    "vertices 4\n"
    "1 2 angle 6\n"
    "2 3 angle 3\n"
    "3 4 angle 3\n";

io::SystemFile apollonian() {
  io::SystemFile f;
  f.name = "apollonian";
  f.provenance =
      "Root quadruple -1,2,2,3: outer unit circle, two radius-1/2 circles at (+-1/2,0), a "
      "radius-1/3 circle at (0,2/3); cocluster is the four circles through the tangency "
      "points of three of them.";
  f.system.dim = 2;
  f.system.walls = {
      wall("1", "-1", "0", "0"), wall("0", "2", "-1", "0"), wall("0", "2", "1", "0"),
      wall("1", "3", "0", "2"),  wall("0", "4", "0", "1"),  wall("1", "1", "1", "1"),
      wall("1", "1", "-1", "1"), wall("0", "0", "0", "-1"),
  };
  f.system.cluster = range(0, 4);
  f.system.cocluster = range(4, 8);
  return f;
}

io::SystemFile cuboctahedron() {
  io::SystemFile f;
  f.name = "cuboctahedron";
  f.provenance =
      "Cuboctahedral packing: twelve vertex circles (bends -1,2,2,6,9,6,12,16,9,12,16,19) "
      "and fourteen face circles orthogonal to them, all coordinates in Q(sqrt(6)).";
  f.system.dim = 2;
  f.system.walls = {
      wall("1", "-1", "0", "0"),
      wall("0", "2", "0", "-1"),
      wall("4", "6", "2*sqrt(6)", "-1"),
      wall("3", "9", "2*sqrt(6)", "-2"),
      wall("0", "2", "0", "1"),
      wall("4", "6", "2*sqrt(6)", "1"),
      wall("2", "12", "2*sqrt(6)", "-1"),
      wall("6", "16", "4*sqrt(6)", "-1"),
      wall("3", "9", "2*sqrt(6)", "2"),
      wall("2", "12", "2*sqrt(6)", "1"),
      wall("6", "16", "4*sqrt(6)", "1"),
      wall("5", "19", "4*sqrt(6)", "0"),
      wall("4*sqrt(6)", "12*sqrt(6)", "17", "0"),
      wall("2*sqrt(6)", "10*sqrt(6)", "11", "0"),
      wall("3*sqrt(6)", "7*sqrt(6)", "11", "sqrt(6)"),
      wall("sqrt(6)", "5*sqrt(6)", "5", "sqrt(6)"),
      wall("3*sqrt(6)", "7*sqrt(6)", "11", "-sqrt(6)"),
      wall("sqrt(6)", "5*sqrt(6)", "5", "-sqrt(6)"),
      wall("2*sqrt(6)", "2*sqrt(6)", "5", "0"),
      wall("0", "0", "-1", "0"),
      wall("3/2*sqrt(6)", "11/2*sqrt(6)", "7", "1/2*sqrt(6)"),
      wall("1/2*sqrt(6)", "1/2*sqrt(6)", "1", "-1/2*sqrt(6)"),
      wall("3/2*sqrt(6)", "11/2*sqrt(6)", "7", "-1/2*sqrt(6)"),
      wall("1/2*sqrt(6)", "1/2*sqrt(6)", "1", "1/2*sqrt(6)"),
      wall("2*sqrt(6)", "4*sqrt(6)", "7", "0"),
      wall("0", "2*sqrt(6)", "1", "0"),
  };
  f.system.cluster = range(0, 12);
  f.system.cocluster = range(12, 26);
  return f;
}

io::SystemFile hexagonal_pyramid() {
  io::SystemFile f;
  f.name = "hexpyr";
  f.provenance =
      "Hexagonal pyramid: apex circle of radius 1/3 at the origin, six base circles of radius "
      "1/3 at distance 2/3, six dual circles of radius 1/(3*sqrt(3)) and the outer dual circle "
      "of radius -1/sqrt(3); walls 1-7 are the cluster.";
  f.system.dim = 2;
  const QuadExt s3 = QuadExt::sqrt(3);
  const QuadExt third = QuadExt::fraction(1, 3);
  auto circle = [&](QuadExt x, QuadExt y, QuadExt r) {
    return sphere_from_center_radius({x * third, y * third}, r * third);
  };
  auto& w = f.system.walls;
  w.push_back(circle(0, 0, 1));
  const std::array<std::array<QuadExt, 2>, 6> base = {{{2, 0},
                                                       {1, s3},
                                                       {-1, s3},
                                                       {-2, 0},
                                                       {-1, -s3},
                                                       {1, -s3}}};
  for (const auto& c : base) w.push_back(circle(c[0], c[1], 1));
  const QuadExt is3 = s3.inverse();
  const std::array<std::array<QuadExt, 2>, 6> dual = {{{1, is3},
                                                       {0, is3 * 2},
                                                       {-1, is3},
                                                       {-1, -is3},
                                                       {0, -is3 * 2},
                                                       {1, -is3}}};
  for (const auto& c : dual) w.push_back(circle(c[0], c[1], is3));
  w.push_back(circle(0, 0, -s3));
  f.system.cluster = range(0, 7);
  f.system.cocluster = range(7, 14);
  return f;
}

GramMatrix hexpyr_gram() {
  const char* rows[14][14] = {
      {"-1", "1", "1", "1", "1", "1", "1", "0", "0", "0", "0", "0", "0", "2/3*sqrt(3)"},
      {"1", "-1", "1", "5", "7", "5", "1", "0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)",
       "2*sqrt(3)", "0", "0"},
      {"1", "1", "-1", "1", "5", "7", "5", "0", "0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)",
       "2*sqrt(3)", "0"},
      {"1", "5", "1", "-1", "1", "5", "7", "2*sqrt(3)", "0", "0", "2*sqrt(3)", "4*sqrt(3)",
       "4*sqrt(3)", "0"},
      {"1", "7", "5", "1", "-1", "1", "5", "4*sqrt(3)", "2*sqrt(3)", "0", "0", "2*sqrt(3)",
       "4*sqrt(3)", "0"},
      {"1", "5", "7", "5", "1", "-1", "1", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)", "0", "0",
       "2*sqrt(3)", "0"},
      {"1", "1", "5", "7", "5", "1", "-1", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)",
       "0", "0", "0"},
      {"0", "0", "0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)", "-1", "1", "5", "7",
       "5", "1", "1"},
      {"0", "2*sqrt(3)", "0", "0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)", "1", "-1", "1", "5",
       "7", "5", "1"},
      {"0", "4*sqrt(3)", "2*sqrt(3)", "0", "0", "2*sqrt(3)", "4*sqrt(3)", "5", "1", "-1", "1",
       "5", "7", "1"},
      {"0", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)", "0", "0", "2*sqrt(3)", "7", "5", "1", "-1",
       "1", "5", "1"},
      {"0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)", "0", "0", "5", "7", "5", "1",
       "-1", "1", "1"},
      {"0", "0", "2*sqrt(3)", "4*sqrt(3)", "4*sqrt(3)", "2*sqrt(3)", "0", "1", "5", "7", "5",
       "1", "-1", "1"},
      {"2/3*sqrt(3)", "0", "0", "0", "0", "0", "0", "1", "1", "1", "1", "1", "1", "-1"},
  };
  GramMatrix g(14);
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j) {
      const QuadExt v = q(rows[i][j]);
      if (j >= i) {
        g.set(i, j, v);
      } else if (g.at(i, j) != v) {
        throw Error(ErrorKind::InvalidInput, "hand-entered Gram matrix is not symmetric");
      }
    }
  return g;
}

std::vector<std::vector<std::size_t>> tetrahedron_faces() {
  return {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
}

std::vector<std::vector<std::size_t>> cuboctahedron_faces() {
  std::vector<std::array<int, 3>> verts;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (std::abs(a) + std::abs(b) + std::abs(c) == 2) verts.push_back({a, b, c});
  std::vector<std::vector<std::size_t>> faces;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (verts[i][0] * sx + verts[i][1] * sy + verts[i][2] * sz == 2) f.push_back(i);
        faces.push_back(f);
      }
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {1, -1}) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i][static_cast<std::size_t>(axis)] == sign) f.push_back(i);
      faces.push_back(f);
    }
  return faces;
}

TargetSpec tetrahedron_target() { return TargetSpec::from_polyhedron(4, tetrahedron_faces()); }

TargetSpec cuboctahedron_target() {
  return TargetSpec::from_polyhedron(12, cuboctahedron_faces());
}

TargetSpec hexpyr_target() {
  TargetSpec t = TargetSpec::from_gram(hexpyr_gram());
  t.cluster = range(0, 7);
  t.cocluster = range(7, 14);
  return t;
}

std::vector<std::string> names() {
  return {"apollonian.json",         "cuboctahedron.json",
          "hexpyr.json",             "hexpyr.gram.json",
          "cox6.cox",                "eisenstein.cox",
          "eisenstein_bianchi.cox",  "tetrahedron.target.json",
          "cuboctahedron.target.json", "hexpyr.target.json"};
}

std::string text(const std::string& name) {
  if (name == "apollonian.json") return io::dump(io::system_to_json(apollonian()));
  if (name == "cuboctahedron.json") return io::dump(io::system_to_json(cuboctahedron()));
  if (name == "hexpyr.json") return io::dump(io::system_to_json(hexagonal_pyramid()));
  if (name == "hexpyr.gram.json") return io::dump(io::gram_to_json(hexpyr_gram()));
  if (name == "cox6.cox") return kCox6;
  if (name == "eisenstein.cox") return kEisenstein;
  if (name == "eisenstein_bianchi.cox") return kEisensteinBianchi;
  if (name == "tetrahedron.target.json") return io::dump(io::target_to_json(tetrahedron_target()));
  if (name == "cuboctahedron.target.json") {
    return io::dump(io::target_to_json(cuboctahedron_target()));
  }
  if (name == "hexpyr.target.json") return io::dump(io::target_to_json(hexpyr_target()));
  throw Error(ErrorKind::InvalidInput, "unknown fixture '" + name + "'");
}

void export_all(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create '" + dir + "': " + ec.message());
  for (const auto& n : names()) io::write_file((std::filesystem::path(dir) / n).string(), text(n));
}

}  // namespace packinglab::fixtures

#include "packinglab/coxeter.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "packinglab/error.hpp"

namespace packinglab {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + why);
}

long parse_int(const std::string& s, std::size_t line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(line, "expected an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  CoxeterDiagram d;
  bool have_vertices = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "vertices") {
      if (have_vertices) parse_fail(lineno, "vertex count declared twice");
      if (words.size() != 2) parse_fail(lineno, "usage: vertices K");
      const long k = parse_int(words[1], lineno);
      if (k < 1) parse_fail(lineno, "vertex count must be positive");
      d.vertex_count = static_cast<std::size_t>(k);
      have_vertices = true;
      continue;
    }

    if (!have_vertices) parse_fail(lineno, "'vertices K' must come before edges");
    if (words.size() < 3) parse_fail(lineno, "expected 'I J KIND'");
    const long i = parse_int(words[0], lineno);
    const long j = parse_int(words[1], lineno);
    const auto k = static_cast<long>(d.vertex_count);
    if (i < 1 || j < 1 || i > k || j > k) parse_fail(lineno, "vertex index out of range");
    if (i == j) parse_fail(lineno, "self-loop");

    Edge e;
    const std::string& kind = words[2];
    if (kind == "tangent") {
      if (words.size() != 3) parse_fail(lineno, "trailing tokens after 'tangent'");
      e.kind = EdgeKind::Tangent;
    } else if (kind == "angle") {
      if (words.size() != 4) parse_fail(lineno, "usage: I J angle M");
      const long m = parse_int(words[3], lineno);
      if (m < 3) {
        throw Error(ErrorKind::BadMultiplicity,
                    "line " + std::to_string(lineno) + ": angle pi/" + std::to_string(m) +
                        " is not drawn as an edge (need m >= 3)");
      }
      e.kind = EdgeKind::Angle;
      e.m = static_cast<int>(m);
    } else if (kind.rfind("disjoint", 0) == 0) {
      if (words.size() != 3) parse_fail(lineno, "trailing tokens after 'disjoint'");
      e.kind = EdgeKind::Disjoint;
      if (kind.size() > 8) {
        if (kind[8] != '=') parse_fail(lineno, "unknown edge kind '" + kind + "'");
        QuadExt v = QuadExt::parse(std::string_view(kind).substr(9));
        if (!(v > QuadExt(1))) parse_fail(lineno, "disjoint value must exceed 1");
        e.value = std::move(v);
      }
    } else {
      parse_fail(lineno, "unknown edge kind '" + kind + "'");
    }

    const auto a = static_cast<std::size_t>(std::min(i, j) - 1);
    const auto b = static_cast<std::size_t>(std::max(i, j) - 1);
    if (!d.edges.emplace(std::make_pair(a, b), std::move(e)).second) {
      throw Error(ErrorKind::DuplicateEdge, "line " + std::to_string(lineno) + ": edge " +
                                                std::to_string(a + 1) + "-" +
                                                std::to_string(b + 1) + " declared twice");
    }
  }
  if (!have_vertices) parse_fail(lineno, "missing 'vertices K'");
  return d;
}

std::string print_diagram(const CoxeterDiagram& d) {
  std::string out = "vertices " + std::to_string(d.vertex_count) + "\n";
  for (const auto& [ij, e] : d.edges) {
    out += std::to_string(ij.first + 1) + " " + std::to_string(ij.second + 1) + " ";
    switch (e.kind) {
      case EdgeKind::Tangent:
        out += "tangent";
        break;
      case EdgeKind::Angle:
        out += "angle " + std::to_string(e.m);
        break;
      case EdgeKind::Disjoint:
        out += "disjoint";
        if (e.value) out += "=" + e.value->str();
        break;
    }
    out += "\n";
  }
  return out;
}

QuadExt cos_pi_over(int m) {
  switch (m) {
    case 3:
      return QuadExt::fraction(1, 2);
    case 4:
      return QuadExt(mpq_class(0), mpq_class(1, 2), 2);
    case 5:
      return QuadExt(mpq_class(1, 4), mpq_class(1, 4), 5);
    case 6:
      return QuadExt(mpq_class(0), mpq_class(1, 2), 3);
    default:
      throw Error(ErrorKind::UnrepresentableAngle,
                  "cos(pi/" + std::to_string(m) + ") is not in a real quadratic field");
  }
}

GramMatrix gram_from_diagram(const CoxeterDiagram& d) {
  GramMatrix g(d.vertex_count);
  unsigned long field = 0;
  for (const auto& [ij, e] : d.edges) {
    std::optional<QuadExt> value;
    switch (e.kind) {
      case EdgeKind::Tangent:
        value = QuadExt(1);
        break;
      case EdgeKind::Angle:
        value = cos_pi_over(e.m);
        break;
      case EdgeKind::Disjoint:
        value = e.value;
        break;
    }
    if (value && value->disc() != 0) {
      if (field != 0 && field != value->disc()) {
        throw Error(ErrorKind::UnrepresentableAngle,
                    "edge " + std::to_string(ij.first + 1) + "-" +
                        std::to_string(ij.second + 1) + " needs sqrt(" +
                        std::to_string(value->disc()) + ") but the diagram already uses sqrt(" +
                        std::to_string(field) + ")");
      }
      field = value->disc();
    }
    g.set(ij.first, ij.second, std::move(value));
  }
  return g;
}

std::optional<Edge> classify_entry(const QuadExt& x) {
  if (x.is_zero()) return std::nullopt;
  const QuadExt one(1);
  if (x == one) return Edge{EdgeKind::Tangent, 0, std::nullopt};
  if (x > one) return Edge{EdgeKind::Disjoint, 0, x};
  for (int m = 3; m <= 6; ++m) {
    const QuadExt c = cos_pi_over(m);
    if (c.disc() != 0 && x.disc() != 0 && c.disc() != x.disc()) continue;
    if (x == c) return Edge{EdgeKind::Angle, m, std::nullopt};
  }
  throw Error(ErrorKind::UnclassifiableEntry, "entry " + x.str() +
                                                  " is not 0, 1, above 1, or cos(pi/m)");
}

CoxeterDiagram diagram_from_gram(const GramMatrix& g) {
  CoxeterDiagram d;
  d.vertex_count = g.size();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto& entry = g.at(i, j);
      if (!entry) {
        d.edges.emplace(std::make_pair(i, j), Edge{EdgeKind::Disjoint, 0, std::nullopt});
        continue;
      }
      try {
        if (auto e = classify_entry(*entry)) d.edges.emplace(std::make_pair(i, j), *e);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::UnclassifiableEntry) throw;
        throw Error(ErrorKind::UnclassifiableEntry,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") = " + entry->str() + " is not 0, 1, above 1, or cos(pi/m)");
      }
    }
  return d;
}

}  // namespace packinglab

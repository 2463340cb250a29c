#include "packinglab/io.hpp"

#include <fstream>
#include <sstream>

#include "packinglab/arithmetic.hpp"
#include "packinglab/coxeter.hpp"
#include "packinglab/error.hpp"

namespace packinglab::io {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_kind(const json& j, const std::string& kind) {
  if (!j.is_object()) bad("expected a JSON object");
  if (j.contains("format") && j.at("format") != 1) bad("unsupported format version");
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    bad("expected kind '" + kind + "', got " + k.dump());
  }
}

QuadExt number(const json& j) {
  if (j.is_string()) return QuadExt::parse(j.get<std::string>());
  if (j.is_number_integer()) return QuadExt(j.get<long>());
  bad("expected an exact number string, got " + j.dump());
}

std::size_t index1(const json& j, std::size_t limit) {
  if (!j.is_number_integer()) bad("expected an index, got " + j.dump());
  const long i = j.get<long>();
  if (i < 1 || static_cast<std::size_t>(i) > limit) {
    bad("index " + std::to_string(i) + " out of range 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(i - 1);
}

std::vector<std::size_t> indices1(const json& j, std::size_t limit) {
  if (!j.is_array()) bad("expected an index list");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(index1(x, limit));
  return out;
}

json indices_to_json(const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json wall_to_json(const InversiveVector& v) {
  json bz = json::array();
  for (std::size_t i = 2; i < v.coords().size(); ++i) bz.push_back(v[i].str());
  return json{{"cobend", v.cobend().str()}, {"bend", v.bend().str()}, {"bz", bz}};
}

InversiveVector wall_from_json(const json& j) {
  const json& bz = field(j, "bz");
  if (!bz.is_array() || bz.empty()) bad("'bz' must be a nonempty array");
  std::vector<QuadExt> coords{number(field(j, "cobend")), number(field(j, "bend"))};
  for (const auto& x : bz) coords.push_back(number(x));
  return InversiveVector(std::move(coords));
}

json system_to_json(const SystemFile& s) {
  json walls = json::array();
  for (const auto& w : s.system.walls) walls.push_back(wall_to_json(w));
  return json{{"format", 1},
              {"kind", "wall_system"},
              {"name", s.name},
              {"dim", s.system.dim},
              {"provenance", s.provenance},
              {"walls", walls},
              {"cluster", indices_to_json(s.system.cluster)},
              {"cocluster", indices_to_json(s.system.cocluster)}};
}

SystemFile system_from_json(const json& j) {
  expect_kind(j, "wall_system");
  SystemFile s;
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  if (j.contains("provenance")) s.provenance = j.at("provenance").get<std::string>();
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long>() < 1) bad("'dim' must be a positive integer");
  s.system.dim = dim.get<std::size_t>();
  for (const auto& w : field(j, "walls")) s.system.walls.push_back(wall_from_json(w));
  s.system.cluster = indices1(field(j, "cluster"), s.system.walls.size());
  s.system.cocluster = indices1(field(j, "cocluster"), s.system.walls.size());
  validate_system(s.system);
  return s;
}

json gram_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& e = g.at(i, j);
      row.push_back(e ? json(e->str()) : json(nullptr));
    }
    rows.push_back(row);
  }
  return json{{"format", 1}, {"kind", "gram"}, {"size", g.size()}, {"gram", rows}};
}

GramMatrix gram_from_json(const json& j) {
  expect_kind(j, "gram");
  const json& rows = field(j, "gram");
  if (!rows.is_array()) bad("'gram' must be an array of rows");
  const std::size_t k = rows.size();
  if (j.contains("size") && j.at("size") != k) bad("'size' disagrees with the row count");
  GramMatrix g(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!rows[i].is_array() || rows[i].size() != k) bad("Gram matrix must be square");
    for (std::size_t c = 0; c < k; ++c) {
      const json& e = rows[i][c];
      std::optional<QuadExt> v;
      if (!e.is_null()) v = number(e);
      if (c < i) {
        if (v != g.at(i, c)) {
          throw Error(ErrorKind::InvalidInput, "Gram matrix is not symmetric at (" +
                                                   std::to_string(i + 1) + "," +
                                                   std::to_string(c + 1) + ")");
        }
        continue;
      }
      if (c == i && v != QuadExt(-1)) {
        throw Error(ErrorKind::InvalidInput, "Gram diagonal entry " + std::to_string(i + 1) +
                                                 " is not -1");
      }
      g.set(i, c, v);
    }
  }
  return g;
}

json target_to_json(const TargetSpec& t) {
  json targets = json::array();
  for (const auto& [ij, v] : t.targets) {
    json e{{"i", ij.first + 1}, {"j", ij.second + 1}};
    if (v) {
      e["value"] = v->str();
    } else {
      e["disjoint"] = true;
    }
    targets.push_back(e);
  }
  json pins = json::array();
  for (const auto& p : t.pins) {
    pins.push_back(json{{"wall", p.wall + 1}, {"coord", p.coord + 1},
                        {"value", static_cast<double>(p.value)}});
  }
  return json{{"format", 1},
              {"kind", "target"},
              {"dim", t.dim},
              {"wall_count", t.wall_count},
              {"targets", targets},
              {"pins", pins},
              {"cluster", indices_to_json(t.cluster)},
              {"cocluster", indices_to_json(t.cocluster)}};
}

TargetSpec target_from_json(const json& j) {
  expect_kind(j, "target");
  TargetSpec t;
  t.dim = field(j, "dim").get<std::size_t>();
  t.wall_count = field(j, "wall_count").get<std::size_t>();
  for (const auto& e : field(j, "targets")) {
    std::size_t a = index1(field(e, "i"), t.wall_count);
    std::size_t b = index1(field(e, "j"), t.wall_count);
    if (a == b) bad("target on a diagonal entry");
    if (a > b) std::swap(a, b);
    std::optional<QuadExt> v;
    if (e.contains("value")) {
      v = number(e.at("value"));
    } else if (!e.value("disjoint", false)) {
      bad("target needs 'value' or 'disjoint': true");
    }
    if (!t.targets.emplace(std::make_pair(a, b), v).second) bad("duplicate target pair");
  }
  if (j.contains("pins")) {
    for (const auto& p : j.at("pins")) {
      Pin pin;
      pin.wall = index1(field(p, "wall"), t.wall_count);
      pin.coord = index1(field(p, "coord"), t.dim + 2);
      pin.value = field(p, "value").get<double>();
      t.pins.push_back(pin);
    }
  }
  if (j.contains("cluster")) t.cluster = indices1(j.at("cluster"), t.wall_count);
  if (j.contains("cocluster")) t.cocluster = indices1(j.at("cocluster"), t.wall_count);
  return t;
}

json packing_to_json(const PackingFile& p) {
  json spheres = json::array();
  for (const auto& s : p.packing.spheres) {
    json w = wall_to_json(s.v);
    w["word_length"] = s.word_length;
    w["parent_generator"] = s.parent_generator < 0 ? json(nullptr) : json(s.parent_generator + 1);
    w["origin"] = s.origin + 1;
    spheres.push_back(w);
  }
  return json{{"format", 1},
              {"kind", "packing"},
              {"dim", p.packing.dim},
              {"super", p.super},
              {"bound", p.bound},
              {"max_word", p.max_word},
              {"saturated", p.packing.saturated},
              {"count", p.packing.spheres.size()},
              {"spheres", spheres},
              {"system", system_to_json({"", "", p.system})}};
}

PackingFile packing_from_json(const json& j) {
  expect_kind(j, "packing");
  PackingFile p;
  p.packing.dim = field(j, "dim").get<std::size_t>();
  p.super = j.value("super", false);
  p.bound = j.value("bound", std::string());
  p.max_word = j.value("max_word", std::size_t{0});
  p.packing.saturated = j.value("saturated", false);
  if (j.contains("system")) p.system = system_from_json(j.at("system")).system;
  for (const auto& e : field(j, "spheres")) {
    Sphere s{wall_from_json(e), 0, -1, 0};
    s.word_length = e.value("word_length", std::size_t{0});
    if (e.contains("parent_generator") && !e.at("parent_generator").is_null()) {
      s.parent_generator = e.at("parent_generator").get<long>() - 1;
    }
    if (e.contains("origin")) s.origin = e.at("origin").get<std::size_t>() - 1;
    if (s.v.dim() != p.packing.dim) bad("sphere dimension disagrees with 'dim'");
    p.packing.spheres.push_back(std::move(s));
  }
  return p;
}

GramMatrix load_gram(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".cox") {
    return gram_from_diagram(parse_diagram(text));
  }
  const json j = parse_json(text);
  const std::string kind = j.is_object() ? j.value("kind", std::string()) : std::string();
  if (kind == "gram") return gram_from_json(j);
  if (kind == "wall_system") return gram_matrix(system_from_json(j).system.walls);
  bad("'" + path + "' is neither a .cox diagram, a gram.json nor a wall system");
}

}  // namespace packinglab::io

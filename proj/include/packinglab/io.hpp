#pragma once

#include <string>

#include "json.hpp"
#include "packinglab/geometrize.hpp"
#include "packinglab/gram.hpp"
#include "packinglab/orbit.hpp"

namespace packinglab::io {

using json = nlohmann::ordered_json;

/// On-disk wall system with its descriptive fields. Indices in files are 1-based.
struct SystemFile {
  std::string name;
  std::string provenance;
  WallSystem system;
};

struct PackingFile {
  Packing packing;
  bool super = false;
  std::string bound;
  std::size_t max_word = 0;
  WallSystem system;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
json parse_json(const std::string& text);

json wall_to_json(const InversiveVector& v);
InversiveVector wall_from_json(const json& j);

json system_to_json(const SystemFile& s);
SystemFile system_from_json(const json& j);

json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const json& j);

json target_to_json(const TargetSpec& t);
TargetSpec target_from_json(const json& j);

json packing_to_json(const PackingFile& p);
PackingFile packing_from_json(const json& j);

/// Gram matrix from a .cox diagram, a gram.json or a wall-system json.
GramMatrix load_gram(const std::string& path);

std::string dump(const json& j);

}  // namespace packinglab::io

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "packinglab/coxeter.hpp"
#include "packinglab/fixtures.hpp"
#include "packinglab/io.hpp"

using namespace packinglab;

namespace {

std::string shipped(const std::string& name) {
  return io::read_file(std::string(PACKINGLAB_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("shipped fixtures match the built-in ones") {
  for (const auto& name : fixtures::names()) {
    CAPTURE(name);
    CHECK(fixtures::text(name) == shipped(name));
  }
  CHECK(kind_of([] { fixtures::text("nope.json"); }).has_value());
}

TEST_CASE("wall system round trip") {
  for (const auto& sf : {fixtures::apollonian(), fixtures::cuboctahedron(),
                         fixtures::hexagonal_pyramid()}) {
    const auto j = io::system_to_json(sf);
    CHECK(j["format"] == 1);
    const auto back = io::system_from_json(io::parse_json(io::dump(j)));
    CHECK(back.name == sf.name);
    CHECK(back.system.walls == sf.system.walls);
    CHECK(back.system.cluster == sf.system.cluster);
    CHECK(back.system.cocluster == sf.system.cocluster);
    CHECK(io::dump(io::system_to_json(back)) == io::dump(j));
  }
}

TEST_CASE("gram and target round trips") {
  const auto g = fixtures::hexpyr_gram();
  CHECK(io::gram_from_json(io::parse_json(io::dump(io::gram_to_json(g)))) == g);
  GramMatrix partial(3);
  partial.set(0, 1, QuadExt(1));
  partial.set(1, 2, std::nullopt);
  CHECK(io::gram_from_json(io::gram_to_json(partial)) == partial);

  const auto t = fixtures::cuboctahedron_target();
  const auto back = io::target_from_json(io::parse_json(io::dump(io::target_to_json(t))));
  CHECK(back.wall_count == t.wall_count);
  CHECK(back.targets == t.targets);
  CHECK(back.cluster == t.cluster);
  CHECK(back.cocluster == t.cocluster);
}

TEST_CASE("packing round trip") {
  io::PackingFile pf;
  pf.system = fixtures::hexagonal_pyramid().system;
  pf.packing = generate_superpacking(pf.system, 20, 40);
  pf.super = true;
  pf.bound = "20";
  pf.max_word = 40;
  const auto back = io::packing_from_json(io::parse_json(io::dump(io::packing_to_json(pf))));
  REQUIRE(back.packing.spheres.size() == pf.packing.spheres.size());
  for (std::size_t i = 0; i < pf.packing.spheres.size(); ++i) {
    CHECK(back.packing.spheres[i].v == pf.packing.spheres[i].v);
    CHECK(back.packing.spheres[i].word_length == pf.packing.spheres[i].word_length);
    CHECK(back.packing.spheres[i].parent_generator == pf.packing.spheres[i].parent_generator);
    CHECK(back.packing.spheres[i].origin == pf.packing.spheres[i].origin);
  }
  CHECK(back.packing.saturated == pf.packing.saturated);
  CHECK(back.super);
  CHECK(back.bound == "20");
  CHECK(back.system.walls == pf.system.walls);
}

TEST_CASE("load_gram accepts every input kind") {
  const std::string dir = PACKINGLAB_FIXTURE_DIR;
  CHECK(io::load_gram(dir + "/hexpyr.gram.json") == fixtures::hexpyr_gram());
  CHECK(io::load_gram(dir + "/hexpyr.json") == fixtures::hexpyr_gram());
  CHECK(io::load_gram(dir + "/cox6.cox") ==
        gram_from_diagram(parse_diagram(fixtures::kCox6)));
}

TEST_CASE("malformed files") {
  CHECK(kind_of([] { io::parse_json("{\"format\": 1,"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::read_file("/nonexistent/file.json"); }) == ErrorKind::IoError);
  CHECK(kind_of([] { io::write_file("/nonexistent/dir/file.json", "x"); }) == ErrorKind::IoError);
  CHECK(kind_of([] {
          io::wall_from_json(io::parse_json("[\"1\", \"1\", \"0\", \"0\"]"));
        }).has_value());
  CHECK(kind_of([] { io::system_from_json(io::parse_json("{\"format\": 2}")); }).has_value());
  CHECK(kind_of([] { io::wall_from_json(io::parse_json("[\"1/0\", \"1\", \"0\"]")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("export writes every fixture") {
  const auto dir = std::filesystem::temp_directory_path() / "packinglab_fixture_export";
  std::filesystem::remove_all(dir);
  fixtures::export_all(dir.string());
  for (const auto& name : fixtures::names())
    CHECK(io::read_file((dir / name).string()) == fixtures::text(name));
  std::filesystem::remove_all(dir);
}

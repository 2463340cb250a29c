#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "packinglab/cli.hpp"
#include "packinglab/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = packinglab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(PACKINGLAB_FIXTURE_DIR) + "/" + name;
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "packinglab_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli parse and decompose") {
  auto r = run({"parse", fixture("cox6.cox")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "1/2*sqrt(2)"));
  r = run({"parse", fixture("cox6.cox"), "--json"});
  CHECK(r.code == 0);
  CHECK(packinglab::io::parse_json(r.out)["kind"] == "gram");
  r = run({"decompose", fixture("eisenstein.cox")});
  CHECK(r.code == 0);
  CHECK(r.out == "C={1} Chat={2,3,4,5}\nC={3} Chat={1,2,4,5}\n");
  r = run({"decompose", fixture("eisenstein_bianchi.cox")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "no decomposition found"));
}

TEST_CASE("cli arith") {
  auto r = run({"arith", fixture("hexpyr.gram.json")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "NonArithmetic witness=(1,14) product=16/3"));
  r = run({"arith", fixture("apollonian.json"), "--max-len", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PassesUpTo 3"));
}

TEST_CASE("cli orbit, certify, render and lg-scan") {
  const auto packing = scratch("apollonian.packing.json");
  auto r = run({"orbit", fixture("apollonian.json"), "--bound", "15", "--out", packing});
  CHECK(r.code == 0);
  CHECK(has(r.out, "count: 19"));
  CHECK(has(r.out, "saturated: true"));
  CHECK(has(r.out, "bends: -1,2,2,3,3,6,6,6,6,11,11,11,11,14,14,14,14,15,15"));

  r = run({"certify", packing});
  CHECK(r.code == 0);
  CHECK(has(r.out, "integral: true"));

  const auto svg = scratch("apollonian.svg");
  r = run({"render", packing, "--out", svg, "--labels"});
  CHECK(r.code == 0);
  CHECK(has(packinglab::io::read_file(svg), "<circle"));

  r = run({"lg-scan", packing, "--mod", "24", "--bound", "15"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "residues mod 24: 2,3,6,11,14,15,18,23"));

  const auto hex = scratch("hexpyr.super.json");
  r = run({"orbit", fixture("hexpyr.json"), "--bound", "30", "--max-word", "40", "--super",
           "--jobs", "2", "--out", hex});
  CHECK(r.code == 0);
  r = run({"certify", hex});
  CHECK(r.code == 0);
  CHECK(has(r.out, "integral: false"));
  r = run({"render", hex, "--out", scratch("hex.svg"), "--center", "0.5", "0", "--half-width",
           "0.8", "--size", "400", "--min-radius", "2"});
  CHECK(r.code == 0);
}

TEST_CASE("cli geometrize") {
  const auto out = scratch("tetra.system.json");
  auto r = run({"geometrize", fixture("tetrahedron.target.json"), "--d", "0", "--out", out});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verified: 28 products exact"));
  const auto sys = packinglab::io::system_from_json(
      packinglab::io::parse_json(packinglab::io::read_file(out)));
  CHECK(sys.system.walls.size() == 8);
}

TEST_CASE("cli fixtures") {
  auto r = run({"fixtures", "list"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "apollonian.json"));
  r = run({"fixtures", "show", "eisenstein.cox"});
  CHECK(r.code == 0);
  CHECK(r.out == packinglab::io::read_file(fixture("eisenstein.cox")));
  r = run({"fixtures", "export", "--dir", scratch("fixtures")});
  CHECK(r.code == 0);
}

TEST_CASE("cli failures") {
  auto r = run({"certify", scratch("missing.json")});
  CHECK(r.code == 1);
  const auto e = packinglab::io::parse_json(r.err);
  CHECK(e["error"] == "IoError");
  r = run({"arith", fixture("apollonian.json"), "--max-len", "1"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "InvalidInput"));
  r = run({"orbit", fixture("apollonian.json"), "--bound", "two"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "ParseError"));
  CHECK(run({"orbit", fixture("apollonian.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

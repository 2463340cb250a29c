#include <cmath>
#include <regex>

#include "doctest.h"
#include "helpers.hpp"
#include "packinglab/fixtures.hpp"
#include "packinglab/render.hpp"

using namespace packinglab;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("empty packing") {
  Packing p;
  p.dim = 2;
  const auto svg = render_svg(p, {}, true);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count(svg, "<circle") == 0);
  CHECK(count(svg, "<text") == 0);
}

TEST_CASE("Apollonian picture with labels") {
  const auto p = generate_packing(fixtures::apollonian().system, 15, 100);
  const auto svg = render_svg(p, {}, true);
  CHECK(count(svg, "<circle") == p.spheres.size());
  CHECK(count(svg, "<text") == p.spheres.size());
  CHECK(svg.find(">-1</text>") != std::string::npos);
  CHECK(count(svg, ">15</text>") == 2);
  // The outer circle of radius 1 fills 800 / 2.2 pixels.
  CHECK(svg.find("<circle cx=\"400.000000\" cy=\"400.000000\" r=\"363.636364\"/>") !=
        std::string::npos);
  CHECK(svg == render_svg(p, {}, true));
  CHECK(count(render_svg(p, {}, false), "<text") == 0);
}

TEST_CASE("small circles are dropped") {
  const auto p = generate_packing(fixtures::apollonian().system, 1000, 100);
  Viewport vp;
  vp.min_radius_px = 3;
  const double scale = vp.size_px / (2 * vp.half_width);
  std::size_t expected = 0;
  for (const auto& s : p.spheres)
    if (1 / std::fabs(s.v.bend().to_double()) * scale >= vp.min_radius_px) ++expected;
  const auto svg = render_svg(p, vp, false);
  CHECK(count(svg, "<circle") == expected);
  CHECK(expected < p.spheres.size());

  const std::regex radius("r=\"([0-9.]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), radius); it != std::sregex_iterator();
       ++it)
    CHECK(std::stod((*it)[1]) >= 3 - 1e-6);
}

TEST_CASE("viewport culling and lines") {
  const auto hex = fixtures::hexagonal_pyramid().system;
  const auto p = generate_packing(hex, 30, 50);
  Viewport far;
  far.cx = 100;
  const auto svg = render_svg(p, far, false);
  CHECK(count(svg, "<circle") == 0);

  Packing lines;
  lines.dim = 2;
  lines.spheres.push_back({plane_from_normal_offset({0, 1}, 0), 0, -1, 0});
  const auto l = render_svg(lines, {}, false);
  const bool drawn =
      l.find("<line x1=\"0.000000\" y1=\"400.000000\" x2=\"800.000000\" y2=\"400.000000\"/>") !=
          std::string::npos ||
      l.find("<line x1=\"800.000000\" y1=\"400.000000\" x2=\"0.000000\" y2=\"400.000000\"/>") !=
          std::string::npos;
  CHECK(drawn);
  lines.spheres[0].v = plane_from_normal_offset({0, 1}, 5);
  CHECK(count(render_svg(lines, {}, false), "<line") == 0);
}

TEST_CASE("render rejects what it cannot draw") {
  Packing p;
  p.dim = 3;
  CHECK(kind_of([&] { render_svg(p, {}, false); }) == ErrorKind::UnsupportedDimension);
  Packing flat;
  flat.dim = 2;
  Viewport bad;
  bad.half_width = 0;
  CHECK(kind_of([&] { render_svg(flat, bad, false); }) == ErrorKind::InvalidInput);
}

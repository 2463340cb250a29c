#include "doctest.h"
#include "helpers.hpp"
#include "packinglab/coxeter.hpp"
#include "packinglab/fixtures.hpp"

using namespace packinglab;

namespace {

QuadExt q(const char* s) { return QuadExt::parse(s); }

}  // namespace

TEST_CASE("parse the six-wall diagram") {
  const auto d = parse_diagram(fixtures::kCox6);
  CHECK(d.vertex_count == 6);
  CHECK(d.edges.size() == 6);
  CHECK(d.edges.at({0, 1}).kind == EdgeKind::Tangent);
  CHECK(d.edges.at({2, 3}).kind == EdgeKind::Tangent);
  CHECK(d.edges.at({1, 4}) == Edge{EdgeKind::Angle, 3, std::nullopt});
  CHECK(d.edges.at({1, 5}) == Edge{EdgeKind::Angle, 4, std::nullopt});
  CHECK(d.edges.at({2, 5}).kind == EdgeKind::Disjoint);
  CHECK(d.edges.at({3, 4}).kind == EdgeKind::Disjoint);
}

TEST_CASE("parse edge cases") {
  const auto two = parse_diagram("vertices 2\n");
  CHECK(two.vertex_count == 2);
  CHECK(two.edges.empty());
  CHECK(gram_from_diagram(two) == GramMatrix(2));
  CHECK(kind_of([] { parse_diagram("vertices 2\n1 2 angle 2\n"); }) == ErrorKind::BadMultiplicity);
  CHECK(kind_of([] { parse_diagram("vertices 3\n1 2 tangent\n2 1 angle 3\n"); }) ==
        ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { parse_diagram("1 2 tangent\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_diagram("vertices 2\n1 3 tangent\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_diagram("vertices 2\n1 2 kissing\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_diagram("vertices 2\n1 2 disjoint=1/2\n"); }) ==
        ErrorKind::ParseError);
  try {
    parse_diagram("vertices 3\n# fine\n\n1 2 tangent\n1 3 angle x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  const auto d = parse_diagram("vertices 3  # three walls\n1 2 disjoint=5/4+sqrt(2)\n");
  CHECK(*d.edges.at({0, 1}).value == q("5/4+sqrt(2)"));
}

TEST_CASE("Gram matrix of the six-wall diagram") {
  const auto g = gram_from_diagram(parse_diagram(fixtures::kCox6));
  CHECK(g.is_symmetric());
  for (std::size_t i = 0; i < 6; ++i) CHECK(*g.at(i, i) == QuadExt(-1));
  CHECK(*g.at(0, 1) == QuadExt(1));
  CHECK(*g.at(1, 4) == q("1/2"));
  CHECK(*g.at(1, 5) == q("1/2*sqrt(2)"));
  CHECK(*g.at(2, 3) == QuadExt(1));
  CHECK_FALSE(g.at(2, 5).has_value());
  CHECK_FALSE(g.at(3, 4).has_value());
  int zeros = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) zeros += g.at(i, j) && g.at(i, j)->is_zero();
  CHECK(zeros == 15 - 6);
}

TEST_CASE("Gram matrix of the Eisenstein subgroup") {
  const auto g = gram_from_diagram(parse_diagram(fixtures::kEisenstein));
  CHECK(*g.at(0, 1) == QuadExt(1));
  CHECK(*g.at(1, 4) == q("1/2"));
  CHECK(*g.at(2, 3) == QuadExt(1));
  CHECK(*g.at(3, 4) == q("1/2*sqrt(3)"));
  CHECK(g.at(0, 2)->is_zero());
}

TEST_CASE("angles") {
  CHECK(cos_pi_over(3) == q("1/2"));
  CHECK(cos_pi_over(4) == q("1/2*sqrt(2)"));
  CHECK(cos_pi_over(5) == q("1/4+1/4*sqrt(5)"));
  CHECK(cos_pi_over(6) == q("1/2*sqrt(3)"));
  CHECK(kind_of([] { cos_pi_over(7); }) == ErrorKind::UnrepresentableAngle);
  CHECK(kind_of([] {
          gram_from_diagram(parse_diagram("vertices 3\n1 2 angle 4\n2 3 angle 6\n"));
        }) == ErrorKind::UnrepresentableAngle);
  const auto five = gram_from_diagram(parse_diagram("vertices 3\n1 2 angle 5\n2 3 angle 3\n"));
  CHECK(five.at(0, 1)->disc() == 5);
}

TEST_CASE("round trips") {
  for (const char* text : {fixtures::kCox6, fixtures::kEisenstein, fixtures::kEisensteinBianchi}) {
    const auto d = parse_diagram(text);
    CHECK(parse_diagram(print_diagram(d)) == d);
    const auto g = gram_from_diagram(d);
    CHECK(diagram_from_gram(g) == d);
    CHECK(gram_from_diagram(diagram_from_gram(g)) == g);
  }
  const auto valued = parse_diagram("vertices 3\n1 2 disjoint=7\n2 3 tangent\n");
  CHECK(diagram_from_gram(gram_from_diagram(valued)) == valued);
}

TEST_CASE("classifying a large matrix") {
  const auto d = diagram_from_gram(fixtures::hexpyr_gram());
  CHECK(d.edges.at({0, 13}).kind == EdgeKind::Disjoint);
  CHECK(*d.edges.at({0, 13}).value == q("2/3*sqrt(3)"));
  CHECK(d.edges.at({0, 1}).kind == EdgeKind::Tangent);
  CHECK(d.edges.count({0, 7}) == 0);
  CHECK(gram_from_diagram(d) == fixtures::hexpyr_gram());

  GramMatrix bad(3);
  bad.set(0, 1, q("3/10"));
  CHECK(kind_of([&] { diagram_from_gram(bad); }) == ErrorKind::UnclassifiableEntry);
  try {
    diagram_from_gram(bad);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
  GramMatrix negative(2);
  negative.set(0, 1, q("-1/2"));
  CHECK(kind_of([&] { diagram_from_gram(negative); }) == ErrorKind::UnclassifiableEntry);
}

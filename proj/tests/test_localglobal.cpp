#include <algorithm>
#include <array>
#include <string>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "packinglab/arithmetic.hpp"
#include "packinglab/fixtures.hpp"
#include "packinglab/localglobal.hpp"

using namespace packinglab;

namespace {

std::vector<QuadExt> root_bends() {
  return bends_vector(fixtures::apollonian().system.cluster_walls());
}

std::vector<long> long_bends(const Packing& p) {
  std::vector<long> out;
  for (const auto& b : bends_list(p)) out.push_back(b.rat_part().get_num().get_si());
  return out;
}

std::vector<std::string> flat(const Matrix& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j).str());
  return out;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// Residues of the Descartes quadruple orbit using the swap rule directly.
std::set<long> swap_closure(std::array<long, 4> q, long m) {
  for (auto& x : q) x = mod(x, m);
  std::set<std::array<long, 4>> seen = {q};
  std::vector<std::array<long, 4>> stack = {q};
  while (!stack.empty()) {
    const auto cur = stack.back();
    stack.pop_back();
    for (int i = 0; i < 4; ++i) {
      auto next = cur;
      next[i] = mod(2 * (cur[0] + cur[1] + cur[2] + cur[3] - cur[i]) - cur[i], m);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  std::set<long> out;
  for (const auto& s : seen) out.insert(s.begin(), s.end());
  return out;
}

}  // namespace

TEST_CASE("Apollonian bends group is the Descartes group") {
  const auto gens = bends_group(fixtures::apollonian().system);
  REQUIRE(gens.size() == 4);
  std::set<std::vector<std::string>> expected;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix s = Matrix::identity(4);
    for (std::size_t j = 0; j < 4; ++j) s(i, j) = QuadExt(i == j ? -1 : 2);
    expected.insert(flat(s));
  }
  std::set<std::vector<std::string>> got;
  for (const auto& g : gens) got.insert(flat(g));
  CHECK(got == expected);
  CHECK(bends_group(fixtures::apollonian().system, true).size() == 8);
}

TEST_CASE("residue orbits") {
  const auto gens = bends_group(fixtures::apollonian().system);
  const auto b = root_bends();
  CHECK(residue_orbit(gens, b, 1).residues == std::vector<long>{0});
  for (long m : {2L, 3L, 4L, 5L, 8L, 12L, 24L}) {
    const auto ro = residue_orbit(gens, b, m);
    const auto ref = swap_closure({-1, 2, 2, 3}, m);
    CHECK(std::set<long>(ro.residues.begin(), ro.residues.end()) == ref);
  }
  const auto r24 = residue_orbit(gens, b, 24);
  CHECK(r24.residues == std::vector<long>{2, 3, 6, 11, 14, 15, 18, 23});
  CHECK(r24.admits(-1));
  CHECK(r24.admits(26));
  CHECK_FALSE(r24.admits(24));
}

TEST_CASE("residues project consistently") {
  const auto gens = bends_group(fixtures::apollonian().system);
  const auto b = root_bends();
  const auto r24 = residue_orbit(gens, b, 24);
  for (long m : {2L, 3L, 4L, 6L, 8L, 12L}) {
    std::set<long> projected;
    for (long r : r24.residues) projected.insert(r % m);
    const auto rm = residue_orbit(gens, b, m);
    CHECK(std::vector<long>(projected.begin(), projected.end()) == rm.residues);
  }
}

TEST_CASE("packing bends respect the residues") {
  const auto ap = fixtures::apollonian().system;
  const auto bends = long_bends(generate_packing(ap, 1000, 100));
  const auto gens = bends_group(ap);
  for (long m : {2L, 3L, 8L, 24L}) {
    const auto ro = residue_orbit(gens, root_bends(), m);
    std::set<long> seen;
    for (long x : bends) {
      CHECK(ro.admits(x));
      seen.insert(mod(x, m));
    }
    CHECK(std::vector<long>(seen.begin(), seen.end()) == ro.residues);
  }
  const auto missing = missing_bends(bends, residue_orbit(gens, root_bends(), 24), 1000);
  CHECK(std::vector<long>(missing.begin(), missing.begin() + 3) == std::vector<long>{78, 159, 207});
  for (long x : missing) CHECK_FALSE(std::binary_search(bends.begin(), bends.end(), x));
}

TEST_CASE("missing bends edge cases") {
  ResidueOrbit all;
  all.modulus = 1;
  all.residues = {0};
  CHECK(missing_bends({}, all, 10).empty());
  CHECK(missing_bends({1, 2, 4}, all, 5) == std::vector<long>{3, 5});
  CHECK(missing_bends({1, 2, 4}, all, 0).empty());
  ResidueOrbit odd;
  odd.modulus = 2;
  odd.residues = {1};
  CHECK(missing_bends({-1, 3}, odd, 7) == std::vector<long>{1, 5, 7});
}

TEST_CASE("non-integral input") {
  const auto gens = bends_group(fixtures::apollonian().system);
  CHECK(kind_of([&] { residue_orbit(gens, {QuadExt(-1), QuadExt(2), QuadExt(2), QuadExt::parse("1/2")}, 24); }) ==
        ErrorKind::NonIntegralInput);
  CHECK(kind_of([&] { residue_orbit(gens, root_bends(), 0); }) == ErrorKind::InvalidInput);
  auto sup = fixtures::hexagonal_pyramid().system;
  CHECK(kind_of([&] { bends_group(sup); }) == ErrorKind::SingularCluster);
}

#include "packinglab/localglobal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "packinglab/arithmetic.hpp"
#include "packinglab/error.hpp"

namespace packinglab {

namespace {

long reduce(const QuadExt& x, long m) {
  if (!x.is_rational_integer()) {
    throw Error(ErrorKind::NonIntegralInput, "entry " + x.str() + " is not an integer");
  }
  mpz_class r = x.rat_part().get_num() % m;
  if (r < 0) r += m;
  return r.get_si();
}

long mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool ResidueOrbit::admits(long bend) const {
  return std::binary_search(residues.begin(), residues.end(), mod(bend, modulus));
}

ResidueOrbit residue_orbit(const std::vector<Matrix>& gens, const std::vector<QuadExt>& b,
                           long m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "modulus must be positive");
  const std::size_t k = b.size();
  std::vector<std::vector<long>> g;
  for (const auto& a : gens) {
    if (a.rows() != k || a.cols() != k) {
      throw Error(ErrorKind::DimensionMismatch, "generator shape does not match the vector");
    }
    std::vector<long> flat(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = reduce(a(i, j), m);
    g.push_back(std::move(flat));
  }
  std::vector<long> start(k);
  for (std::size_t i = 0; i < k; ++i) start[i] = reduce(b[i], m);

  std::set<std::vector<long>> seen{start};
  std::deque<std::vector<long>> queue{start};
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  while (!queue.empty()) {
    const std::vector<long> v = std::move(queue.front());
    queue.pop_front();
    for (long x : v) hit[static_cast<std::size_t>(x)] = true;
    for (const auto& a : g) {
      std::vector<long> w(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < k; ++j) s = (s + a[i * k + j] * v[j]) % m;
        w[i] = s;
      }
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  ResidueOrbit ro;
  ro.modulus = m;
  ro.orbit_size = seen.size();
  for (long r = 0; r < m; ++r)
    if (hit[static_cast<std::size_t>(r)]) ro.residues.push_back(r);
  return ro;
}

std::vector<long> missing_bends(const std::vector<long>& bends, const ResidueOrbit& ro,
                                long bound) {
  std::vector<long> out;
  if (bends.empty()) return out;
  const long lo = *std::min_element(bends.begin(), bends.end());
  const std::set<long> present(bends.begin(), bends.end());
  for (long x = lo; x <= bound; ++x)
    if (ro.admits(x) && !present.count(x)) out.push_back(x);
  return out;
}

std::vector<Matrix> bends_group(const WallSystem& ws, bool include_cluster) {
  const auto cluster = ws.cluster_walls();
  if (cluster.size() != ws.dim + 2) {
    throw Error(ErrorKind::SingularCluster,
                "the bends action needs a cluster of " + std::to_string(ws.dim + 2) +
                    " walls, got " + std::to_string(cluster.size()));
  }
  std::vector<Matrix> gens;
  for (std::size_t i : ws.cocluster)
    gens.push_back(bends_conjugate(reflection_matrix(ws.walls[i]), cluster));
  if (include_cluster) {
    for (std::size_t i : ws.cluster)
      gens.push_back(bends_conjugate(reflection_matrix(ws.walls[i]), cluster));
  }
  return gens;
}

}  // namespace packinglab

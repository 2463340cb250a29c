#include "packinglab/orbit.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "packinglab/error.hpp"

namespace packinglab {

std::vector<InversiveVector> WallSystem::cluster_walls() const {
  std::vector<InversiveVector> out;
  for (std::size_t i : cluster) out.push_back(walls.at(i));
  return out;
}

std::vector<InversiveVector> WallSystem::cocluster_walls() const {
  std::vector<InversiveVector> out;
  for (std::size_t i : cocluster) out.push_back(walls.at(i));
  return out;
}

void validate_system(const WallSystem& ws) {
  std::vector<int> seen(ws.walls.size(), 0);
  for (std::size_t i = 0; i < ws.walls.size(); ++i) {
    const auto& w = ws.walls[i];
    if (w.coords().size() != ws.dim + 2) {
      throw Error(ErrorKind::DimensionMismatch,
                  "wall " + std::to_string(i + 1) + " has " +
                      std::to_string(w.coords().size()) + " coordinates, expected " +
                      std::to_string(ws.dim + 2));
    }
    if (!validate(w)) {
      throw Error(ErrorKind::InvalidWall,
                  "wall " + std::to_string(i + 1) + " does not satisfy Q(v) = -1");
    }
  }
  auto mark = [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i : idx) {
      if (i >= ws.walls.size() || seen[i]++) {
        throw Error(ErrorKind::InvalidDecomposition,
                    "cluster/cocluster indices must partition the walls");
      }
    }
  };
  mark(ws.cluster);
  mark(ws.cocluster);
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(seen.size())) {
    throw Error(ErrorKind::InvalidDecomposition,
                "cluster/cocluster indices must partition the walls");
  }
}

namespace {

struct Child {
  InversiveVector v;
  std::size_t parent;
  long generator;
};

// Reflects every frontier sphere in every generator, keeping children within
// the bound. Work is split by frontier position so the concatenated result is
// independent of the thread count.
std::vector<Child> expand(const std::vector<Sphere>& spheres,
                          const std::vector<std::size_t>& frontier,
                          const std::vector<std::pair<long, InversiveVector>>& gens,
                          const QuadExt& bound, unsigned jobs) {
  auto work = [&](std::size_t lo, std::size_t hi, std::vector<Child>& out) {
    for (std::size_t f = lo; f < hi; ++f) {
      const InversiveVector& v = spheres[frontier[f]].v;
      for (const auto& [gi, g] : gens) {
        const QuadExt prod = inversive_product(v, g);
        if (prod.is_zero()) continue;
        InversiveVector child = reflect(v, g);
        if (child.bend().abs() > bound) continue;
        out.push_back({std::move(child), frontier[f], gi});
      }
    }
  };

  const std::size_t n = frontier.size();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n / 64, 1))));
  if (jobs == 1) {
    std::vector<Child> out;
    work(0, n, out);
    return out;
  }
  std::vector<std::vector<Child>> parts(jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    const std::size_t lo = n * t / jobs;
    const std::size_t hi = n * (t + 1) / jobs;
    threads.emplace_back(work, lo, hi, std::ref(parts[t]));
  }
  for (auto& th : threads) th.join();
  std::vector<Child> out;
  for (auto& part : parts)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

Packing orbit(const WallSystem& ws, const std::vector<std::size_t>& generators,
              const QuadExt& bound, std::size_t max_word, const OrbitOptions& opts) {
  validate_system(ws);
  std::vector<std::pair<long, InversiveVector>> gens;
  for (std::size_t i : generators) gens.emplace_back(static_cast<long>(i), ws.walls[i]);

  Packing p;
  p.dim = ws.dim;
  std::unordered_set<InversiveVector, InversiveVectorHash> seen;
  std::vector<std::size_t> frontier;
  for (std::size_t c : ws.cluster) {
    const InversiveVector& v = ws.walls[c];
    if (!seen.insert(v).second) continue;
    frontier.push_back(p.spheres.size());
    p.spheres.push_back({v, 0, -1, c});
  }

  for (std::size_t level = 0; !frontier.empty(); ++level) {
    std::vector<Child> children = expand(p.spheres, frontier, gens, bound, opts.jobs);
    if (level == max_word) {
      p.saturated = std::none_of(children.begin(), children.end(),
                                 [&](const Child& c) { return !seen.contains(c.v); });
      return p;
    }
    std::vector<std::size_t> next;
    for (auto& c : children) {
      if (seen.contains(c.v)) continue;
      seen.insert(c.v);
      next.push_back(p.spheres.size());
      const Sphere& parent = p.spheres[c.parent];
      p.spheres.push_back({std::move(c.v), level + 1, c.generator, parent.origin});
      if (next.size() > opts.frontier_cap) {
        throw Error(ErrorKind::FrontierOverflow,
                    "frontier at word length " + std::to_string(level + 1) +
                        " exceeds the cap of " + std::to_string(opts.frontier_cap));
      }
    }
    frontier = std::move(next);
  }
  p.saturated = true;
  return p;
}

void sort_output(Packing& p) {
  std::stable_sort(p.spheres.begin(), p.spheres.end(), [](const Sphere& a, const Sphere& b) {
    const auto c = a.v.bend() <=> b.v.bend();
    if (c != 0) return c < 0;
    return a.v < b.v;
  });
}

}  // namespace

Packing generate_packing(const WallSystem& ws, const QuadExt& bound, std::size_t max_word,
                         const OrbitOptions& opts) {
  Packing p = orbit(ws, ws.cocluster, bound, max_word, opts);
  sort_output(p);
  return p;
}

Packing generate_superpacking(const WallSystem& ws, const QuadExt& bound,
                              std::size_t max_word, const OrbitOptions& opts) {
  std::vector<std::size_t> all(ws.walls.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Packing p = orbit(ws, all, bound, max_word, opts);
  sort_output(p);
  return p;
}

IntegralityReport certify_integral(const Packing& p) {
  IntegralityReport r;
  for (std::size_t i = 0; i < p.spheres.size(); ++i) {
    const auto& s = p.spheres[i];
    if (!s.v.bend().is_rational_integer()) {
      r.integral = false;
      r.witnesses.push_back({i, s.v.bend(), s.word_length});
    }
  }
  return r;
}

std::vector<QuadExt> bends_list(const Packing& p) {
  std::vector<QuadExt> b;
  b.reserve(p.spheres.size());
  for (const auto& s : p.spheres) b.push_back(s.v.bend());
  std::sort(b.begin(), b.end());
  return b;
}

std::vector<std::pair<std::size_t, std::size_t>> tangency_graph(
    const std::vector<InversiveVector>& spheres) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const QuadExt one(1);
  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t j = i + 1; j < spheres.size(); ++j)
      if (inversive_product(spheres[i], spheres[j]) == one) edges.emplace_back(i, j);
  return edges;
}

}  // namespace packinglab

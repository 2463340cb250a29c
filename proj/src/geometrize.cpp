#include "packinglab/geometrize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "packinglab/error.hpp"

namespace packinglab {

using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

TargetSpec TargetSpec::from_gram(const GramMatrix& g, std::size_t dim) {
  TargetSpec t;
  t.dim = dim;
  t.wall_count = g.size();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) t.targets[{i, j}] = g.at(i, j);
  return t;
}

TargetSpec TargetSpec::from_polyhedron(std::size_t vertex_count,
                                       const std::vector<std::vector<std::size_t>>& faces) {
  TargetSpec t;
  t.dim = 2;
  t.wall_count = vertex_count + faces.size();
  std::vector<std::set<std::size_t>> face_sets;
  for (const auto& f : faces) {
    for (std::size_t v : f) {
      if (v >= vertex_count) {
        throw Error(ErrorKind::InvalidInput, "face refers to vertex " + std::to_string(v + 1) +
                                                 " of " + std::to_string(vertex_count));
      }
    }
    face_sets.emplace_back(f.begin(), f.end());
  }
  auto shared = [&](auto pred) {
    std::size_t n = 0;
    for (const auto& f : face_sets) n += pred(f);
    return n;
  };
  for (std::size_t a = 0; a < vertex_count; ++a)
    for (std::size_t b = a + 1; b < vertex_count; ++b) {
      const std::size_t n =
          shared([&](const std::set<std::size_t>& f) { return f.count(a) && f.count(b); });
      t.targets[{a, b}] = n >= 2 ? std::optional<QuadExt>(1) : std::nullopt;
    }
  for (std::size_t v = 0; v < vertex_count; ++v)
    for (std::size_t f = 0; f < faces.size(); ++f) {
      t.targets[{v, vertex_count + f}] =
          face_sets[f].count(v) ? std::optional<QuadExt>(0) : std::nullopt;
    }
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t h = f + 1; h < faces.size(); ++h) {
      std::size_t common = 0;
      for (std::size_t v : face_sets[f]) common += face_sets[h].count(v);
      t.targets[{vertex_count + f, vertex_count + h}] =
          common >= 2 ? std::optional<QuadExt>(1) : std::nullopt;
    }
  for (std::size_t v = 0; v < vertex_count; ++v) t.cluster.push_back(v);
  for (std::size_t f = 0; f < faces.size(); ++f) t.cocluster.push_back(vertex_count + f);
  return t;
}

namespace {

bool target_is(const TargetSpec& t, std::size_t i, std::size_t j, long value) {
  auto it = t.targets.find({std::min(i, j), std::max(i, j)});
  return it != t.targets.end() && it->second && *it->second == QuadExt(value);
}

}  // namespace

std::vector<Pin> default_gauge(const TargetSpec& t) {
  if (!t.pins.empty()) return t.pins;
  if (t.dim != 2) {
    throw Error(ErrorKind::GaugeDeficient, "no default gauge outside the plane; give pins");
  }
  const std::size_t k = t.wall_count;
  const std::size_t a = 0;
  std::optional<std::size_t> b;
  for (std::size_t j = 1; j < k && !b; ++j)
    if (target_is(t, a, j, 1)) b = j;
  if (!b) throw Error(ErrorKind::GaugeDeficient, "wall 1 is tangent to no other wall");

  std::vector<Pin> pins = {{a, 0, 0}, {a, 1, 0}, {a, 2, 0}, {a, 3, 1},
                           {*b, 0, -2}, {*b, 1, 0}, {*b, 2, 0}, {*b, 3, -1}};
  for (std::size_t c = 0; c < k; ++c) {
    if (c != a && c != *b && target_is(t, a, c, 1) && target_is(t, *b, c, 1)) {
      pins.push_back({c, 2, 0});
      return pins;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (c != a && c != *b && target_is(t, a, c, 0) && target_is(t, *b, c, 0)) {
      pins.push_back({c, 0, 0});
      return pins;
    }
  }
  throw Error(ErrorKind::GaugeDeficient,
              "no wall tangent or orthogonal to both walls " + std::to_string(a + 1) + " and " +
                  std::to_string(*b + 1));
}

namespace {

struct Problem {
  std::size_t walls = 0;
  std::size_t width = 0;
  std::vector<long double> base;
  std::vector<std::size_t> free;
  struct Term {
    std::size_t i, j;
    long double target;
    bool hinge;
  };
  std::vector<Term> terms;
  long double threshold = 1;

  std::size_t residual_count() const { return walls + terms.size(); }

  std::vector<long double> unpack(const Vec& x) const {
    std::vector<long double> all = base;
    for (std::size_t f = 0; f < free.size(); ++f) all[free[f]] = x[static_cast<Eigen::Index>(f)];
    return all;
  }

  // Q-product of walls i and j in the packed coordinate array.
  long double product(const std::vector<long double>& all, std::size_t i, std::size_t j) const {
    const long double* u = &all[i * width];
    const long double* v = &all[j * width];
    long double p = (u[0] * v[1] + u[1] * v[0]) / 2;
    for (std::size_t c = 2; c < width; ++c) p -= u[c] * v[c];
    return p;
  }

  // Q v for wall j, the gradient of <u, v> in u.
  void qvec(const std::vector<long double>& all, std::size_t j, long double* out) const {
    const long double* v = &all[j * width];
    out[0] = v[1] / 2;
    out[1] = v[0] / 2;
    for (std::size_t c = 2; c < width; ++c) out[c] = -v[c];
  }

  Vec residuals(const std::vector<long double>& all) const {
    Vec r(static_cast<Eigen::Index>(residual_count()));
    for (std::size_t w = 0; w < walls; ++w) r[static_cast<Eigen::Index>(w)] = product(all, w, w) + 1;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& term = terms[k];
      const long double p = product(all, term.i, term.j);
      r[static_cast<Eigen::Index>(walls + k)] =
          term.hinge ? std::min<long double>(0, p - threshold) : p - term.target;
    }
    return r;
  }

  Mat jacobian(const std::vector<long double>& all) const {
    Mat full = Mat::Zero(static_cast<Eigen::Index>(residual_count()),
                         static_cast<Eigen::Index>(walls * width));
    std::vector<long double> q(width);
    for (std::size_t w = 0; w < walls; ++w) {
      qvec(all, w, q.data());
      for (std::size_t c = 0; c < width; ++c)
        full(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(w * width + c)) = 2 * q[c];
    }
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& term = terms[k];
      if (term.hinge && product(all, term.i, term.j) >= threshold) continue;
      const auto row = static_cast<Eigen::Index>(walls + k);
      qvec(all, term.j, q.data());
      for (std::size_t c = 0; c < width; ++c)
        full(row, static_cast<Eigen::Index>(term.i * width + c)) += q[c];
      qvec(all, term.i, q.data());
      for (std::size_t c = 0; c < width; ++c)
        full(row, static_cast<Eigen::Index>(term.j * width + c)) += q[c];
    }
    Mat j(full.rows(), static_cast<Eigen::Index>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f)
      j.col(static_cast<Eigen::Index>(f)) = full.col(static_cast<Eigen::Index>(free[f]));
    return j;
  }
};

Problem build_problem(const TargetSpec& t, const std::vector<Pin>& pins, long double margin) {
  Problem pr;
  pr.walls = t.wall_count;
  pr.width = t.dim + 2;
  pr.threshold = 1 + margin;
  pr.base.assign(pr.walls * pr.width, 0);
  std::vector<bool> pinned(pr.walls * pr.width, false);
  for (const auto& p : pins) {
    if (p.wall >= pr.walls || p.coord >= pr.width) {
      throw Error(ErrorKind::InvalidInput, "pin outside the wall system");
    }
    pinned[p.wall * pr.width + p.coord] = true;
    pr.base[p.wall * pr.width + p.coord] = p.value;
  }
  for (std::size_t i = 0; i < pinned.size(); ++i)
    if (!pinned[i]) pr.free.push_back(i);
  for (const auto& [ij, value] : t.targets) {
    if (ij.first >= pr.walls || ij.second >= pr.walls || ij.first == ij.second) {
      throw Error(ErrorKind::InvalidInput, "target pair outside the wall system");
    }
    if (value) {
      pr.terms.push_back({ij.first, ij.second, value->to_long_double(), false});
    } else {
      pr.terms.push_back({ij.first, ij.second, 0, true});
    }
  }
  return pr;
}

long double max_abs(const Vec& r) { return r.size() ? r.cwiseAbs().maxCoeff() : 0.0L; }

struct Run {
  Vec x;
  long double residual;
  std::size_t iterations = 0;
  std::size_t accepted = 0;
  std::vector<long double> history;
};

Run levenberg_marquardt(const Problem& pr, Vec x, long double tol, std::size_t max_iter) {
  Run run;
  Vec r = pr.residuals(pr.unpack(x));
  long double cost = r.squaredNorm() / 2;
  run.history.push_back(cost);
  long double lambda = 1e-3L;
  for (; run.iterations < max_iter && max_abs(r) >= tol; ++run.iterations) {
    const Mat j = pr.jacobian(pr.unpack(x));
    const Mat jtj = j.transpose() * j;
    const Vec g = j.transpose() * r;
    bool accepted = false;
    while (lambda < 1e20L) {
      Mat a = jtj;
      for (Eigen::Index d = 0; d < a.rows(); ++d) a(d, d) += lambda * (jtj(d, d) + 1e-12L);
      const Vec step = a.ldlt().solve(-g);
      const Vec xn = x + step;
      const Vec rn = pr.residuals(pr.unpack(xn));
      const long double cn = rn.squaredNorm() / 2;
      if (std::isfinite(cn) && cn < cost) {
        x = xn;
        r = rn;
        cost = cn;
        lambda = std::max(lambda / 3, 1e-15L);
        accepted = true;
        ++run.accepted;
        run.history.push_back(cost);
        break;
      }
      lambda *= 4;
    }
    if (!accepted) break;
  }
  run.x = std::move(x);
  run.residual = max_abs(r);
  return run;
}

}  // namespace

FloatWallSystem realize(const TargetSpec& t, std::uint64_t seed, long double tol,
                        const RealizeOptions& opts,
                        const std::vector<std::vector<long double>>* initial) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  std::vector<Pin> pins = default_gauge(t);
  // A warm start keeps its own placement of the gauge walls.
  if (initial) {
    for (auto& p : pins) {
      if (p.wall < initial->size() && p.coord < (*initial)[p.wall].size()) {
        p.value = (*initial)[p.wall][p.coord];
      }
    }
  }
  const Problem pr = build_problem(t, pins, opts.disjoint_margin);
  const auto n = static_cast<Eigen::Index>(pr.free.size());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Run best;
  best.residual = std::numeric_limits<long double>::infinity();
  std::size_t best_start = 0;
  const std::size_t starts = initial ? 1 : std::max<std::size_t>(opts.starts, 1);
  for (std::size_t s = 0; s < starts; ++s) {
    Vec x(n);
    if (initial) {
      if (initial->size() != pr.walls) {
        throw Error(ErrorKind::DimensionMismatch, "initial configuration has the wrong size");
      }
      for (Eigen::Index f = 0; f < n; ++f) {
        const std::size_t idx = pr.free[static_cast<std::size_t>(f)];
        x[f] = (*initial)[idx / pr.width].at(idx % pr.width);
      }
    } else {
      for (Eigen::Index f = 0; f < n; ++f) x[f] = normal(rng);
    }
    Run run = levenberg_marquardt(pr, std::move(x), tol, opts.max_iterations);
    if (run.residual < best.residual) {
      best = std::move(run);
      best_start = s;
    }
    if (best.residual < tol) break;
  }
  if (!(best.residual < tol)) {
    std::ostringstream msg;
    msg << "no start reached tolerance " << static_cast<double>(tol) << " (best residual "
        << static_cast<double>(best.residual) << " after " << best.iterations
        << " iterations)";
    throw Error(ErrorKind::NoConvergence, msg.str());
  }

  if (n > 0) {
    const Mat j = pr.jacobian(pr.unpack(best.x));
    Eigen::JacobiSVD<Mat> svd(j);
    const Vec sv = svd.singularValues();
    const long double smax = sv.size() ? sv.maxCoeff() : 0;
    const long double smin = j.rows() >= j.cols() && sv.size() ? sv.minCoeff() : 0;
    if (smax == 0 || smin / smax < opts.gauge_ratio) {
      throw Error(ErrorKind::GaugeDeficient,
                  "the realization is not locally unique; the pins leave a free direction");
    }
  }

  FloatWallSystem fw;
  const auto all = pr.unpack(best.x);
  for (std::size_t w = 0; w < pr.walls; ++w)
    fw.walls.emplace_back(all.begin() + static_cast<long>(w * pr.width),
                          all.begin() + static_cast<long>((w + 1) * pr.width));
  fw.residual = best.residual;
  fw.iterations = best.iterations;
  fw.accepted_steps = best.accepted;
  fw.cost_history = std::move(best.history);
  fw.start = best_start;
  return fw;
}

QuadExt algebraic_guess(long double x, unsigned long d, unsigned long denom_bound,
                        long double tol) {
  if (denom_bound < 1) throw Error(ErrorKind::InvalidInput, "denominator bound must be >= 1");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
  const bool rational_only = d == 0 || !is_square_free(d) || d == 1;
  const QuadExt root = rational_only ? QuadExt(0) : QuadExt::sqrt(d);
  const long double sd = rational_only ? 0 : std::sqrt(static_cast<long double>(d));

  std::vector<QuadExt> found;
  auto consider = [&](long a, long b, unsigned long q) {
    const long double value = (static_cast<long double>(a) + b * sd) / q;
    if (std::fabs(value - x) > tol) return;
    QuadExt c = (QuadExt(a) + QuadExt(b) * root) / QuadExt(static_cast<long>(q));
    if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(std::move(c));
  };
  for (unsigned long q = 1; q <= denom_bound && found.size() < 2; ++q) {
    const long double qx = q * x;
    const long bmax =
        rational_only ? 0 : static_cast<long>(std::ceil(q * (std::fabs(x) + 1) / sd));
    for (long b = -bmax; b <= bmax && found.size() < 2; ++b) {
      const long a = std::lround(qx - b * sd);
      consider(a, b, q);
    }
  }
  if (found.empty()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no (a+b*sqrt(" << d << "))/q with q <= " << denom_bound << " near "
        << static_cast<double>(x);
    throw Error(ErrorKind::NoCandidate, msg.str());
  }
  if (found.size() > 1) {
    std::ostringstream msg;
    msg.precision(17);
    msg << static_cast<double>(x) << " is within tolerance of both " << found[0].str()
        << " and " << found[1].str();
    throw Error(ErrorKind::Ambiguous, msg.str());
  }
  return found.front();
}

WallSystem guess_walls(const FloatWallSystem& fw, const TargetSpec& t, unsigned long d,
                       unsigned long denom_bound, long double tol) {
  WallSystem ws;
  ws.dim = t.dim;
  ws.cluster = t.cluster;
  ws.cocluster = t.cocluster;
  for (std::size_t w = 0; w < fw.walls.size(); ++w) {
    std::vector<QuadExt> coords;
    for (std::size_t c = 0; c < fw.walls[w].size(); ++c) {
      try {
        coords.push_back(algebraic_guess(fw.walls[w][c], d, denom_bound, tol));
      } catch (const Error& e) {
        throw Error(e.kind(), "wall " + std::to_string(w + 1) + " coordinate " +
                                  std::to_string(c + 1) + ": " + e.what());
      }
    }
    ws.walls.emplace_back(std::move(coords));
  }
  return ws;
}

VerifyReport verify_realization(const WallSystem& ws, const TargetSpec& t) {
  VerifyReport rep;
  if (ws.walls.size() != t.wall_count) {
    throw Error(ErrorKind::DimensionMismatch,
                "system has " + std::to_string(ws.walls.size()) + " walls, target has " +
                    std::to_string(t.wall_count));
  }
  for (std::size_t i = 0; i < ws.walls.size(); ++i) {
    const QuadExt q = inversive_product(ws.walls[i], ws.walls[i]);
    if (q != QuadExt(-1)) rep.mismatches.push_back({i, i, "-1", q.str()});
  }
  for (const auto& [ij, target] : t.targets) {
    const QuadExt p = inversive_product(ws.walls[ij.first], ws.walls[ij.second]);
    if (target) {
      if (p != *target) rep.mismatches.push_back({ij.first, ij.second, target->str(), p.str()});
    } else if (!(p > QuadExt(1))) {
      rep.mismatches.push_back({ij.first, ij.second, ">1", p.str()});
    }
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

long double float_product(const std::vector<long double>& u, const std::vector<long double>& v) {
  long double p = (u[0] * v[1] + u[1] * v[0]) / 2;
  for (std::size_t c = 2; c < u.size(); ++c) p -= u[c] * v[c];
  return p;
}

std::vector<long double> float_reflect(const std::vector<long double>& v,
                                       const std::vector<long double>& s) {
  const long double f = 2 * float_product(v, s);
  std::vector<long double> out = v;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] += f * s[c];
  return out;
}

std::vector<long double> to_float(const InversiveVector& v) {
  std::vector<long double> out;
  for (const auto& x : v.coords()) out.push_back(x.to_long_double());
  return out;
}

}  // namespace packinglab

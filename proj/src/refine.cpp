#include "dtwmean/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "dtwmean/candidates.hpp"
#include "dtwmean/cost.hpp"
#include "dtwmean/simplify.hpp"

namespace dtwmean {

GridSpec::GridSpec(double width) : cell_width(width) {
  if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("cell width must be positive");
}

Point GridSpec::snap(PointView x) const {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::floor(x[i] / cell_width) * cell_width;
  return out;
}

Point grid_point(double cell_width, PointView x) { return GridSpec(cell_width).snap(x); }

BallUnion::BallUnion(std::vector<Point> c, double r) : centers(std::move(c)), radius(r) {
  if (centers.empty()) throw DomainError("ball union needs at least one center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("ball radius must be positive");
}

BallUnion BallUnion::around(const PointSequence& sequence, double radius) {
  return BallUnion(sequence.points(), radius);
}

namespace {

using CellIndex = std::vector<long long>;

// Cell [k w, (k+1) w) per axis meets the closed ball iff the closest point of
// its closure is within the radius, and strictly within when that point lies
// on an open upper face.
bool cell_meets_ball(const CellIndex& cell, double w, PointView center, double radius) {
  double dist2 = 0.0;
  bool on_open_face = false;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    const double lo = static_cast<double>(cell[i]) * w;
    const double hi = static_cast<double>(cell[i] + 1) * w;
    double diff = 0.0;
    if (center[i] < lo) {
      diff = lo - center[i];
    } else if (center[i] >= hi) {
      diff = center[i] - hi;
      on_open_face = true;
    }
    dist2 += diff * diff;
  }
  const double r2 = radius * radius;
  return dist2 < r2 || (dist2 == r2 && !on_open_face);
}

}  // namespace

std::vector<Point> grid_cover(const BallUnion& balls, double cell_width) {
  const GridSpec grid(cell_width);
  const std::size_t d = balls.centers.front().size();
  std::set<CellIndex> cells;
  std::size_t visited = 0;
  for (const Point& c : balls.centers) {
    if (c.size() != d) throw DomainError("point dimension mismatch");
    CellIndex lo(d), hi(d);
    double box = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = static_cast<long long>(std::floor((c[i] - balls.radius) / cell_width)) - 1;
      hi[i] = static_cast<long long>(std::floor((c[i] + balls.radius) / cell_width)) + 1;
      box *= static_cast<double>(hi[i] - lo[i] + 1);
    }
    if (box + static_cast<double>(visited) > static_cast<double>(kMaxGridCells)) {
      throw CapacityError("grid cover would visit more than " + std::to_string(kMaxGridCells) +
                          " cells");
    }
    CellIndex cell = lo;
    while (true) {
      ++visited;
      if (cell_meets_ball(cell, cell_width, c, balls.radius)) cells.insert(cell);
      std::size_t axis = 0;
      while (axis < d && cell[axis] == hi[axis]) {
        cell[axis] = lo[axis];
        ++axis;
      }
      if (axis == d) break;
      ++cell[axis];
    }
  }
  std::vector<Point> out;
  out.reserve(cells.size());
  for (const CellIndex& cell : cells) {
    Point g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = static_cast<double>(cell[i]) * cell_width;
    out.push_back(std::move(g));
  }
  return out;
}

double volumetric_bound(double r, double cell_width, std::size_t d) {
  const double dd = static_cast<double>(d);
  return 2.0 * std::pow(34.0 * r / (cell_width * std::sqrt(dd)) + 5.0, dd);
}

ScaleLadder ScaleLadder::build(double rough_estimate, std::size_t n, std::size_t m,
                               std::size_t ell, double p, double eps, std::size_t d) {
  ScaleLadder ladder;
  ladder.rough_estimate = rough_estimate;
  const double md = static_cast<double>(m);
  ladder.beta =
      2.0 * std::pow(68.0 * std::pow(md, 1.0 / p) / eps + 5.0, static_cast<double>(d));
  const std::size_t top = ceil_count(3.0 + std::log2(md * static_cast<double>(ell)) / p);
  for (std::size_t i = 0; i <= top; ++i) {
    ladder.rungs.push_back(rough_estimate * std::ldexp(1.0, -static_cast<int>(i)) /
                           static_cast<double>(n));
  }
  return ladder;
}

double rung_cell_width(double r, double eps, std::size_t m, double p, std::size_t d) {
  return eps * r /
         (std::pow(2.0 * static_cast<double>(m), 1.0 / p) * std::sqrt(static_cast<double>(d)));
}

std::size_t refine_sample_size(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  return ceil_count(std::log2(2.0 / delta));
}

RefineResult med_appr(const Dataset& data, const ProblemParams& params, std::uint64_t seed) {
  params.validate();
  const double p = params.p;
  const std::size_t n = data.size();
  const std::size_t m = data.max_complexity();
  const std::size_t d = data.dimension();
  if (params.eps > std::pow(static_cast<double>(m), 1.0 / p)) {
    throw DomainError("eps must not exceed m^{1/p} for the refinement guarantee");
  }

  RefineResult result;
  Rng rng(seed);
  result.sampled = sample_with_replacement(n, refine_sample_size(params.delta), rng);

  // Rough estimate from simplified samples; these are also the first candidates.
  std::vector<PointSequence> simplified;
  std::size_t best_simplified = 0;
  double rough = std::numeric_limits<double>::infinity();
  for (std::size_t i : result.sampled) {
    simplified.push_back(simplify(data[i], params.ell, p).sequence);
    const double c = cost(data, simplified.back(), p, 1.0);
    if (c < rough) {
      rough = c;
      best_simplified = simplified.size() - 1;
    }
  }
  result.rough_estimate = rough;
  result.sequence = simplified[best_simplified];
  result.cost = rough;
  result.candidates_scored = simplified.size();
  if (rough == 0.0) return result;

  const ScaleLadder ladder = ScaleLadder::build(rough, n, m, params.ell, p, params.eps, d);
  const double budget = static_cast<double>(params.ell) * ladder.beta;
  for (std::size_t rung = 0; rung < ladder.rungs.size(); ++rung) {
    const double r = ladder.rungs[rung];
    const double width = rung_cell_width(r, params.eps, m, p, d);
    for (std::size_t i : result.sampled) {
      std::vector<Point> cover = grid_cover(BallUnion::around(data[i], 4.0 * r), width);
      if (static_cast<double>(cover.size()) > budget) {
        ++result.covers_rejected;
        continue;
      }
      ++result.covers_accepted;
      const SequenceSpace space(std::move(cover), params.ell);
      if (space.size() > kMaxRefineCandidates - result.candidates_scored) {
        throw CapacityError("refinement candidates exceed " + std::to_string(kMaxRefineCandidates) +
                            " at rung " + std::to_string(rung) + " (r = " + std::to_string(r) +
                            ", " + std::to_string(space.alphabet().size()) + " grid points)");
      }
      result.candidates_scored += space.size();
      const ArgminResult best = argmin_cost(
          data, space.size(),
          [&space](std::size_t k, PointSequence& out, std::vector<std::size_t>& scratch) {
            space.build(k, out, scratch);
          },
          p, 1.0, result.cost);
      if (best.found()) {
        result.sequence = space.at(best.index);
        result.cost = best.cost;
      }
    }
  }
  result.fallback = result.covers_accepted == 0;
  return result;
}

}  // namespace dtwmean

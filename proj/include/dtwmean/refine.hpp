#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// Axis-aligned grid of cubic cells [k w, (k+1) w)^d.
struct GridSpec {
  double cell_width;

  explicit GridSpec(double width);
  /// Lower corner of the cell containing x: (floor(x_i / w) w)_i.
  Point snap(PointView x) const;
};

Point grid_point(double cell_width, PointView x);

/// Union of closed balls of a common radius.
struct BallUnion {
  std::vector<Point> centers;
  double radius;

  BallUnion(std::vector<Point> centers, double radius);
  static BallUnion around(const PointSequence& sequence, double radius);
};

inline constexpr std::size_t kMaxGridCells = 10'000'000;

/// Grid points of every cell meeting the ball union, deduplicated and sorted
/// by grid coordinates.
std::vector<Point> grid_cover(const BallUnion& balls, double cell_width);

/// 2 (34 r / (w sqrt d) + 5)^d: cells needed to cover a ball of radius 8r.
double volumetric_bound(double r, double cell_width, std::size_t d);

/// Scale guesses bracketing the optimal median cost.
struct ScaleLadder {
  double rough_estimate = 0.0;
  std::vector<double> rungs;
  /// Per-sequence grid budget.
  double beta = 0.0;

  static ScaleLadder build(double rough_estimate, std::size_t n, std::size_t m, std::size_t ell,
                           double p, double eps, std::size_t d);
};

/// Cell width used at rung r: eps r / ((2m)^{1/p} sqrt d).
double rung_cell_width(double r, double eps, std::size_t m, double p, std::size_t d);

/// ceil(log2(2 / delta)).
std::size_t refine_sample_size(double delta);

inline constexpr std::size_t kMaxRefineCandidates = 10'000'000;

struct RefineResult {
  PointSequence sequence;
  /// cost_p^1(T, sequence).
  double cost = 0.0;
  /// Best simplification cost over the sampled sequences.
  double rough_estimate = 0.0;
  std::vector<std::size_t> sampled;
  std::size_t candidates_scored = 0;
  std::size_t covers_accepted = 0;
  std::size_t covers_rejected = 0;
  /// No grid cover passed the size test; the best simplification was returned.
  bool fallback = false;
};

/// (1 + eps)-approximate restricted (p,1)-mean of points in R^d with
/// probability >= 1 - delta. Requires eps <= m^{1/p}. Uses params.p, eps,
/// delta, ell; q is fixed to 1.
RefineResult med_appr(const Dataset& data, const ProblemParams& params, std::uint64_t seed);

}  // namespace dtwmean

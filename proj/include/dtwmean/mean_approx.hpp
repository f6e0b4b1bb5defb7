#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dtwmean/candidates.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

struct MeanResult {
  PointSequence sequence;
  /// cost_p^q(T, sequence) with the q the algorithm optimizes.
  double cost = 0.0;
  CandidateSet candidates;
  /// Points drawn (sampling) or net size (deterministic variant).
  std::size_t pool_size = 0;
};

inline constexpr std::size_t kMaxMeanCandidates = 100'000;

/// eps / (2^{p-1} + eps): the ball-size fraction that keeps (2^p + eps) quality.
double ball_fraction(double eps, double p);

/// ceil(m (ln ell + ln(1/delta)) / ball_fraction(eps, p)).
std::size_t mean_sample_size(std::size_t m, std::size_t ell, double delta, double eps, double p);

/// Randomized restricted p-mean: samples vertices uniformly with replacement,
/// enumerates every sequence of at most ell sampled points and returns the
/// cheapest under cost_p^p. Identical sampled points are merged before
/// enumeration. (2^p + eps)-approximate with probability >= 1 - delta.
MeanResult mean_c(const Dataset& data, const ProblemParams& params, std::uint64_t seed);

/// Ball range space over points of R^d (VC dimension d + 1).
struct BallRangeSpace {
  std::vector<Point> ground;
  std::size_t vc_dimension = 1;

  explicit BallRangeSpace(std::vector<Point> points);
};

inline constexpr std::size_t kMaxRangePoints = 40;
inline constexpr std::size_t kMaxRangeDimension = 3;

/// Every distinct intersection of a closed Euclidean ball with `points`, as
/// sorted index lists, in sorted order. Includes the empty set and the whole
/// set. Coincident points are always kept together.
std::vector<std::vector<std::size_t>> ball_ranges(const std::vector<Point>& points);

/// Indices of a set N hitting every ball range R with |R| >= eps |points|;
/// greedy hitting set over the explicit range family, ties to the smallest index.
std::vector<std::size_t> epsilon_net_indices(const std::vector<Point>& points, double eps);

std::vector<Point> epsilon_net(const std::vector<Point>& points, double eps);

/// Deterministic restricted p-mean: enumerates sequences over an
/// (eps'/m)-net of the vertex pool. Always (2^p + eps)-approximate.
MeanResult mean_c_d(const Dataset& data, const ProblemParams& params);

/// Distinct points in first-occurrence order.
std::vector<Point> distinct_points(const std::vector<Point>& points);

}  // namespace dtwmean

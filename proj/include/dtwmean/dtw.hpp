#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// Monotone coupling of two sequences. Pairs are 0-based (i indexes the first
/// sequence, j the second), start at (0, 0), end at (m1-1, m2-1) and advance by
/// (0,1), (1,0) or (1,1).
using Warping = std::vector<std::pair<std::size_t, std::size_t>>;

struct DtwResult {
  double distance = 0.0;
  /// sum of rho^p along the warping, i.e. distance^p up to rounding.
  double power_cost = 0.0;
  Warping warping;
};

/// p-DTW distance with one optimal warping. Backtracking prefers the diagonal
/// predecessor, then (i-1, j), then (i, j-1).
DtwResult dtw(const PointSequence& a, const PointSequence& b, double p);

/// Minimum of sum rho^p over all warpings, without recovering the path.
/// Returns +infinity once every cell of a row exceeds `limit`; the value is
/// then known to exceed `limit`.
double dtw_power_cost(const PointSequence& a, const PointSequence& b, double p,
                      double limit = std::numeric_limits<double>::infinity());

/// Sum of rho^p over the pairs of `w`, accumulated in path order.
double warping_power_cost(const PointSequence& a, const PointSequence& b, const Warping& w,
                          double p);

bool is_valid_warping(const Warping& w, std::size_t m1, std::size_t m2);

/// Number of (m1, m2)-warpings (the Delannoy number D(m1-1, m2-1)); saturates at
/// the maximum size_t.
std::size_t warping_count(std::size_t m1, std::size_t m2);

inline constexpr std::size_t kMaxEnumeratedWarpings = 1'000'000;

/// Every (m1, m2)-warping in lexicographic step order. Throws CapacityError
/// when there are more than kMaxEnumeratedWarpings.
std::vector<Warping> enumerate_warpings(std::size_t m1, std::size_t m2);

}  // namespace dtwmean

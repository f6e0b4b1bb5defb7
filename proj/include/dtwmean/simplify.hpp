#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

struct SimplificationResult {
  PointSequence sequence;
  /// dtw_p(input, sequence).
  double discrete_cost = 0.0;
  /// Quality guarantee against the best simplification with arbitrary vertices.
  double alpha = 2.0;
};

/// Pool point minimizing sum_{v in segment} rho(v, x)^p, with that sum.
/// Ties go to the smallest pool index.
std::pair<std::size_t, double> best_anchor(std::span<const Point> segment,
                                           std::span<const Point> pool, double p);

/// Minimum-error simplification of `pi` with at most `ell` vertices drawn from
/// its own vertices. Optimal among such sequences, hence within factor 2 of any
/// simplification under dtw_p. O(m^4 ell).
SimplificationResult simplify(const PointSequence& pi, std::size_t ell, double p);

}  // namespace dtwmean

#pragma once

#include <cstddef>
#include <vector>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

struct DbaResult {
  PointSequence sequence;
  /// cost_p^p(T, sequence).
  double cost = 0.0;
  /// Cost of the initial sequence followed by the cost after each accepted update.
  std::vector<double> trace;
  std::size_t iterations = 0;
  /// The last update raised the cost and was discarded.
  bool reverted = false;
};

/// DTW barycenter averaging: alternate optimal warpings and coordinate-wise
/// section means until the relative decrease drops below 1e-9 or max_iters
/// updates were made. Heuristic; no approximation guarantee.
DbaResult dba(const Dataset& data, const PointSequence& init, double p, std::size_t max_iters);

/// The input sequence whose (2,ell)-simplification has the lowest cost_p^p,
/// simplified.
PointSequence dba_default_init(const Dataset& data, std::size_t ell, double p);

}  // namespace dtwmean

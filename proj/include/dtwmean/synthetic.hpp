#pragma once

#include <cstddef>
#include <cstdint>

#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// n noisy, time-warped copies of `base`. Each copy draws its length
/// uniformly from [min_length, max_length] and resamples base monotonically:
/// longer copies repeat random vertices (every vertex kept at least once),
/// shorter ones keep a random ordered subset. Every coordinate then gets
/// independent uniform noise in [-noise, noise].
Dataset generate_synthetic(const PointSequence& base, std::size_t n, double noise,
                           std::size_t min_length, std::size_t max_length, std::uint64_t seed);

}  // namespace dtwmean

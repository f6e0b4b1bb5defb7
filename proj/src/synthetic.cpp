#include "dtwmean/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "dtwmean/candidates.hpp"

namespace dtwmean {

Dataset generate_synthetic(const PointSequence& base, std::size_t n, double noise,
                           std::size_t min_length, std::size_t max_length, std::uint64_t seed) {
  if (base.empty()) throw DomainError("base sequence must be nonempty");
  if (n == 0) throw DomainError("n must be at least 1");
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw DomainError("noise must be non-negative");
  if (min_length == 0 || min_length > max_length) {
    throw DomainError("length range must satisfy 1 <= min <= max");
  }

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(min_length, max_length);
  std::uniform_int_distribution<std::size_t> index_dist(0, base.size() - 1);
  std::uniform_real_distribution<double> noise_dist(-noise, noise);
  const std::size_t m = base.size();

  std::vector<PointSequence> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t length = length_dist(rng);
    std::vector<std::size_t> indices;
    if (length >= m) {
      indices.resize(m);
      std::iota(indices.begin(), indices.end(), 0);
      for (std::size_t extra = m; extra < length; ++extra) indices.push_back(index_dist(rng));
    } else {
      // Partial Fisher-Yates: the first `length` slots are a uniform subset.
      std::vector<std::size_t> all(m);
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t i = 0; i < length; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, m - 1);
        std::swap(all[i], all[pick(rng)]);
      }
      indices.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(length));
    }
    std::sort(indices.begin(), indices.end());

    PointSequence seq;
    Point point(base.dimension());
    for (std::size_t idx : indices) {
      for (std::size_t c = 0; c < point.size(); ++c) {
        point[c] = base[idx][c] + (noise > 0.0 ? noise_dist(rng) : 0.0);
      }
      seq.push_back(point);
    }
    out.push_back(std::move(seq));
  }
  return Dataset(std::move(out));
}

}  // namespace dtwmean

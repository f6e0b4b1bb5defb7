#include "dtwmean/simplify.hpp"

#include <limits>

#include "dtwmean/dtw.hpp"

namespace dtwmean {

std::pair<std::size_t, double> best_anchor(std::span<const Point> segment,
                                           std::span<const Point> pool, double p) {
  if (segment.empty() || pool.empty()) throw DomainError("segment and pool must be nonempty");
  require_exponent(p);
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < pool.size(); ++x) {
    double sum = 0.0;
    for (const Point& v : segment) {
      if (v.size() != pool[x].size()) throw DomainError("point dimension mismatch");
      sum += point_cost(v, pool[x], p);
    }
    if (sum < best_cost) {
      best_cost = sum;
      best = x;
    }
  }
  return {best, best_cost};
}

SimplificationResult simplify(const PointSequence& pi, std::size_t ell, double p) {
  if (pi.empty()) throw DomainError("cannot simplify an empty sequence");
  if (ell < 1) throw DomainError("ell must be at least 1");
  require_exponent(p);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::vector<Point> pool = pi.points();
  const std::size_t m = pool.size();

  // anchor[a][b]: best single vertex for the segment a..b (inclusive, 0-based).
  std::vector<std::vector<std::pair<std::size_t, double>>> anchor(m);
  for (std::size_t a = 0; a < m; ++a) {
    anchor[a].resize(m);
    for (std::size_t b = a; b < m; ++b) {
      anchor[a][b] = best_anchor(std::span(pool).subspan(a, b - a + 1), pool, p);
    }
  }

  // table[i][j]: best power cost for prefix 0..i with exactly j+1 vertices, each
  // vertex covering a nonempty contiguous segment. split[i][j] is the last
  // index of the previous segment.
  const std::size_t width = ell;
  std::vector<std::vector<double>> table(m, std::vector<double>(width, kInf));
  std::vector<std::vector<std::size_t>> split(m, std::vector<std::size_t>(width, 0));
  for (std::size_t i = 0; i < m; ++i) {
    table[i][0] = anchor[0][i].second;
    for (std::size_t j = 1; j < width && j <= i; ++j) {
      for (std::size_t prev = j - 1; prev < i; ++prev) {
        const double candidate = table[prev][j - 1] + anchor[prev + 1][i].second;
        if (candidate < table[i][j]) {
          table[i][j] = candidate;
          split[i][j] = prev;
        }
      }
    }
  }

  std::size_t best_j = 0;
  for (std::size_t j = 1; j < width; ++j) {
    if (table[m - 1][j] < table[m - 1][best_j]) best_j = j;
  }

  std::vector<std::size_t> picks(best_j + 1);
  std::size_t end = m - 1;
  for (std::size_t j = best_j + 1; j-- > 0;) {
    const std::size_t start = j == 0 ? 0 : split[end][j] + 1;
    picks[j] = anchor[start][end].first;
    if (j > 0) end = split[end][j];
  }

  SimplificationResult result;
  for (std::size_t x : picks) result.sequence.push_back(pool[x]);
  result.discrete_cost = dtw(pi, result.sequence, p).distance;
  return result;
}

}  // namespace dtwmean

#include "dtwmean/dtw.hpp"

#include <algorithm>
#include <string>

namespace dtwmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_inputs(const PointSequence& a, const PointSequence& b, double p) {
  require_same_dimension(a, b);
  require_exponent(p);
}

}  // namespace

DtwResult dtw(const PointSequence& a, const PointSequence& b, double p) {
  check_inputs(a, b, p);
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  // Full table, 1-based with an infinite border row/column.
  std::vector<double> table((n + 1) * (m + 1), kInf);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return table[i * (m + 1) + j]; };
  at(0, 0) = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double best = std::min({at(i - 1, j - 1), at(i - 1, j), at(i, j - 1)});
      at(i, j) = best + point_cost(a[i - 1], b[j - 1], p);
    }
  }

  DtwResult result;
  result.power_cost = at(n, m);
  result.distance = root_p(result.power_cost, p);

  std::size_t i = n;
  std::size_t j = m;
  result.warping.emplace_back(i - 1, j - 1);
  while (i > 1 || j > 1) {
    const double diag = at(i - 1, j - 1);
    const double up = at(i - 1, j);
    const double left = at(i, j - 1);
    if (diag <= up && diag <= left) {
      --i;
      --j;
    } else if (up <= left) {
      --i;
    } else {
      --j;
    }
    result.warping.emplace_back(i - 1, j - 1);
  }
  std::reverse(result.warping.begin(), result.warping.end());
  return result;
}

double dtw_power_cost(const PointSequence& a, const PointSequence& b, double p, double limit) {
  check_inputs(a, b, p);
  const std::size_t m = b.size();
  thread_local std::vector<double> row_a;
  thread_local std::vector<double> row_b;
  row_a.assign(m + 1, kInf);
  row_b.assign(m + 1, kInf);
  double* prev = row_a.data();
  double* curr = row_b.data();
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = kInf;
    double row_min = kInf;
    const PointView ai = a[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const double best = std::min({prev[j - 1], prev[j], curr[j - 1]});
      curr[j] = best + point_cost(ai, b[j - 1], p);
      row_min = std::min(row_min, curr[j]);
    }
    if (row_min > limit) return kInf;
    std::swap(prev, curr);
  }
  return prev[m];
}

double warping_power_cost(const PointSequence& a, const PointSequence& b, const Warping& w,
                          double p) {
  if (!is_valid_warping(w, a.size(), b.size())) throw DomainError("invalid warping");
  double sum = 0.0;
  for (const auto& [i, j] : w) sum += point_cost(a[i], b[j], p);
  return sum;
}

bool is_valid_warping(const Warping& w, std::size_t m1, std::size_t m2) {
  if (m1 == 0 || m2 == 0 || w.empty()) return false;
  if (w.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
  if (w.back() != std::pair<std::size_t, std::size_t>{m1 - 1, m2 - 1}) return false;
  if (w.size() > m1 + m2 - 1) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const std::size_t di = w[k].first - w[k - 1].first;
    const std::size_t dj = w[k].second - w[k - 1].second;
    if (w[k].first < w[k - 1].first || w[k].second < w[k - 1].second) return false;
    if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
  }
  return true;
}

std::size_t warping_count(std::size_t m1, std::size_t m2) {
  if (m1 == 0 || m2 == 0) return 0;
  constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();
  auto add = [](std::size_t x, std::size_t y) { return x > kSat - y ? kSat : x + y; };
  std::vector<std::size_t> row(m2, 1);
  for (std::size_t i = 1; i < m1; ++i) {
    std::size_t diag = row[0];
    for (std::size_t j = 1; j < m2; ++j) {
      const std::size_t up = row[j];
      row[j] = add(add(up, row[j - 1]), diag);
      diag = up;
    }
  }
  return row[m2 - 1];
}

namespace {

void extend(std::size_t m1, std::size_t m2, Warping& path, std::vector<Warping>& out) {
  const auto [i, j] = path.back();
  if (i == m1 - 1 && j == m2 - 1) {
    out.push_back(path);
    return;
  }
  if (j + 1 < m2) {
    path.emplace_back(i, j + 1);
    extend(m1, m2, path, out);
    path.pop_back();
  }
  if (i + 1 < m1) {
    path.emplace_back(i + 1, j);
    extend(m1, m2, path, out);
    path.pop_back();
  }
  if (i + 1 < m1 && j + 1 < m2) {
    path.emplace_back(i + 1, j + 1);
    extend(m1, m2, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Warping> enumerate_warpings(std::size_t m1, std::size_t m2) {
  if (m1 == 0 || m2 == 0) throw DomainError("warping dimensions must be at least 1");
  const std::size_t count = warping_count(m1, m2);
  if (count > kMaxEnumeratedWarpings) {
    throw CapacityError("enumerating (" + std::to_string(m1) + ", " + std::to_string(m2) +
                        ")-warpings would produce " + std::to_string(count) +
                        " paths, above the guard of " + std::to_string(kMaxEnumeratedWarpings));
  }
  std::vector<Warping> out;
  out.reserve(count);
  Warping path{{0, 0}};
  path.reserve(m1 + m2 - 1);
  extend(m1, m2, path, out);
  return out;
}

}  // namespace dtwmean

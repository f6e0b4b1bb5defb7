#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "dtwmean/sequence.hpp"

namespace testing {

using dtwmean::Dataset;
using dtwmean::Point;
using dtwmean::PointSequence;

inline PointSequence line(std::initializer_list<double> xs) {
  PointSequence s;
  for (double x : xs) s.push_back(Point{x});
  return s;
}

inline PointSequence random_sequence(std::mt19937_64& rng, std::size_t length, std::size_t dim,
                                     double lo = -5.0, double hi = 5.0) {
  std::uniform_real_distribution<double> coord(lo, hi);
  PointSequence s;
  Point p(dim);
  for (std::size_t i = 0; i < length; ++i) {
    for (double& c : p) c = coord(rng);
    s.push_back(p);
  }
  return s;
}

/// Integer-valued coordinates, so ties and exact sums are common.
inline PointSequence random_grid_sequence(std::mt19937_64& rng, std::size_t length, std::size_t dim,
                                          int lo = 0, int hi = 6) {
  std::uniform_int_distribution<int> coord(lo, hi);
  PointSequence s;
  Point p(dim);
  for (std::size_t i = 0; i < length; ++i) {
    for (double& c : p) c = coord(rng);
    s.push_back(p);
  }
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t max_len,
                              std::size_t dim, double lo = -5.0, double hi = 5.0) {
  std::vector<PointSequence> seqs;
  for (std::size_t i = 0; i < n; ++i) {
    seqs.push_back(random_sequence(rng, uniform(rng, 1, max_len), dim, lo, hi));
  }
  return Dataset(std::move(seqs));
}

inline double ground(const Point& a, const Point& b, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::pow(std::sqrt(s), p);
}

/// min over all warpings of the sum of rho^p, by plain recursion over paths.
inline double brute_dtw_power(const PointSequence& a, const PointSequence& b, double p) {
  const auto pa = a.points();
  const auto pb = b.points();
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                   double acc) {
    acc += ground(pa[i], pb[j], p);
    if (i + 1 == pa.size() && j + 1 == pb.size()) {
      best = std::min(best, acc);
      return;
    }
    if (i + 1 < pa.size()) walk(i + 1, j, acc);
    if (j + 1 < pb.size()) walk(i, j + 1, acc);
    if (i + 1 < pa.size() && j + 1 < pb.size()) walk(i + 1, j + 1, acc);
  };
  walk(0, 0, 0.0);
  return best;
}

inline double brute_cost(const Dataset& data, const PointSequence& c, double p, double q) {
  double total = 0.0;
  for (const PointSequence& tau : data) total += std::pow(std::pow(brute_dtw_power(c, tau, p), 1.0 / p), q);
  return total;
}

/// Every sequence of length 1..ell over `alphabet`.
inline void for_each_sequence(const std::vector<Point>& alphabet, std::size_t ell,
                              const std::function<void(const PointSequence&)>& visit) {
  std::vector<std::size_t> idx;
  std::function<void()> rec = [&] {
    if (!idx.empty()) {
      PointSequence s;
      for (std::size_t i : idx) s.push_back(alphabet[i]);
      visit(s);
    }
    if (idx.size() == ell) return;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      idx.push_back(i);
      rec();
      idx.pop_back();
    }
  };
  rec();
}

inline bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testing

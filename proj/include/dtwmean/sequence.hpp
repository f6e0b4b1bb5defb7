#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "dtwmean/errors.hpp"

namespace dtwmean {

using Point = std::vector<double>;
using PointView = std::span<const double>;

/// Euclidean ground distance between two points of equal dimension.
inline double euclidean(PointView a, PointView b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

/// rho(a, b)^p. The p = 1 and p = 2 cases avoid pow so that they are exact
/// functions of the coordinates.
inline double point_cost(PointView a, PointView b, double p) {
  if (p == 2.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double diff = a[i] - b[i];
      sum += diff * diff;
    }
    return sum;
  }
  const double dist = euclidean(a, b);
  if (p == 1.0) return dist;
  return std::pow(dist, p);
}

/// Inverse of the p-th power used to turn an accumulated warping cost into a
/// distance.
inline double root_p(double power_sum, double p) {
  if (p == 1.0) return power_sum;
  if (p == 2.0) return std::sqrt(power_sum);
  return std::pow(power_sum, 1.0 / p);
}

/// An ordered tuple of points of a common dimension, stored row-major.
class PointSequence {
 public:
  PointSequence() = default;
  PointSequence(std::size_t dimension, std::vector<double> coords);
  PointSequence(std::initializer_list<Point> points);
  explicit PointSequence(const std::vector<Point>& points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }
  bool empty() const { return coords_.empty(); }

  PointView operator[](std::size_t i) const {
    return PointView(coords_.data() + i * dimension_, dimension_);
  }

  void push_back(PointView point);
  void clear() { coords_.clear(); }
  void reserve(std::size_t n) { coords_.reserve(n * dimension_); }

  const std::vector<double>& coords() const { return coords_; }
  std::vector<Point> points() const;

  friend bool operator==(const PointSequence&, const PointSequence&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<double> coords_;
};

/// The input set T. Every sequence is nonempty and shares one dimension.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<PointSequence> sequences);

  std::size_t size() const { return sequences_.size(); }
  std::size_t dimension() const { return dimension_; }
  /// Maximum complexity over all sequences.
  std::size_t max_complexity() const { return max_complexity_; }
  std::size_t total_vertices() const { return total_vertices_; }

  const PointSequence& operator[](std::size_t i) const { return sequences_[i]; }
  const std::vector<PointSequence>& sequences() const { return sequences_; }

  auto begin() const { return sequences_.begin(); }
  auto end() const { return sequences_.end(); }

  /// Every vertex of every sequence in (sequence, index) order, duplicates kept.
  std::vector<Point> vertex_pool() const;

  Dataset subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<PointSequence> sequences_;
  std::size_t dimension_ = 0;
  std::size_t max_complexity_ = 0;
  std::size_t total_vertices_ = 0;
};

/// Parameters shared by the mean algorithms.
struct ProblemParams {
  double p = 1.0;
  double q = 1.0;
  std::size_t ell = 2;
  double eps = 1.0;
  double delta = 0.1;

  /// Throws DomainError unless p >= 1, q >= 1, ell >= 1, eps > 0, 0 < delta < 1.
  void validate() const;
};

void require_exponent(double p, const char* name = "p");
void require_same_dimension(const PointSequence& a, const PointSequence& b);

}  // namespace dtwmean

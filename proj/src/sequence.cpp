#include "dtwmean/sequence.hpp"

#include <algorithm>
#include <string>

namespace dtwmean {

namespace {

void check_finite(PointView point) {
  for (double v : point) {
    if (!std::isfinite(v)) throw DomainError("point coordinate is not finite");
  }
}

}  // namespace

PointSequence::PointSequence(std::size_t dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
  if (dimension_ == 0) throw DomainError("point dimension must be at least 1");
  if (coords_.size() % dimension_ != 0) {
    throw DomainError("coordinate count is not a multiple of the dimension");
  }
  check_finite(coords_);
}

PointSequence::PointSequence(std::initializer_list<Point> points)
    : PointSequence(std::vector<Point>(points)) {}

PointSequence::PointSequence(const std::vector<Point>& points) {
  if (points.empty()) return;
  dimension_ = points.front().size();
  if (dimension_ == 0) throw DomainError("point dimension must be at least 1");
  coords_.reserve(points.size() * dimension_);
  for (const Point& point : points) push_back(point);
}

void PointSequence::push_back(PointView point) {
  if (dimension_ == 0) {
    if (point.empty()) throw DomainError("point dimension must be at least 1");
    dimension_ = point.size();
  }
  if (point.size() != dimension_) throw DomainError("point dimension mismatch");
  check_finite(point);
  coords_.insert(coords_.end(), point.begin(), point.end());
}

std::vector<Point> PointSequence::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
  return out;
}

Dataset::Dataset(std::vector<PointSequence> sequences) : sequences_(std::move(sequences)) {
  if (sequences_.empty()) throw DomainError("dataset must contain at least one sequence");
  dimension_ = sequences_.front().dimension();
  for (std::size_t i = 0; i < sequences_.size(); ++i) {
    const PointSequence& s = sequences_[i];
    if (s.empty()) throw DomainError("sequence " + std::to_string(i) + " is empty");
    if (s.dimension() != dimension_) {
      throw DomainError("sequence " + std::to_string(i) + " has dimension " +
                        std::to_string(s.dimension()) + ", expected " + std::to_string(dimension_));
    }
    max_complexity_ = std::max(max_complexity_, s.size());
    total_vertices_ += s.size();
  }
}

std::vector<Point> Dataset::vertex_pool() const {
  std::vector<Point> pool;
  pool.reserve(total_vertices_);
  for (const PointSequence& s : sequences_) {
    for (std::size_t k = 0; k < s.size(); ++k) pool.emplace_back(s[k].begin(), s[k].end());
  }
  return pool;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<PointSequence> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(sequences_.at(i));
  return Dataset(std::move(picked));
}

void ProblemParams::validate() const {
  require_exponent(p, "p");
  require_exponent(q, "q");
  if (ell < 1) throw DomainError("ell must be at least 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
}

void require_exponent(double p, const char* name) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError(std::string(name) + " must be a finite real >= 1");
  }
}

void require_same_dimension(const PointSequence& a, const PointSequence& b) {
  if (a.empty() || b.empty()) throw DomainError("point sequence is empty");
  if (a.dimension() != b.dimension()) throw DomainError("point dimension mismatch");
}

}  // namespace dtwmean

// Subsystem oracle for closed Euclidean balls.
//
// Points are lifted onto the paraboloid z = |x|^2; a ball range is the set of
// lifted points on or below a non-vertical hyperplane. Every such set is
// attained at a vertex of its parameter polyhedron, i.e. by a hyperplane
// through dim+1 affinely independent lifted points, with the points on that
// hyperplane split by a small perturbation. Points are first reduced to their
// affine hull so that such vertices exist.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>

#include "dtwmean/mean_approx.hpp"

namespace dtwmean {

namespace {

using Vec = std::vector<double>;

std::optional<Vec> solve(std::vector<Vec> a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) <= 1e-11) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Coordinates in an orthonormal basis of the affine hull, centered on the
/// first point and scaled so the farthest point has norm 1.
std::vector<Vec> reduce_to_affine_hull(const std::vector<Point>& pts) {
  const Point& origin = pts.front();
  double scale = 0.0;
  for (const Point& p : pts) scale = std::max(scale, euclidean(p, origin));
  std::vector<Vec> basis;
  for (const Point& p : pts) {
    Vec v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = (p[i] - origin[i]) / scale;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& e : basis) {
        const double c = dot(v, e);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * e[i];
      }
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm > 1e-9) {
      for (double& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    Vec v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = (p[i] - origin[i]) / scale;
    Vec coords(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) coords[b] = dot(v, basis[b]);
    out.push_back(std::move(coords));
  }
  return out;
}

/// Whether some affine function is >= 0 on the masked points and < 0 on the
/// rest. Rows (x, 1) must have full column rank.
bool strictly_separable(const std::vector<const Vec*>& pts, std::uint64_t mask) {
  const std::size_t n = pts.size();
  const std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  if (mask == 0 || mask == full) return true;
  const std::size_t k = pts.front()->size() + 1;
  std::vector<Vec> rows(n, Vec(k));
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (mask >> i) & 1 ? 1.0 : -1.0;
    for (std::size_t c = 0; c + 1 < k; ++c) rows[i][c] = sign * (*pts[i])[c];
    rows[i][k - 1] = sign;
  }
  // {y : rows y >= 1} is pointed, so it is nonempty iff one of its candidate
  // vertices is feasible.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<Vec> a;
    for (std::size_t i : pick) a.push_back(rows[i]);
    if (auto y = solve(a, Vec(k, 1.0))) {
      bool ok = true;
      for (const Vec& r : rows) {
        if (dot(r, *y) < 1.0 - 1e-9) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    std::size_t i = k;
    while (i-- > 0 && pick[i] == n - k + i) {
    }
    if (i == static_cast<std::size_t>(-1)) return false;
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

constexpr std::size_t kMaxDegenerateOnPoints = 10;

std::vector<std::uint64_t> distinct_ranges(const std::vector<Vec>& x) {
  const std::size_t u = x.size();
  const std::uint64_t full = u == 64 ? ~0ULL : ((1ULL << u) - 1);
  std::unordered_set<std::uint64_t> found{0, full};
  const std::size_t dim = x.front().size();
  if (dim == 0) return {found.begin(), found.end()};

  std::vector<double> lifted(u);
  for (std::size_t i = 0; i < u; ++i) lifted[i] = dot(x[i], x[i]);
  constexpr double kOnTolerance = 1e-10;

  const std::size_t k = dim + 1;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::unordered_set<std::uint64_t> degenerate_seen;
  while (true) {
    std::vector<Vec> a;
    Vec rhs;
    for (std::size_t i : pick) {
      Vec row(x[i]);
      row.push_back(1.0);
      a.push_back(std::move(row));
      rhs.push_back(lifted[i]);
    }
    if (auto h = solve(std::move(a), std::move(rhs))) {
      std::uint64_t below = 0;
      std::uint64_t on = 0;
      for (std::size_t i = 0; i < u; ++i) {
        const double s = dot(Vec(h->begin(), h->end() - 1), x[i]) + h->back() - lifted[i];
        const bool defining = std::find(pick.begin(), pick.end(), i) != pick.end();
        if (defining || std::abs(s) <= kOnTolerance) {
          on |= 1ULL << i;
        } else if (s > 0) {
          below |= 1ULL << i;
        }
      }
      std::vector<std::size_t> on_ids;
      for (std::size_t i = 0; i < u; ++i) {
        if ((on >> i) & 1) on_ids.push_back(i);
      }
      const std::size_t non = on_ids.size();
      const bool general = non == k;
      if (general || degenerate_seen.insert(on).second) {
        if (!general && non > kMaxDegenerateOnPoints) {
          throw CapacityError(std::to_string(non) +
                              " co-spherical points exceed the degenerate-range guard");
        }
        std::vector<const Vec*> on_pts;
        for (std::size_t i : on_ids) on_pts.push_back(&x[i]);
        for (std::uint64_t sub = 0; sub < (1ULL << non); ++sub) {
          if (!general && !strictly_separable(on_pts, sub)) continue;
          std::uint64_t set = below;
          for (std::size_t b = 0; b < non; ++b) {
            if ((sub >> b) & 1) set |= 1ULL << on_ids[b];
          }
          found.insert(set);
        }
      }
    }
    std::size_t i = k;
    while (i-- > 0 && pick[i] == u - k + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

BallRangeSpace::BallRangeSpace(std::vector<Point> points)
    : ground(std::move(points)), vc_dimension(ground.empty() ? 1 : ground.front().size() + 1) {}

std::vector<Point> distinct_points(const std::vector<Point>& points) {
  std::vector<Point> out;
  std::set<Point> seen;
  for (const Point& p : points) {
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<std::size_t>> ball_ranges(const std::vector<Point>& points) {
  if (points.empty()) return {{}};
  const std::size_t dim = points.front().size();
  for (const Point& p : points) {
    if (p.size() != dim || dim == 0) throw DomainError("point dimension mismatch");
  }
  if (dim > kMaxRangeDimension) {
    throw CapacityError("ball ranges are enumerated only for dimension <= " +
                        std::to_string(kMaxRangeDimension));
  }

  const std::vector<Point> distinct = distinct_points(points);
  if (distinct.size() > kMaxRangePoints) {
    throw CapacityError(std::to_string(distinct.size()) +
                        " distinct points exceed the ball-range guard of " +
                        std::to_string(kMaxRangePoints));
  }
  std::vector<std::size_t> id(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    id[i] = static_cast<std::size_t>(std::find(distinct.begin(), distinct.end(), points[i]) -
                                     distinct.begin());
  }

  const std::vector<std::uint64_t> masks =
      distinct.size() == 1 ? std::vector<std::uint64_t>{0, 1}
                           : distinct_ranges(reduce_to_affine_hull(distinct));

  std::vector<std::vector<std::size_t>> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<std::size_t> range;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if ((mask >> id[i]) & 1) range.push_back(i);
    }
    out.push_back(std::move(range));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dtwmean

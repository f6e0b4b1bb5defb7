#include <doctest.h>

#include "dtwmean/dtw.hpp"
#include "dtwmean/simplify.hpp"
#include "support.hpp"

using namespace dtwmean;
using testing::line;

namespace {

double brute_simplification(const PointSequence& pi, std::size_t ell, double p) {
  double best = std::numeric_limits<double>::infinity();
  testing::for_each_sequence(pi.points(), ell, [&](const PointSequence& s) {
    best = std::min(best, testing::brute_dtw_power(s, pi, p));
  });
  return std::pow(best, 1.0 / p);
}

bool uses_input_vertices(const PointSequence& s, const PointSequence& pi) {
  const auto pool = pi.points();
  for (const Point& v : s.points()) {
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("simplify") {

TEST_CASE("best anchor examples") {
  const std::vector<Point> single{{7.0}};
  CHECK(best_anchor(single, single, 1.0) == std::pair<std::size_t, double>{0, 0.0});
  const std::vector<Point> seg{{0.0}, {2.0}};
  const std::vector<Point> pool{{0.0}, {1.0}, {2.0}};
  CHECK(best_anchor(seg, pool, 1.0) == std::pair<std::size_t, double>{0, 2.0});
  CHECK(best_anchor(seg, pool, 2.0) == std::pair<std::size_t, double>{1, 2.0});
  CHECK_THROWS_AS(best_anchor({}, pool, 1.0), DomainError);
  CHECK_THROWS_AS(best_anchor(seg, {}, 1.0), DomainError);
}

TEST_CASE("simplification examples") {
  const SimplificationResult flat = simplify(line({5, 5, 5}), 1, 1.0);
  CHECK(flat.sequence == line({5}));
  CHECK(flat.discrete_cost == 0.0);
  CHECK(flat.alpha == 2.0);

  const SimplificationResult steps = simplify(line({0, 0, 10, 10}), 2, 1.0);
  CHECK(steps.sequence == line({0, 10}));
  CHECK(steps.discrete_cost == 0.0);

  const SimplificationResult one = simplify(line({0, 4, 8}), 1, 1.0);
  CHECK(one.sequence == line({4}));
  CHECK(one.discrete_cost == 8.0);

  CHECK_THROWS_AS(simplify(PointSequence(), 2, 1.0), DomainError);
  CHECK_THROWS_AS(simplify(line({1}), 0, 1.0), DomainError);
}

TEST_CASE("the shortest optimal simplification is returned") {
  const SimplificationResult r = simplify(line({3, 3, 3, 3}), 3, 2.0);
  CHECK(r.sequence == line({3}));
}

TEST_CASE("simplification is optimal among input-vertex sequences") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = testing::uniform(rng, 1, 2);
    const PointSequence pi = trial % 2 == 0
                                 ? testing::random_grid_sequence(rng, testing::uniform(rng, 1, 6), d)
                                 : testing::random_sequence(rng, testing::uniform(rng, 1, 6), d);
    const std::size_t ell = testing::uniform(rng, 1, 3);
    for (double p : {1.0, 2.0}) {
      const SimplificationResult r = simplify(pi, ell, p);
      CHECK(r.sequence.size() <= ell);
      CHECK(uses_input_vertices(r.sequence, pi));
      CHECK(testing::close(r.discrete_cost, brute_simplification(pi, ell, p)));
      CHECK(r.discrete_cost == dtw(r.sequence, pi, p).distance);
    }
  }
}

TEST_CASE("simplification cost does not increase with ell") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSequence pi = testing::random_sequence(rng, 7, 1);
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t ell = 1; ell <= 7; ++ell) {
      const double c = simplify(pi, ell, 1.0).discrete_cost;
      CHECK(c <= previous);
      previous = c;
    }
    CHECK(previous == 0.0);
  }
}

}

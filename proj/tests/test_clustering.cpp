#include <doctest.h>

#include <set>

#include "dtwmean/clustering.hpp"
#include "dtwmean/cost.hpp"
#include "dtwmean/dtw.hpp"
#include "dtwmean/oracle.hpp"
#include "dtwmean/simplify.hpp"
#include "support.hpp"

using namespace dtwmean;
using testing::line;

TEST_SUITE("clustering") {

TEST_CASE("generator sample sizes") {
  CHECK(cand1_sample_size(1.0, 2.0, 4.0, 3, 2, 2.0 / std::exp(1.0)) == 24);
  CHECK(cand2_sample_size(4.0, 0.5) == 16);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    const double p = 1.0 + static_cast<double>(i % 3) / 2;
    const double eps = 0.25 + u(rng);
    const double beta = 2.0 + 10 * u(rng);
    const std::size_t m = 1 + i % 5;
    const std::size_t ell = 1 + i % 3;
    const double delta = u(rng);
    const double raw1 = (std::pow(2.0, p) / eps + 1) * beta * m * std::log(ell / delta);
    CHECK(cand1_sample_size(p, eps, beta, m, ell, delta) == static_cast<std::size_t>(std::ceil(raw1)));
    const double raw2 = 2 * beta * std::log2(2 / delta);
    CHECK(cand2_sample_size(beta, delta) == static_cast<std::size_t>(std::ceil(raw2)));
  }
}

TEST_CASE("cand1 with ell = 1 proposes single input vertices") {
  const Dataset t({line({0, 4, 2}), line({1, 3})});
  const CandidateSet c = cand1(t, 4.0, 0.2, 1.0, 1.0, 1, std::uint64_t{5});
  const auto pool = t.vertex_pool();
  CHECK(c.size() > 0);
  for (const PointSequence& s : c.candidates) {
    CHECK(s.size() == 1);
    CHECK(std::find(pool.begin(), pool.end(), Point{s[0][0]}) != pool.end());
  }
}

TEST_CASE("cand2 on copies proposes one simplification") {
  const PointSequence sigma = line({0, 5, 1, 6});
  const Dataset t({sigma, sigma, sigma});
  const CandidateSet c = cand2(t, 4.0, 1.0, 0.5, 2, std::uint64_t{9});
  CHECK(c.size() == 16);
  const SimplificationResult s = simplify(sigma, 2, 1.0);
  for (const PointSequence& x : c.candidates) CHECK(x == s.sequence);
  CHECK(testing::close(cost(t, c.candidates[0], 1.0, 1.0), 3 * s.discrete_cost));
}

TEST_CASE("clustering cost") {
  const Dataset t({line({0, 2}), line({0, 1, 2})});
  CHECK(clustering_cost(t, t.sequences(), 1.0, 1.0) == 0.0);
  const PointSequence c = line({0, 1});
  CHECK(clustering_cost(t, {c}, 2.0, 1.0) == cost(t, c, 2.0, 1.0));
  CHECK(clustering_cost(t, {line({0, 2}), line({5})}, 1.0, 1.0) == 1.0);
  CHECK_THROWS_AS(clustering_cost(t, {}, 1.0, 1.0), DomainError);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Dataset d = testing::random_dataset(rng, 5, 4, 1);
    std::vector<PointSequence> centers;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
      centers.push_back(testing::random_sequence(rng, 2, 1));
      const double v = clustering_cost(d, centers, 1.0, 2.0);
      CHECK(v <= previous);
      previous = v;
    }
  }
}

TEST_CASE("clustering parameters") {
  ClusteringParams p;
  p.k = 2;
  p.beta = 4.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.beta = 4.5;
  CHECK_NOTHROW(p.validate());
  CHECK(parse_generator("cand1") == Generator::Cand1);
  CHECK(parse_generator(to_string(Generator::Cand2)) == Generator::Cand2);
  CHECK_THROWS_AS(parse_generator("kmeans"), DomainError);
}

TEST_CASE("one center reduces to the best generated candidate") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Dataset t = testing::random_dataset(rng, 4, 3, 1);
    ClusteringParams params;
    params.k = 1;
    params.beta = 4.0;
    params.delta = 0.2;
    params.ell = 2;
    for (Generator g : {Generator::Cand1, Generator::Cand2}) {
      const CenterSet r = k_clustering(t, params, g, 100 + trial);
      Rng replay(100 + trial);
      const CandidateSet c = g == Generator::Cand1
                                 ? cand1(t, 4.0, 0.1, 1.0, 1.0, 2, replay)
                                 : cand2(t, 4.0, 1.0, 0.1, 2, replay);
      double best = std::numeric_limits<double>::infinity();
      for (const PointSequence& s : c.candidates) best = std::min(best, cost(t, s, 1.0, 1.0));
      CHECK(r.centers.size() == 1);
      CHECK(r.cost == best);
      CHECK(r.generator_calls == 1);
    }
  }
}

TEST_CASE("k at least n recovers the inputs") {
  const Dataset t({line({0, 1}), line({5, 6})});
  ClusteringParams params;
  params.k = 2;
  params.beta = 8.0;
  params.ell = 2;
  const CenterSet r = k_clustering(t, params, Generator::Cand1, 1);
  CHECK(r.cost == 0.0);
  CHECK(r.cost == clustering_cost(t, r.centers, 1.0, 1.0));
  const CenterSet s = k_clustering(t, params, Generator::Cand2, 1);
  CHECK(s.cost == 0.0);
}

TEST_CASE("planted groups are separated") {
  const Dataset t({line({0, 1, 1}), line({0, 0, 1}), line({1, 0}), line({20, 21}),
                   line({20, 20, 21}), line({21, 21})});
  ClusteringParams params;
  params.k = 2;
  params.beta = 8.0;
  params.delta = 0.2;
  params.ell = 2;
  const double opt = exact_clustering(t, 2, 2, OracleMode::Line11).cost;
  const double bound = (1 + 4.0 * 2 / (8.0 - 4)) * 3.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const CenterSet r = k_clustering(t, params, Generator::Cand1, seed);
    CHECK(r.centers.size() <= 2);
    CHECK(r.cost <= bound * opt);
    CHECK(testing::close(r.cost, clustering_cost(t, r.centers, 1.0, 1.0)));
    const CenterSet again = k_clustering(t, params, Generator::Cand1, seed);
    CHECK(again.cost == r.cost);
    CHECK(again.centers == r.centers);
  }
}

}

#include "dtwmean/mean_approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dtwmean {

namespace {

void check_candidate_count(std::size_t alphabet, std::size_t ell, const char* what) {
  const std::size_t count = sequences_up_to(alphabet, ell);
  if (count > kMaxMeanCandidates) {
    throw CapacityError(std::string(what) + ": " + std::to_string(alphabet) +
                        " distinct points give " + std::to_string(count) +
                        " candidates, above the guard of " + std::to_string(kMaxMeanCandidates) +
                        "; lower ell, raise eps or delta");
  }
}

MeanResult best_over(const Dataset& data, std::vector<Point> alphabet, std::size_t ell, double p,
                     Provenance provenance) {
  MeanResult result;
  result.pool_size = alphabet.size();
  result.candidates.provenance = provenance;
  result.candidates.candidates = all_sequences_up_to(alphabet, ell);
  const ArgminResult best = argmin_cost(data, result.candidates.candidates, p, p);
  result.sequence = result.candidates.candidates[best.index];
  result.cost = best.cost;
  return result;
}

}  // namespace

double ball_fraction(double eps, double p) { return eps / (std::pow(2.0, p - 1.0) + eps); }

std::size_t mean_sample_size(std::size_t m, std::size_t ell, double delta, double eps, double p) {
  const double numerator =
      static_cast<double>(m) * (std::log(static_cast<double>(ell)) + std::log(1.0 / delta));
  return ceil_count(numerator / ball_fraction(eps, p));
}

MeanResult mean_c(const Dataset& data, const ProblemParams& params, std::uint64_t seed) {
  params.validate();
  const std::vector<Point> pool = data.vertex_pool();
  const std::size_t draws =
      mean_sample_size(data.max_complexity(), params.ell, params.delta, params.eps, params.p);

  Rng rng(seed);
  std::vector<Point> sampled;
  sampled.reserve(draws);
  for (std::size_t i : sample_with_replacement(pool.size(), draws, rng)) sampled.push_back(pool[i]);
  std::vector<Point> alphabet = distinct_points(sampled);
  check_candidate_count(alphabet.size(), params.ell, "mean_c");

  MeanResult result = best_over(data, std::move(alphabet), params.ell, params.p, Provenance::Sampled);
  result.pool_size = draws;
  return result;
}

std::vector<std::size_t> epsilon_net_indices(const std::vector<Point>& points, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("eps must lie in (0, 1]");
  if (points.empty()) return {};
  const auto ranges = ball_ranges(points);
  const double threshold = eps * static_cast<double>(points.size());

  std::vector<std::vector<bool>> heavy;
  for (const auto& r : ranges) {
    if (!r.empty() && static_cast<double>(r.size()) >= threshold) {
      std::vector<bool> member(points.size(), false);
      for (std::size_t i : r) member[i] = true;
      heavy.push_back(std::move(member));
    }
  }

  std::vector<std::size_t> net;
  std::vector<bool> hit(heavy.size(), false);
  std::size_t remaining = heavy.size();
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_hits = 0;
    for (std::size_t x = 0; x < points.size(); ++x) {
      std::size_t hits = 0;
      for (std::size_t r = 0; r < heavy.size(); ++r) {
        if (!hit[r] && heavy[r][x]) ++hits;
      }
      if (hits > best_hits) {
        best_hits = hits;
        best = x;
      }
    }
    net.push_back(best);
    for (std::size_t r = 0; r < heavy.size(); ++r) {
      if (!hit[r] && heavy[r][best]) {
        hit[r] = true;
        --remaining;
      }
    }
  }
  return net;
}

std::vector<Point> epsilon_net(const std::vector<Point>& points, double eps) {
  std::vector<Point> out;
  for (std::size_t i : epsilon_net_indices(points, eps)) out.push_back(points[i]);
  return out;
}

MeanResult mean_c_d(const Dataset& data, const ProblemParams& params) {
  params.validate();
  const double fraction = ball_fraction(params.eps, params.p);
  const double net_eps = fraction / static_cast<double>(data.max_complexity());
  std::vector<Point> net = epsilon_net(data.vertex_pool(), net_eps);
  check_candidate_count(net.size(), params.ell, "mean_c_d");
  return best_over(data, std::move(net), params.ell, params.p, Provenance::Net);
}

}  // namespace dtwmean

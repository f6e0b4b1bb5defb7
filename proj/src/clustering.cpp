#include "dtwmean/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "dtwmean/cost.hpp"
#include "dtwmean/mean_approx.hpp"
#include "dtwmean/simplify.hpp"

namespace dtwmean {

void ClusteringParams::validate() const {
  if (k == 0) throw DomainError("k must be at least 1");
  if (!(beta > 2.0 * static_cast<double>(k))) throw DomainError("beta must exceed 2k");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  require_exponent(p, "p");
  require_exponent(q, "q");
  if (ell == 0) throw DomainError("ell must be at least 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
}

double clustering_cost(const Dataset& data, const std::vector<PointSequence>& centers, double p,
                       double q) {
  if (centers.empty()) throw DomainError("center set must be nonempty");
  require_exponent(q, "q");
  double total = 0.0;
  for (const PointSequence& tau : data) {
    double best = std::numeric_limits<double>::infinity();
    for (const PointSequence& c : centers) best = std::min(best, dtw_power_cost(c, tau, p));
    total += cost_term(best, p, q);
  }
  return total;
}

std::size_t cand1_sample_size(double p, double eps, double beta, std::size_t m, std::size_t ell,
                              double delta) {
  const double factor = std::pow(2.0, p) / eps + 1.0;
  return ceil_count(factor * beta * static_cast<double>(m) *
                    std::log(static_cast<double>(ell) / delta));
}

std::size_t cand2_sample_size(double beta, double delta) {
  return ceil_count(2.0 * beta * std::log2(2.0 / delta));
}

namespace {

void check_sampling_params(double beta, double delta, double p, std::size_t ell) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  require_exponent(p, "p");
  if (ell == 0) throw DomainError("ell must be at least 1");
}

}  // namespace

CandidateSet cand1(const Dataset& data, double beta, double delta, double eps, double p,
                   std::size_t ell, Rng& rng) {
  check_sampling_params(beta, delta, p, ell);
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const std::vector<Point> pool = data.vertex_pool();
  const std::size_t draws = cand1_sample_size(p, eps, beta, data.max_complexity(), ell, delta);
  std::vector<Point> sampled;
  sampled.reserve(draws);
  for (std::size_t i : sample_with_replacement(pool.size(), draws, rng)) sampled.push_back(pool[i]);
  const std::vector<Point> alphabet = distinct_points(sampled);
  const std::size_t count = sequences_up_to(alphabet.size(), ell);
  if (count > kMaxClusterCandidates) {
    throw CapacityError("cand1: " + std::to_string(count) + " candidates exceed the guard of " +
                        std::to_string(kMaxClusterCandidates));
  }
  return {all_sequences_up_to(alphabet, ell), Provenance::Sampled};
}

CandidateSet cand1(const Dataset& data, double beta, double delta, double eps, double p,
                   std::size_t ell, std::uint64_t seed) {
  Rng rng(seed);
  return cand1(data, beta, delta, eps, p, ell, rng);
}

CandidateSet cand2(const Dataset& data, double beta, double p, double delta, std::size_t ell,
                   Rng& rng) {
  check_sampling_params(beta, delta, p, ell);
  CandidateSet out{{}, Provenance::Simplified};
  for (std::size_t i : sample_with_replacement(data.size(), cand2_sample_size(beta, delta), rng)) {
    out.candidates.push_back(simplify(data[i], ell, p).sequence);
  }
  return out;
}

CandidateSet cand2(const Dataset& data, double beta, double p, double delta, std::size_t ell,
                   std::uint64_t seed) {
  Rng rng(seed);
  return cand2(data, beta, p, delta, ell, rng);
}

std::string_view to_string(Generator g) { return g == Generator::Cand1 ? "cand1" : "cand2"; }

Generator parse_generator(std::string_view name) {
  if (name == "cand1") return Generator::Cand1;
  if (name == "cand2") return Generator::Cand2;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

namespace {

class BranchSearch {
 public:
  BranchSearch(const Dataset& data, const ClusteringParams& params, Generator generator,
               std::uint64_t seed)
      : data_(data), params_(params), generator_(generator), rng_(seed),
        call_delta_(params.delta / static_cast<double>(params.k + 1)) {}

  CenterSet run() {
    std::vector<std::size_t> active(data_.size());
    std::iota(active.begin(), active.end(), 0);
    const std::vector<double> nearest(data_.size(), std::numeric_limits<double>::infinity());
    std::vector<std::size_t> chosen;
    visit(active, nearest, chosen, params_.k);
    result_.centers.clear();
    for (std::size_t c : best_) result_.centers.push_back(pool_[c]);
    result_.cost = clustering_cost(data_, result_.centers, params_.p, params_.q);
    return result_;
  }

 private:
  std::vector<PointSequence> generate(const std::vector<std::size_t>& active) {
    ++result_.generator_calls;
    const Dataset subset = data_.subset(active);
    CandidateSet set = generator_ == Generator::Cand1
                           ? cand1(subset, params_.beta, call_delta_, params_.eps, params_.p,
                                   params_.ell, rng_)
                           : cand2(subset, params_.beta, params_.p, call_delta_, params_.ell, rng_);
    result_.candidates_generated += set.size();
    std::vector<PointSequence> out;
    std::set<std::vector<double>> seen;
    for (PointSequence& c : set.candidates) {
      if (seen.insert(c.coords()).second) out.push_back(std::move(c));
    }
    return out;
  }

  void visit(const std::vector<std::size_t>& active, const std::vector<double>& nearest,
             std::vector<std::size_t>& chosen, std::size_t remaining) {
    if (++result_.nodes > kMaxClusteringNodes) {
      throw CapacityError("clustering search exceeded " + std::to_string(kMaxClusteringNodes) +
                          " nodes; lower k, ell or beta");
    }
    if (remaining == 0 || active.empty()) {
      double total = 0.0;
      for (double v : nearest) total += v;
      if (total < best_cost_) {
        best_cost_ = total;
        best_ = chosen;
      }
      return;
    }

    for (PointSequence& c : generate(active)) {
      std::vector<double> next(nearest);
      for (std::size_t i = 0; i < data_.size(); ++i) {
        next[i] = std::min(next[i], cost_term(dtw_power_cost(c, data_[i], params_.p), params_.p,
                                              params_.q));
      }
      pool_.push_back(std::move(c));
      chosen.push_back(pool_.size() - 1);
      visit(active, next, chosen, remaining - 1);
      chosen.pop_back();
    }

    if (chosen.empty()) return;
    const double keep_fraction = 2.0 * static_cast<double>(params_.k) / params_.beta;
    const std::size_t drop =
        ceil_count(static_cast<double>(active.size()) * (1.0 - keep_fraction));
    std::vector<std::size_t> order(active);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return nearest[a] < nearest[b];
    });
    std::vector<std::size_t> rest(order.begin() + static_cast<std::ptrdiff_t>(drop), order.end());
    std::sort(rest.begin(), rest.end());
    visit(rest, nearest, chosen, remaining);
  }

  const Dataset& data_;
  const ClusteringParams& params_;
  Generator generator_;
  Rng rng_;
  double call_delta_;
  std::vector<PointSequence> pool_;
  std::vector<std::size_t> best_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  CenterSet result_;
};

}  // namespace

CenterSet k_clustering(const Dataset& data, const ClusteringParams& params, Generator generator,
                       std::uint64_t seed) {
  params.validate();
  return BranchSearch(data, params, generator, seed).run();
}

}  // namespace dtwmean

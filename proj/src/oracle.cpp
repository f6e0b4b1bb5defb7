#include "dtwmean/oracle.hpp"

#include <algorithm>
#include <limits>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include "dtwmean/candidates.hpp"
#include "dtwmean/clustering.hpp"
#include "dtwmean/cost.hpp"
#include "dtwmean/mean_approx.hpp"

namespace dtwmean {

std::string_view to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::Euclidean22: return "euclidean-2-2";
    case OracleMode::Line11: return "line-1-1";
    case OracleMode::Discrete: return "discrete";
  }
  return "unknown";
}

OracleMode parse_oracle_mode(std::string_view name) {
  if (name == "euclidean-2-2") return OracleMode::Euclidean22;
  if (name == "line-1-1") return OracleMode::Line11;
  if (name == "discrete") return OracleMode::Discrete;
  throw DomainError("unknown oracle mode '" + std::string(name) + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SectionState {
  std::size_t count = 0;
  Point sum;
  double sum_sq = 0.0;
  std::vector<double> values;
  std::vector<double> pool_cost;
};

class TupleSearch {
 public:
  TupleSearch(const Dataset& data, OracleMode mode, double p, std::vector<Point> pool)
      : data_(data), mode_(mode), p_(p), pool_(std::move(pool)) {}

  void run(std::size_t length) {
    options_.clear();
    for (const PointSequence& tau : data_) options_.push_back(enumerate_warpings(length, tau.size()));
    std::vector<SectionState> root(length);
    for (SectionState& s : root) {
      s.sum.assign(data_.dimension(), 0.0);
      s.pool_cost.assign(pool_.size(), 0.0);
    }
    chosen_.assign(data_.size(), 0);
    descend(0, root);
  }

  double best_value() const { return best_value_; }
  const PointSequence& best_mean() const { return best_mean_; }
  const std::vector<Warping>& best_warpings() const { return best_warpings_; }

 private:
  void add(SectionState& s, PointView x) const {
    ++s.count;
    switch (mode_) {
      case OracleMode::Euclidean22:
        for (std::size_t c = 0; c < x.size(); ++c) {
          s.sum[c] += x[c];
          s.sum_sq += x[c] * x[c];
        }
        break;
      case OracleMode::Line11:
        s.values.push_back(x[0]);
        break;
      case OracleMode::Discrete:
        for (std::size_t t = 0; t < pool_.size(); ++t) s.pool_cost[t] += point_cost(pool_[t], x, p_);
        break;
    }
  }

  // Optimal section cost and the minimizer.
  double optimum(const SectionState& s, Point* where) const {
    if (s.count == 0) return 0.0;
    switch (mode_) {
      case OracleMode::Euclidean22: {
        double norm_sq = 0.0;
        for (double v : s.sum) norm_sq += v * v;
        if (where) {
          *where = s.sum;
          for (double& v : *where) v /= static_cast<double>(s.count);
        }
        return std::max(0.0, s.sum_sq - norm_sq / static_cast<double>(s.count));
      }
      case OracleMode::Line11: {
        std::vector<double> v = s.values;
        const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
        std::nth_element(v.begin(), mid, v.end());
        const double median = *mid;
        if (where) *where = Point{median};
        double total = 0.0;
        for (double x : v) total += std::abs(x - median);
        return total;
      }
      case OracleMode::Discrete: {
        const auto it = std::min_element(s.pool_cost.begin(), s.pool_cost.end());
        if (where) *where = pool_[static_cast<std::size_t>(it - s.pool_cost.begin())];
        return *it;
      }
    }
    return kInf;
  }

  double bound(const std::vector<SectionState>& secs) const {
    double total = 0.0;
    for (const SectionState& s : secs) total += optimum(s, nullptr);
    return total;
  }

  void descend(std::size_t i, const std::vector<SectionState>& secs) {
    if (i == data_.size()) {
      const double value = bound(secs);
      if (value < best_value_) {
        best_value_ = value;
        best_mean_ = PointSequence();
        for (const SectionState& s : secs) {
          Point where;
          optimum(s, &where);
          best_mean_.push_back(where);
        }
        best_warpings_.clear();
        for (std::size_t t = 0; t < data_.size(); ++t) best_warpings_.push_back(options_[t][chosen_[t]]);
      }
      return;
    }
    const PointSequence& tau = data_[i];
    for (std::size_t w = 0; w < options_[i].size(); ++w) {
      std::vector<SectionState> next = secs;
      for (const auto& [j, k] : options_[i][w]) add(next[j], tau[k]);
      if (bound(next) >= best_value_) continue;
      chosen_[i] = w;
      descend(i + 1, next);
    }
  }

  const Dataset& data_;
  OracleMode mode_;
  double p_;
  std::vector<Point> pool_;
  std::vector<std::vector<Warping>> options_;
  std::vector<std::size_t> chosen_;
  double best_value_ = kInf;
  PointSequence best_mean_;
  std::vector<Warping> best_warpings_;
};

void check_tuple_guard(const Dataset& data, std::size_t length) {
  double tuples = 1.0;
  for (const PointSequence& tau : data) {
    tuples *= static_cast<double>(warping_count(length, tau.size()));
  }
  if (tuples > static_cast<double>(kMaxOracleTuples)) {
    std::ostringstream count;
    count << std::fixed << std::setprecision(0) << tuples;
    throw CapacityError("oracle would enumerate " + count.str() +
                        " warping tuples for complexity " + std::to_string(length) +
                        ", above the guard of " + std::to_string(kMaxOracleTuples));
  }
}

OracleResult direct_discrete(const Dataset& data, std::size_t ell, double p, double q) {
  const std::vector<Point> pool = distinct_points(data.vertex_pool());
  const std::size_t count = sequences_up_to(pool.size(), ell);
  if (count > kMaxOracleTuples) {
    throw CapacityError("oracle would score " + std::to_string(count) +
                        " vertex sequences, above the guard of " + std::to_string(kMaxOracleTuples));
  }
  const SequenceSpace space(pool, ell);
  const ArgminResult best = argmin_cost(
      data, space.size(),
      [&space](std::size_t k, PointSequence& out, std::vector<std::size_t>& scratch) {
        space.build(k, out, scratch);
      },
      p, q);
  OracleResult result;
  result.mean = space.at(best.index);
  for (const PointSequence& tau : data) result.warpings.push_back(dtw(result.mean, tau, p).warping);
  return result;
}

}  // namespace

OracleResult exact_mean(const Dataset& data, std::size_t ell, OracleMode mode, double p, double q) {
  if (ell == 0) throw DomainError("ell must be at least 1");
  switch (mode) {
    case OracleMode::Euclidean22:
      p = q = 2.0;
      break;
    case OracleMode::Line11:
      if (data.dimension() != 1) throw DomainError("line-1-1 oracle needs one-dimensional input");
      p = q = 1.0;
      break;
    case OracleMode::Discrete:
      require_exponent(p, "p");
      require_exponent(q, "q");
      break;
  }

  OracleResult result;
  if (mode == OracleMode::Discrete && p != q) {
    result = direct_discrete(data, ell, p, q);
  } else {
    for (std::size_t length = 1; length <= ell; ++length) check_tuple_guard(data, length);
    TupleSearch search(data, mode, p,
                       mode == OracleMode::Discrete ? distinct_points(data.vertex_pool())
                                                    : std::vector<Point>{});
    for (std::size_t length = 1; length <= ell; ++length) search.run(length);
    result.mean = search.best_mean();
    result.warpings = search.best_warpings();
  }
  result.p = p;
  result.q = q;
  result.cost = cost(data, result.mean, p, q);
  return result;
}

OracleClustering exact_clustering(const Dataset& data, std::size_t k, std::size_t ell,
                                  OracleMode mode, double p, double q) {
  const std::size_t n = data.size();
  if (k == 0) throw DomainError("k must be at least 1");
  if (n > kMaxOracleClusteringSequences || k > kMaxOracleClusters) {
    throw CapacityError("clustering oracle handles at most " +
                        std::to_string(kMaxOracleClusteringSequences) + " sequences and " +
                        std::to_string(kMaxOracleClusters) + " clusters");
  }

  std::map<unsigned, OracleResult> solved;
  auto solve = [&](unsigned mask) -> const OracleResult& {
    auto it = solved.find(mask);
    if (it != solved.end()) return it->second;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) members.push_back(i);
    }
    return solved.emplace(mask, exact_mean(data.subset(members), ell, mode, p, q)).first->second;
  };

  // Restricted growth strings enumerate each partition once.
  std::vector<std::size_t> block(n, 0);
  double best_value = kInf;
  std::vector<std::size_t> best_block;
  while (true) {
    const std::size_t parts = *std::max_element(block.begin(), block.end()) + 1;
    if (parts <= k) {
      double value = 0.0;
      for (std::size_t b = 0; b < parts; ++b) {
        unsigned mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (block[i] == b) mask |= 1U << i;
        }
        value += solve(mask).cost;
      }
      if (value < best_value) {
        best_value = value;
        best_block = block;
      }
    }
    std::size_t i = n;
    bool advanced = false;
    while (i-- > 1) {
      const std::size_t prefix_max = *std::max_element(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(i));
      if (block[i] <= prefix_max && block[i] + 1 < k) {
        ++block[i];
        std::fill(block.begin() + static_cast<std::ptrdiff_t>(i) + 1, block.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  OracleClustering result;
  result.assignment = best_block;
  const std::size_t parts = *std::max_element(best_block.begin(), best_block.end()) + 1;
  for (std::size_t b = 0; b < parts; ++b) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (best_block[i] == b) mask |= 1U << i;
    }
    result.centers.push_back(solve(mask).mean);
  }
  const OracleResult& any = solved.begin()->second;
  result.cost = clustering_cost(data, result.centers, any.p, any.q);
  return result;
}

}  // namespace dtwmean

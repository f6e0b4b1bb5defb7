#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "dtwmean/cost.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// Seeded generator used by every randomized routine.
using Rng = std::mt19937_64;

enum class Provenance { Sampled, Net, Grid, Simplified };

std::string_view to_string(Provenance p);

struct CandidateSet {
  std::vector<PointSequence> candidates;
  Provenance provenance = Provenance::Sampled;

  std::size_t size() const { return candidates.size(); }
};

/// Number of sequences of length 1..ell over an alphabet of `alphabet` points,
/// saturating at the maximum size_t.
std::size_t sequences_up_to(std::size_t alphabet, std::size_t ell);

/// Decodes candidate `index` of alphabet^{<=ell}: lengths 1..ell in turn, each
/// block in lexicographic order of alphabet indices.
void decode_candidate(std::size_t index, std::size_t alphabet, std::size_t ell,
                      std::vector<std::size_t>& digits);

/// Materializes alphabet^{<=ell} in decode_candidate order.
std::vector<PointSequence> all_sequences_up_to(const std::vector<Point>& alphabet, std::size_t ell);

/// Lazily indexed alphabet^{<=ell}.
class SequenceSpace {
 public:
  SequenceSpace(std::vector<Point> alphabet, std::size_t ell);

  std::size_t size() const { return count_; }
  const std::vector<Point>& alphabet() const { return alphabet_; }
  void build(std::size_t index, PointSequence& out, std::vector<std::size_t>& scratch) const;
  PointSequence at(std::size_t index) const;

 private:
  std::vector<Point> alphabet_;
  std::size_t ell_;
  std::size_t count_;
};

/// Worker threads for candidate scoring: DTWMEAN_THREADS when set to a positive
/// integer, otherwise the hardware concurrency.
unsigned worker_threads();

struct ArgminResult {
  std::size_t index = std::numeric_limits<std::size_t>::max();
  double cost = std::numeric_limits<double>::infinity();
  bool found() const { return index != std::numeric_limits<std::size_t>::max(); }
};

/// Writes candidate `index` into `out`; `scratch` is per-thread workspace.
using CandidateBuilder =
    std::function<void(std::size_t index, PointSequence& out, std::vector<std::size_t>& scratch)>;

/// First minimizer of cost_p^q(T, .) over candidates [0, count). Scoring is
/// split across worker threads; the reduction orders by (cost, index), so the
/// result does not depend on the thread count. Only candidates strictly below
/// `cutoff` are reported; none found leaves the result empty.
ArgminResult argmin_cost(const Dataset& data, std::size_t count, const CandidateBuilder& build,
                         double p, double q,
                         double cutoff = std::numeric_limits<double>::infinity());

ArgminResult argmin_cost(const Dataset& data, const std::vector<PointSequence>& candidates,
                         double p, double q);

/// Uniform sample of `count` indices from [0, population) with replacement.
std::vector<std::size_t> sample_with_replacement(std::size_t population, std::size_t count,
                                                 Rng& rng);

/// ceil(x), ignoring relative excess below 1e-12 from rounding in x.
std::size_t ceil_count(double x);

}  // namespace dtwmean

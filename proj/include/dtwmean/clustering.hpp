#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dtwmean/candidates.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

struct ClusteringParams {
  std::size_t k = 2;
  /// Subset-fraction parameter; must exceed 2k.
  double beta = 8.0;
  double delta = 0.1;
  double p = 1.0;
  double q = 1.0;
  std::size_t ell = 2;
  /// Quality slack of cand1.
  double eps = 1.0;

  void validate() const;
};

struct CenterSet {
  std::vector<PointSequence> centers;
  /// clustering_cost(T, centers, p, q).
  double cost = 0.0;
  std::size_t nodes = 0;
  std::size_t generator_calls = 0;
  std::size_t candidates_generated = 0;
};

/// sum_i min_{c in centers} dtw_p(c, tau_i)^q.
double clustering_cost(const Dataset& data, const std::vector<PointSequence>& centers, double p,
                       double q);

/// ceil((2^p / eps + 1) beta m ln(ell / delta)).
std::size_t cand1_sample_size(double p, double eps, double beta, std::size_t m, std::size_t ell,
                              double delta);

/// ceil(2 beta log2(2 / delta)).
std::size_t cand2_sample_size(double beta, double delta);

inline constexpr std::size_t kMaxClusterCandidates = 100'000;

/// Sampled vertices S (uniform with replacement from the vertex pool) and all
/// of S^{<=ell}, identical points merged.
CandidateSet cand1(const Dataset& data, double beta, double delta, double eps, double p,
                   std::size_t ell, std::uint64_t seed);
CandidateSet cand1(const Dataset& data, double beta, double delta, double eps, double p,
                   std::size_t ell, Rng& rng);

/// (2,ell)-simplifications of sequences sampled uniformly with replacement.
CandidateSet cand2(const Dataset& data, double beta, double p, double delta, std::size_t ell,
                   std::uint64_t seed);
CandidateSet cand2(const Dataset& data, double beta, double p, double delta, std::size_t ell,
                   Rng& rng);

enum class Generator { Cand1, Cand2 };

std::string_view to_string(Generator g);
/// Accepts "cand1" and "cand2".
Generator parse_generator(std::string_view name);

inline constexpr std::size_t kMaxClusteringNodes = 1'000'000;

/// Branch-and-prune search for k centers. Each node either adds a generated
/// candidate as the next center or drops the ceil(|active| (1 - 2k/beta))
/// active sequences closest to the current centers. Every generator call gets
/// delta / (k + 1).
CenterSet k_clustering(const Dataset& data, const ClusteringParams& params, Generator generator,
                       std::uint64_t seed);

}  // namespace dtwmean

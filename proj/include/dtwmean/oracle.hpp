#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dtwmean/dtw.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// Which section minimizer the oracle uses.
///  - Euclidean22: p = q = 2, any d; coordinate-wise mean (exact).
///  - Line11: p = q = 1, d = 1; lower median (exact).
///  - Discrete: any p, q; best vertex of the input pool (exact among
///    vertex-restricted means only).
enum class OracleMode { Euclidean22, Line11, Discrete };

std::string_view to_string(OracleMode mode);
/// Accepts "euclidean-2-2", "line-1-1", "discrete".
OracleMode parse_oracle_mode(std::string_view name);

struct OracleResult {
  PointSequence mean;
  /// cost_p^q(T, mean) recomputed from the returned mean.
  double cost = 0.0;
  /// Warpings (one per input sequence) under which the optimum was found.
  std::vector<Warping> warpings;
  double p = 1.0;
  double q = 1.0;
};

inline constexpr std::size_t kMaxOracleTuples = 1'000'000;

/// Optimal restricted (p,q)-mean of complexity <= ell by exhaustive search
/// over warping tuples. p and q are read only in Discrete mode; the other
/// modes fix them.
OracleResult exact_mean(const Dataset& data, std::size_t ell, OracleMode mode, double p = 1.0,
                        double q = 1.0);

struct OracleClustering {
  std::vector<PointSequence> centers;
  double cost = 0.0;
  /// Block index of every input sequence in the optimal partition.
  std::vector<std::size_t> assignment;
};

inline constexpr std::size_t kMaxOracleClusteringSequences = 8;
inline constexpr std::size_t kMaxOracleClusters = 3;

/// Optimal (k,ell,p,q)-clustering over all partitions into at most k parts.
OracleClustering exact_clustering(const Dataset& data, std::size_t k, std::size_t ell,
                                  OracleMode mode, double p = 1.0, double q = 1.0);

}  // namespace dtwmean

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtwmean/oracle.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// One algorithm invocation.
struct RunConfig {
  /// dtw | simplify | mean | cluster | oracle
  std::string command = "mean";
  /// mean: mean_c (alias sample) | mean_c_d (alias net) | refine (alias med_appr) | dba; cluster: cand1 | cand2;
  /// oracle: euclidean-2-2 | line-1-1 | discrete | auto.
  std::string algo;
  ProblemParams params;
  std::size_t k = 2;
  /// Defaults to 4k when unset.
  std::optional<double> beta;
  std::uint64_t seed = 0;
  std::string input;
  std::string format;
  std::size_t max_iters = 100;
  /// Optional dataset whose first sequence seeds DBA.
  std::string init;
};

nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// Exact oracle mode matching an objective: line-1-1 for (1,1) in one
/// dimension, euclidean-2-2 for (2,2), discrete otherwise.
OracleMode oracle_mode_for(double p, double q, std::size_t d);

/// Runs `cfg` on `data` and returns the report object: config, result
/// (sequence or centers, cost), counts, flags and runtime_ms.
nlohmann::json execute(const RunConfig& cfg, const Dataset& data);

/// Loads the input and runs. Errors propagate.
nlohmann::json execute(const RunConfig& cfg);

/// Runs every config, never aborting on a failed entry. Mean and cluster rows
/// get oracle_cost and ratio when the oracle is feasible; otherwise ratio is
/// null and the oracle_infeasible flag is set.
nlohmann::json bench(const std::vector<RunConfig>& configs, bool parallel = false);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitIo = 4;

/// Command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dtwmean

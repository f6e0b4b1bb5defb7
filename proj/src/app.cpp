#include "dtwmean/app.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dtwmean/clustering.hpp"
#include "dtwmean/cost.hpp"
#include "dtwmean/dba.hpp"
#include "dtwmean/dtw.hpp"
#include "dtwmean/io.hpp"
#include "dtwmean/mean_approx.hpp"
#include "dtwmean/refine.hpp"
#include "dtwmean/simplify.hpp"
#include "dtwmean/synthetic.hpp"

namespace dtwmean {

using nlohmann::json;

namespace {

json to_json(const PointSequence& s) {
  json pts = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) pts.push_back(Point(s[i].begin(), s[i].end()));
  return pts;
}

json to_json(const Warping& w) {
  json out = json::array();
  for (const auto& [i, j] : w) out.push_back({i, j});
  return out;
}

json objective(double p, double q) { return {{"p", p}, {"q", q}}; }

double effective_beta(const RunConfig& cfg) {
  return cfg.beta.value_or(4.0 * static_cast<double>(cfg.k));
}

ClusteringParams clustering_params(const RunConfig& cfg) {
  ClusteringParams cp;
  cp.k = cfg.k;
  cp.beta = effective_beta(cfg);
  cp.delta = cfg.params.delta;
  cp.p = cfg.params.p;
  cp.q = cfg.params.q;
  cp.ell = cfg.params.ell;
  cp.eps = cfg.params.eps;
  return cp;
}

Dataset load_input(const std::string& path, const std::string& format) {
  if (path.empty()) throw DomainError("an input path is required");
  return load_dataset(path, format.empty() ? format_for_path(path) : parse_format(format));
}

json run_mean(const RunConfig& cfg, const Dataset& data, json& counts, json& flags) {
  const ProblemParams& pp = cfg.params;
  pp.validate();
  json result;
  if (cfg.algo == "mean_c" || cfg.algo == "sample") {
    const MeanResult r = mean_c(data, pp, cfg.seed);
    result = {{"sequence", to_json(r.sequence)}, {"cost", r.cost}, {"objective", objective(pp.p, pp.p)}};
    counts = {{"candidates", r.candidates.size()}, {"samples", r.pool_size}};
  } else if (cfg.algo == "mean_c_d" || cfg.algo == "net") {
    const MeanResult r = mean_c_d(data, pp);
    result = {{"sequence", to_json(r.sequence)}, {"cost", r.cost}, {"objective", objective(pp.p, pp.p)}};
    counts = {{"candidates", r.candidates.size()}, {"net_size", r.pool_size}};
  } else if (cfg.algo == "refine" || cfg.algo == "med_appr") {
    const RefineResult r = med_appr(data, pp, cfg.seed);
    result = {{"sequence", to_json(r.sequence)},
              {"cost", r.cost},
              {"objective", objective(pp.p, 1.0)},
              {"rough_estimate", r.rough_estimate}};
    counts = {{"candidates", r.candidates_scored},
              {"covers_accepted", r.covers_accepted},
              {"covers_rejected", r.covers_rejected},
              {"samples", r.sampled.size()}};
    if (r.fallback) flags.push_back("fallback");
  } else if (cfg.algo == "dba") {
    const PointSequence init = cfg.init.empty() ? dba_default_init(data, pp.ell, pp.p)
                                                : load_input(cfg.init, "")[0];
    const DbaResult r = dba(data, init, pp.p, cfg.max_iters);
    result = {{"sequence", to_json(r.sequence)},
              {"cost", r.cost},
              {"objective", objective(pp.p, pp.p)},
              {"trace", r.trace}};
    counts = {{"iterations", r.iterations}};
    if (r.reverted) flags.push_back("reverted");
  } else {
    throw DomainError("unknown mean algorithm '" + cfg.algo +
                      "' (expected mean_c, mean_c_d, refine or dba)");
  }
  return result;
}

}  // namespace

OracleMode oracle_mode_for(double p, double q, std::size_t d) {
  if (p == 1.0 && q == 1.0 && d == 1) return OracleMode::Line11;
  if (p == 2.0 && q == 2.0) return OracleMode::Euclidean22;
  return OracleMode::Discrete;
}

json config_to_json(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"algo", cfg.algo},
          {"p", cfg.params.p},
          {"q", cfg.params.q},
          {"ell", cfg.params.ell},
          {"eps", cfg.params.eps},
          {"delta", cfg.params.delta},
          {"k", cfg.k},
          {"beta", effective_beta(cfg)},
          {"seed", cfg.seed},
          {"input", cfg.input},
          {"format", cfg.format},
          {"max_iters", cfg.max_iters},
          {"init", cfg.init}};
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("run config must be a JSON object");
  RunConfig cfg;
  cfg.command = j.value("command", cfg.command);
  cfg.algo = j.value("algo", cfg.algo);
  cfg.params.p = j.value("p", cfg.params.p);
  cfg.params.q = j.value("q", cfg.params.q);
  cfg.params.ell = j.value("ell", cfg.params.ell);
  cfg.params.eps = j.value("eps", cfg.params.eps);
  cfg.params.delta = j.value("delta", cfg.params.delta);
  cfg.k = j.value("k", cfg.k);
  if (j.contains("beta") && !j["beta"].is_null()) cfg.beta = j["beta"].get<double>();
  cfg.seed = j.value("seed", cfg.seed);
  cfg.input = j.value("input", cfg.input);
  cfg.format = j.value("format", cfg.format);
  cfg.max_iters = j.value("max_iters", cfg.max_iters);
  cfg.init = j.value("init", cfg.init);
  return cfg;
}

json execute(const RunConfig& cfg, const Dataset& data) {
  const auto start = std::chrono::steady_clock::now();
  json result;
  json counts = json::object();
  json flags = json::array();
  const ProblemParams& pp = cfg.params;

  if (cfg.command == "dtw") {
    require_exponent(pp.p, "p");
    json matrix = json::array();
    for (const PointSequence& a : data) {
      json row = json::array();
      for (const PointSequence& b : data) row.push_back(dtw(a, b, pp.p).distance);
      matrix.push_back(std::move(row));
    }
    result = {{"distances", std::move(matrix)}};
    if (data.size() == 2) result["warping"] = to_json(dtw(data[0], data[1], pp.p).warping);
  } else if (cfg.command == "simplify") {
    require_exponent(pp.p, "p");
    json seqs = json::array();
    json costs = json::array();
    for (const PointSequence& tau : data) {
      const SimplificationResult r = simplify(tau, pp.ell, pp.p);
      seqs.push_back(to_json(r.sequence));
      costs.push_back(r.discrete_cost);
    }
    result = {{"sequences", std::move(seqs)}, {"costs", std::move(costs)}};
  } else if (cfg.command == "mean") {
    result = run_mean(cfg, data, counts, flags);
  } else if (cfg.command == "cluster") {
    const CenterSet r = k_clustering(data, clustering_params(cfg), parse_generator(cfg.algo), cfg.seed);
    json centers = json::array();
    for (const PointSequence& c : r.centers) centers.push_back(to_json(c));
    result = {{"centers", std::move(centers)}, {"cost", r.cost}, {"objective", objective(pp.p, pp.q)}};
    counts = {{"nodes", r.nodes},
              {"generator_calls", r.generator_calls},
              {"candidates", r.candidates_generated}};
  } else if (cfg.command == "oracle") {
    const OracleMode mode = cfg.algo.empty() || cfg.algo == "auto"
                                ? oracle_mode_for(pp.p, pp.q, data.dimension())
                                : parse_oracle_mode(cfg.algo);
    const OracleResult r = exact_mean(data, pp.ell, mode, pp.p, pp.q);
    json warpings = json::array();
    for (const Warping& w : r.warpings) warpings.push_back(to_json(w));
    result = {{"sequence", to_json(r.mean)},
              {"cost", r.cost},
              {"objective", objective(r.p, r.q)},
              {"mode", to_string(mode)},
              {"warpings", std::move(warpings)}};
  } else {
    throw DomainError("unknown command '" + cfg.command + "'");
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {{"config", config_to_json(cfg)},
          {"result", std::move(result)},
          {"counts", std::move(counts)},
          {"flags", std::move(flags)},
          {"runtime_ms", ms}};
}

json execute(const RunConfig& cfg) { return execute(cfg, load_input(cfg.input, cfg.format)); }

namespace {

std::string error_kind(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const DomainError&) {
    return "validation";
  } catch (const CapacityError&) {
    return "capacity";
  } catch (const IoError&) {
    return "io";
  } catch (...) {
    return "internal";
  }
}

std::string error_message(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception& ex) {
    return ex.what();
  } catch (...) {
    return "unknown error";
  }
}

void attach_oracle(const RunConfig& cfg, const Dataset& data, json& row) {
  json& flags = row["flags"];
  const double p = row["result"]["objective"]["p"].get<double>();
  const double q = row["result"]["objective"]["q"].get<double>();
  const double cost = row["result"]["cost"].get<double>();
  const OracleMode mode = oracle_mode_for(p, q, data.dimension());
  row["oracle_mode"] = to_string(mode);
  if (mode == OracleMode::Discrete) flags.push_back("oracle_discrete_reference");
  double reference = 0.0;
  try {
    reference = cfg.command == "cluster"
                    ? exact_clustering(data, cfg.k, cfg.params.ell, mode, p, q).cost
                    : exact_mean(data, cfg.params.ell, mode, p, q).cost;
  } catch (const CapacityError&) {
    row["oracle_cost"] = nullptr;
    row["ratio"] = nullptr;
    flags.push_back("oracle_infeasible");
    return;
  }
  row["oracle_cost"] = reference;
  if (reference > 0.0) {
    row["ratio"] = cost / reference;
  } else if (cost == 0.0) {
    row["ratio"] = 1.0;
  } else {
    row["ratio"] = nullptr;
    flags.push_back("oracle_zero_cost");
  }
}

json bench_row(const RunConfig& cfg) {
  try {
    const Dataset data = load_input(cfg.input, cfg.format);
    json row = execute(cfg, data);
    if (cfg.command == "mean" || cfg.command == "cluster" || cfg.command == "oracle") {
      attach_oracle(cfg, data, row);
    }
    return row;
  } catch (...) {
    const std::exception_ptr e = std::current_exception();
    return {{"config", config_to_json(cfg)},
            {"error", {{"kind", error_kind(e)}, {"message", error_message(e)}}}};
  }
}

}  // namespace

json bench(const std::vector<RunConfig>& configs, bool parallel) {
  std::vector<json> rows(configs.size());
  if (parallel) {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      pool.emplace_back([&, i] { rows[i] = bench_row(configs[i]); });
    }
  } else {
    for (std::size_t i = 0; i < configs.size(); ++i) rows[i] = bench_row(configs[i]);
  }
  json runs = json::array();
  for (json& r : rows) runs.push_back(std::move(r));
  return {{"runs", std::move(runs)}};
}

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& output) {
  cmd->add_option("--input", cfg.input, "Dataset path (json or csv)")->required();
  cmd->add_option("--output", output, "Report path; stdout when omitted");
  cmd->add_option("--format", cfg.format, "Input format: json or csv (default from extension)");
  cmd->add_option("--p", cfg.params.p, "DTW exponent p >= 1");
  cmd->add_option("--q", cfg.params.q, "Cost exponent q >= 1");
  cmd->add_option("--ell", cfg.params.ell, "Maximum center complexity");
  cmd->add_option("--eps", cfg.params.eps, "Approximation slack");
  cmd->add_option("--delta", cfg.params.delta, "Failure probability");
  cmd->add_option("--seed", cfg.seed, "Random seed");
}

void emit(const std::string& output, const std::string& text, std::ostream& out) {
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
}

PointSequence parse_base(const std::string& text) {
  PointSequence base;
  std::stringstream points(text);
  std::string chunk;
  while (std::getline(points, chunk, ';')) {
    Point pt;
    std::stringstream coords(chunk);
    std::string c;
    while (std::getline(coords, c, ',')) {
      try {
        std::size_t used = 0;
        pt.push_back(std::stod(c, &used));
        if (c.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(c);
      } catch (const std::logic_error&) {
        throw DomainError("bad coordinate '" + c + "' in --base");
      }
    }
    base.push_back(pt);
  }
  if (base.empty()) throw DomainError("--base must list at least one point");
  return base;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate restricted means and clusterings of point sequences under DTW",
               "dtwmean"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output;
  bool parallel = false;
  std::string base_text;
  std::size_t gen_n = 6;
  double noise = 0.0;
  std::size_t min_len = 0;
  std::size_t max_len = 0;

  CLI::App* dtw_cmd = app.add_subcommand("dtw", "Pairwise DTW distances");
  add_common(dtw_cmd, cfg, output);
  CLI::App* simplify_cmd = app.add_subcommand("simplify", "Vertex-restricted simplification of each sequence");
  add_common(simplify_cmd, cfg, output);
  CLI::App* mean_cmd = app.add_subcommand("mean", "Restricted mean");
  add_common(mean_cmd, cfg, output);
  mean_cmd->add_option("--algo", cfg.algo, "mean_c | mean_c_d | refine | dba")->required();
  mean_cmd->add_option("--max-iters", cfg.max_iters, "DBA iteration cap");
  mean_cmd->add_option("--init", cfg.init, "DBA: dataset whose first sequence is the start");
  CLI::App* cluster_cmd = app.add_subcommand("cluster", "(k,ell,p,q)-clustering");
  add_common(cluster_cmd, cfg, output);
  cluster_cmd->add_option("--algo", cfg.algo, "cand1 | cand2")->required();
  cluster_cmd->add_option("--k", cfg.k, "Number of centers");
  cluster_cmd->add_option("--beta", cfg.beta, "Subset fraction parameter (> 2k, default 4k)");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exact restricted mean on tiny inputs");
  add_common(oracle_cmd, cfg, output);
  oracle_cmd->add_option("--algo,--mode", cfg.algo, "euclidean-2-2 | line-1-1 | discrete | auto");
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a batch of configs and compare to the oracle");
  std::string batch;
  bench_cmd->add_option("--input", batch, "Batch file: JSON array of run configs")->required();
  bench_cmd->add_option("--output", output, "Report path; stdout when omitted");
  bench_cmd->add_flag("--parallel", parallel, "Run batch entries concurrently");
  CLI::App* gen_cmd = app.add_subcommand("gen", "Synthetic dataset from a base sequence");
  gen_cmd->add_option("--base", base_text, "Base points 'x1,..,xd;x1,..,xd;...'");
  gen_cmd->add_option("--input", cfg.input, "Dataset whose first sequence is the base");
  gen_cmd->add_option("--n", gen_n, "Number of sequences");
  gen_cmd->add_option("--noise", noise, "Uniform noise half-width");
  gen_cmd->add_option("--min-len", min_len, "Minimum length (default |base|)");
  gen_cmd->add_option("--max-len", max_len, "Maximum length (default min-len)");
  gen_cmd->add_option("--seed", cfg.seed, "Random seed");
  gen_cmd->add_option("--output", output, "Dataset path; stdout when omitted");
  gen_cmd->add_option("--format", cfg.format, "Output format: json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (bench_cmd->parsed()) {
      const json doc = json::parse(read_file(batch));
      const json& list = doc.is_object() && doc.contains("runs") ? doc["runs"] : doc;
      if (!list.is_array()) throw DomainError("batch file must hold an array of run configs");
      std::vector<RunConfig> configs;
      for (const json& j : list) configs.push_back(config_from_json(j));
      emit(output, bench(configs, parallel).dump(2) + "\n", out);
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      if (base_text.empty() == cfg.input.empty()) {
        throw DomainError("gen needs exactly one of --base or --input");
      }
      const PointSequence base = base_text.empty() ? load_input(cfg.input, "")[0] : parse_base(base_text);
      if (min_len == 0) min_len = base.size();
      if (max_len == 0) max_len = min_len;
      const Dataset data = generate_synthetic(base, gen_n, noise, min_len, max_len, cfg.seed);
      const DataFormat fmt = !cfg.format.empty() ? parse_format(cfg.format)
                             : output.empty()     ? DataFormat::Json
                                                  : format_for_path(output);
      emit(output, fmt == DataFormat::Csv ? dataset_to_csv(data) : dataset_to_json(data), out);
      return kExitOk;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    emit(output, execute(cfg).dump(2) + "\n", out);
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const IoError& e) {
    err << "io: " << e.what() << "\n";
    return kExitIo;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace dtwmean

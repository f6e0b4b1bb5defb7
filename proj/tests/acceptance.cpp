// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "dtwmean/app.hpp"
#include "dtwmean/clustering.hpp"
#include "dtwmean/cost.hpp"
#include "dtwmean/dba.hpp"
#include "dtwmean/dtw.hpp"
#include "dtwmean/io.hpp"
#include "dtwmean/mean_approx.hpp"
#include "dtwmean/oracle.hpp"
#include "dtwmean/refine.hpp"
#include "dtwmean/simplify.hpp"
#include "dtwmean/synthetic.hpp"
#include "support.hpp"

using namespace dtwmean;
using testing::line;
using testing::uniform;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Dataset family_instance(std::mt19937_64& rng) {
  return testing::random_dataset(rng, uniform(rng, 2, 6), 4, 1);
}

Outcome dtw_exactness() {
  std::mt19937_64 rng(101);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = uniform(rng, 1, 2);
    const double p = uniform(rng, 1, 2);
    const PointSequence a = testing::random_sequence(rng, uniform(rng, 1, 6), d);
    const PointSequence b = testing::random_sequence(rng, uniform(rng, 1, 6), d);
    double best = std::numeric_limits<double>::infinity();
    for (const Warping& w : enumerate_warpings(a.size(), b.size())) {
      double s = 0.0;
      for (const auto& [i, j] : w) {
        double sq = 0.0;
        for (std::size_t c = 0; c < d; ++c) sq += (a[i][c] - b[j][c]) * (a[i][c] - b[j][c]);
        s += p == 2.0 ? sq : std::sqrt(sq);
      }
      best = std::min(best, s);
    }
    const DtwResult r = dtw(a, b, p);
    if (r.power_cost != best || r.distance != root_p(best, p)) ++mismatches;
  }
  return {mismatches == 0, fmt("%.0f/200 mismatches", mismatches)};
}

Outcome simplification_optimality() {
  std::mt19937_64 rng(102);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double p = uniform(rng, 1, 2);
    const std::size_t ell = uniform(rng, 1, 3);
    const PointSequence pi = testing::random_sequence(rng, uniform(rng, 1, 7), 1);
    double best = std::numeric_limits<double>::infinity();
    testing::for_each_sequence(distinct_points(pi.points()), ell, [&](const PointSequence& c) {
      best = std::min(best, std::pow(testing::brute_cost(Dataset({pi}), c, p, p), 1.0 / p));
    });
    const SimplificationResult s = simplify(pi, ell, p);
    if (!testing::close(s.discrete_cost, best) || s.sequence.size() > ell) ++bad;
  }
  return {bad == 0, fmt("%.0f/100 instances off the brute-force optimum", bad)};
}

Outcome weak_triangle() {
  std::mt19937_64 rng(103);
  int violations = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = uniform(rng, 1, 2);
    const double p = uniform(rng, 1, 2);
    const PointSequence x = testing::random_sequence(rng, uniform(rng, 1, 5), d);
    const PointSequence y = testing::random_sequence(rng, uniform(rng, 1, 5), d);
    const PointSequence z = testing::random_sequence(rng, uniform(rng, 1, 5), d);
    const double factor = std::pow(static_cast<double>(std::max(x.size(), z.size())), 1.0 / p);
    const double lhs = dtw(x, z, p).distance;
    const double rhs = factor * (dtw(x, y, p).distance + dtw(y, z, p).distance);
    worst = std::max(worst, lhs / rhs);
    if (lhs > rhs * (1 + 1e-12)) ++violations;
  }
  return {violations == 0, fmt("%.0f violations, max lhs/rhs %.4f", violations, worst)};
}

Outcome mean_c_d_guarantee() {
  std::mt19937_64 rng(104);
  int bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const Dataset t = family_instance(rng);
    const ProblemParams params{1.0, 1.0, uniform(rng, 1, 2), 1.0, 0.1};
    const MeanResult a = mean_c_d(t, params);
    const MeanResult b = mean_c_d(t, params);
    const double opt = exact_mean(t, params.ell, OracleMode::Line11).cost;
    const double ratio = opt > 0 ? a.cost / opt : (a.cost == 0 ? 1.0 : INFINITY);
    worst = std::max(worst, ratio);
    if (!(a.sequence == b.sequence && a.cost == b.cost) || a.cost > 3.0 * opt * (1 + 1e-12)) ++bad;
  }
  return {bad == 0, fmt("%.0f/25 failures, worst ratio %.4f (bound 3)", bad, worst)};
}

Outcome mean_c_monte_carlo() {
  std::mt19937_64 rng(105);
  int success = 0;
  int trials = 0;
  for (int inst = 0; inst < 25; ++inst) {
    const Dataset t = family_instance(rng);
    const std::size_t ell = uniform(rng, 1, 2);
    const double opt = exact_mean(t, ell, OracleMode::Line11).cost;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const MeanResult r = mean_c(t, {1.0, 1.0, ell, 1.0, 0.1}, 1000 * inst + seed);
      ++trials;
      if (r.cost <= 3.0 * opt * (1 + 1e-12)) ++success;
    }
  }
  const double frac = static_cast<double>(success) / trials;
  return {frac >= 0.85, fmt("success %.3f over %.0f trials (need 0.85)", frac, trials)};
}

Outcome epsilon_nets() {
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> u(-1, 1);
  int misses = 0;
  int ranges = 0;
  for (int set = 0; set < 20; ++set) {
    const std::size_t d = uniform(rng, 1, 2);
    std::vector<Point> pts;
    for (std::size_t i = 0, n = uniform(rng, 1, 25); i < n; ++i) {
      Point x;
      for (std::size_t c = 0; c < d; ++c) x.push_back(u(rng));
      pts.push_back(x);
    }
    const auto family = ball_ranges(pts);
    for (double eps : {0.2, 0.3, 0.5}) {
      const auto net = epsilon_net_indices(pts, eps);
      const std::set<std::size_t> chosen(net.begin(), net.end());
      for (const auto& r : family) {
        if (r.empty() || static_cast<double>(r.size()) < eps * static_cast<double>(pts.size())) continue;
        ++ranges;
        bool hit = false;
        for (std::size_t i : r) hit = hit || chosen.count(i) > 0;
        if (!hit) ++misses;
      }
    }
  }
  return {misses == 0, fmt("%.0f unhit of %.0f heavy ranges", misses, ranges)};
}

Outcome volumetric() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(0, 1);
  int bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = uniform(rng, 1, 2);
    Point x;
    for (std::size_t c = 0; c < d; ++c) x.push_back(100 * (u(rng) - 0.5));
    const double r = 0.01 + 10 * u(rng);
    const double gamma = r * (0.05 + 0.95 * u(rng));
    const double bound = 2 * std::pow(34 * r / (gamma * std::sqrt(static_cast<double>(d))) + 5, d);
    const double size = static_cast<double>(grid_cover(BallUnion({x}, 8 * r), gamma).size());
    worst = std::max(worst, size / bound);
    if (size > bound) ++bad;
  }
  return {bad == 0, fmt("%.0f/50 over the bound, max size/bound %.4f", bad, worst)};
}

Outcome med_appr_monte_carlo() {
  std::string detail;
  bool ok = true;
  for (double p : {1.0, 2.0}) {
    std::mt19937_64 rng(108 + static_cast<int>(p));
    int success = 0;
    int fallbacks = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const Dataset t = family_instance(rng);
      const std::size_t ell = uniform(rng, 1, 2);
      // (2,1) has no continuous oracle; the vertex-restricted optimum bounds OPT from above.
      const double opt = p == 1.0 ? exact_mean(t, ell, OracleMode::Line11).cost
                                  : exact_mean(t, ell, OracleMode::Discrete, 2.0, 1.0).cost;
      const RefineResult r = med_appr(t, {p, 1.0, ell, 0.5, 0.2}, trial);
      if (r.fallback) ++fallbacks;
      if (r.cost <= 1.5 * opt * (1 + 1e-12)) ++success;
    }
    ok = ok && success >= 75;
    detail += fmt("p=%.0f: %.0f/100 within 1.5x", p, success) +
              (p == 2.0 ? " of discrete OPT" : " of OPT") + fmt(" (%.0f fallbacks)", fallbacks) +
              (p == 1.0 ? "; " : "");
  }
  return {ok, detail};
}

Dataset planted(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 3);
  const PointSequence a = line({u(rng), 4 + u(rng), u(rng)});
  const PointSequence b = line({30 + u(rng), 20 + u(rng)});
  const Dataset ga = generate_synthetic(a, 3, 0.5, 1, 4, seed);
  const Dataset gb = generate_synthetic(b, 3, 0.5, 1, 4, seed + 1);
  std::vector<PointSequence> all = ga.sequences();
  all.insert(all.end(), gb.sequences().begin(), gb.sequences().end());
  return Dataset(all);
}

Outcome clustering_monte_carlo() {
  ClusteringParams params;
  params.k = 2;
  params.beta = 8.0;
  params.delta = 0.2;
  params.ell = 2;
  params.eps = 1.0;
  const double factor = (1 + 4.0 * 2 / (8.0 - 4.0)) * 3.0;
  int success = 0;
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const Dataset t = planted(7000 + 2 * trial);
    const double opt = exact_clustering(t, 2, 2, OracleMode::Line11).cost;
    const CenterSet r = k_clustering(t, params, Generator::Cand1, trial);
    worst = std::max(worst, r.cost / opt);
    if (r.cost <= factor * opt * (1 + 1e-12)) ++success;
  }
  return {success >= 75, fmt("%.0f/100 within %.0fx OPT, worst ratio %.4f", success, factor, worst)};
}

Outcome dba_behaviour() {
  std::mt19937_64 rng(110);
  int increases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Dataset t = testing::random_dataset(rng, uniform(rng, 2, 6), 5, uniform(rng, 1, 2));
    const DbaResult r = dba(t, dba_default_init(t, uniform(rng, 1, 3), 2.0), 2.0, 100);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      if (r.trace[i] > r.trace[i - 1]) ++increases;
    }
  }
  const Dataset crafted({line({8, 3}), line({2}), line({2, 5, 0})});
  const DbaResult r = dba(crafted, dba_default_init(crafted, 2, 2.0), 2.0, 100);
  const double opt = exact_mean(crafted, 2, OracleMode::Euclidean22).cost;
  return {increases == 0 && r.cost > opt,
          fmt("%.0f trace increases; crafted instance DBA %.4f vs optimum %.4f", increases, r.cost, opt)};
}

struct CliOutput {
  int code;
  std::string text;
};

CliOutput run(std::vector<std::string> args) {
  args.insert(args.begin(), "dtwmean");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string strip_runtime(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  j.erase("runtime_ms");
  if (j.contains("runs")) {
    for (auto& row : j["runs"]) row.erase("runtime_ms");
  }
  return j.dump();
}

Outcome reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dtwmean_acceptance";
  fs::create_directories(dir);
  const std::string data = (dir / "t.json").string();
  std::mt19937_64 rng(111);
  save_dataset(data, testing::random_dataset(rng, 5, 4, 1), DataFormat::Json);

  const std::vector<std::vector<std::string>> commands{
      {"mean", "--algo", "mean_c", "--seed", "4", "--eps", "1"},
      {"mean", "--algo", "mean_c_d"},
      {"mean", "--algo", "refine", "--seed", "4", "--eps", "0.5", "--delta", "0.2"},
      {"mean", "--algo", "refine", "--seed", "9", "--p", "2", "--eps", "0.5", "--delta", "0.2"},
      {"mean", "--algo", "dba", "--p", "2"},
      {"cluster", "--algo", "cand1", "--seed", "4", "--k", "2"},
      {"cluster", "--algo", "cand2", "--seed", "4", "--k", "2"},
      {"oracle"},
      {"simplify"},
      {"dtw"},
  };
  int differing = 0;
  int failed = 0;
  for (auto args : commands) {
    args.insert(args.begin() + 1, {"--input", data});
    const CliOutput a = run(args);
    const CliOutput b = run(args);
    if (a.code != 0 || b.code != 0) {
      ++failed;
    } else if (strip_runtime(a.text) != strip_runtime(b.text)) {
      ++differing;
    }
  }
  const std::vector<std::string> gen{"gen", "--base", "0,1;3,2;1,1", "--n", "4", "--noise", "0.3", "--seed", "12"};
  if (run(gen).text != run(gen).text) ++differing;

  nlohmann::json batch = nlohmann::json::array();
  for (const char* algo : {"mean_c", "refine"}) {
    batch.push_back({{"command", "mean"}, {"algo", algo}, {"input", data}, {"eps", 0.5}, {"delta", 0.2}, {"seed", 3}});
  }
  write_file((dir / "batch.json").string(), batch.dump());
  const std::vector<std::string> bench_args{"bench", "--input", (dir / "batch.json").string()};
  if (strip_runtime(run(bench_args).text) != strip_runtime(run(bench_args).text)) ++differing;
  fs::remove_all(dir);
  return {differing == 0 && failed == 0,
          fmt("%.0f of 12 commands differ between reruns, %.0f failed", differing, failed)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "DTW exactness", 5, dtw_exactness},
      {2, "simplification optimality", 30, simplification_optimality},
      {3, "weak triangle inequality", 60, weak_triangle},
      {4, "mean_c_d determinism and 3x guarantee", 120, mean_c_d_guarantee},
      {5, "mean_c Monte-Carlo guarantee", 300, mean_c_monte_carlo},
      {6, "epsilon-net property", 60, epsilon_nets},
      {7, "volumetric bound", 60, volumetric},
      {8, "med_appr Monte-Carlo guarantee", 600, med_appr_monte_carlo},
      {9, "k_clustering Monte-Carlo guarantee", 600, clustering_monte_carlo},
      {10, "DBA monotonicity and non-optimality", 60, dba_behaviour},
      {11, "seeded reproducibility", 120, reproducibility},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.limit_s;
    if (!pass) ++failures;
    std::printf("%s A%d %s: %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

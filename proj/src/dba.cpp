#include "dtwmean/dba.hpp"

#include <limits>

#include "dtwmean/cost.hpp"
#include "dtwmean/simplify.hpp"

namespace dtwmean {

DbaResult dba(const Dataset& data, const PointSequence& init, double p, std::size_t max_iters) {
  if (init.empty()) throw DomainError("DBA needs a nonempty initial sequence");
  if (max_iters == 0) throw DomainError("max_iters must be at least 1");
  if (init.dimension() != data.dimension()) throw DomainError("point dimension mismatch");

  DbaResult result;
  result.sequence = init;
  result.cost = cost(data, init, p, p);
  result.trace.push_back(result.cost);

  while (result.iterations < max_iters) {
    const std::vector<Section> secs = optimal_sections(result.sequence, data, p);
    PointSequence next;
    for (const Section& s : secs) {
      Point mean(data.dimension(), 0.0);
      for (const SectionMember& v : s.members) {
        for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += v.point[c];
      }
      for (double& x : mean) x /= static_cast<double>(s.members.size());
      next.push_back(mean);
    }
    const double next_cost = cost(data, next, p, p);
    ++result.iterations;
    if (next_cost > result.cost) {
      result.reverted = true;
      break;
    }
    const double decrease = result.cost - next_cost;
    result.sequence = std::move(next);
    result.cost = next_cost;
    result.trace.push_back(next_cost);
    if (decrease <= 1e-9 * result.trace[result.trace.size() - 2]) break;
  }
  return result;
}

PointSequence dba_default_init(const Dataset& data, std::size_t ell, double p) {
  PointSequence best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const PointSequence& tau : data) {
    PointSequence s = simplify(tau, ell, p).sequence;
    const double c = cost(data, s, p, p);
    if (c < best_cost) {
      best_cost = c;
      best = std::move(s);
    }
  }
  return best;
}

}  // namespace dtwmean

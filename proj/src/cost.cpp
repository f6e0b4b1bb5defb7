#include "dtwmean/cost.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dtwmean {

double cost(const Dataset& data, const PointSequence& center, double p, double q) {
  require_exponent(q, "q");
  double total = 0.0;
  for (const PointSequence& tau : data) total += cost_term(dtw_power_cost(center, tau, p), p, q);
  return total;
}

double cost_below(const Dataset& data, const PointSequence& center, double p, double q,
                  double cutoff) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const PointSequence& tau : data) {
    double limit = kInf;
    if (cutoff < kInf) {
      // Slack keeps rounding in the conversion from abandoning a candidate
      // that would still beat the cutoff.
      limit = power_limit_for(cutoff - total, p, q) * (1.0 + 1e-9) + 1e-300;
    }
    const double power = dtw_power_cost(center, tau, p, limit);
    if (power == kInf) return kInf;
    total += cost_term(power, p, q);
    if (total >= cutoff) return kInf;
  }
  return total;
}

std::vector<Section> sections(const PointSequence& center, const Dataset& data,
                              const std::vector<Warping>& warpings) {
  if (warpings.size() != data.size()) {
    throw DomainError("expected one warping per input sequence");
  }
  std::vector<Section> out(center.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j].position = j;
  for (std::size_t i = 0; i < data.size(); ++i) {
    require_same_dimension(center, data[i]);
    if (!is_valid_warping(warpings[i], center.size(), data[i].size())) {
      throw DomainError("warping " + std::to_string(i) + " does not couple the center with sequence " +
                        std::to_string(i));
    }
    for (const auto& [j, k] : warpings[i]) {
      const PointView v = data[i][k];
      out[j].members.push_back({i, k, Point(v.begin(), v.end())});
    }
  }
  return out;
}

std::vector<Section> optimal_sections(const PointSequence& center, const Dataset& data, double p) {
  std::vector<Warping> warpings;
  warpings.reserve(data.size());
  for (const PointSequence& tau : data) warpings.push_back(dtw(center, tau, p).warping);
  return sections(center, data, warpings);
}

double section_cost(const PointSequence& center, const std::vector<Section>& secs, double p) {
  double total = 0.0;
  for (const Section& s : secs) {
    for (const SectionMember& v : s.members) total += point_cost(center[s.position], v.point, p);
  }
  return total;
}

bool weak_triangle_check(const PointSequence& x, const PointSequence& y, const PointSequence& z,
                         double p) {
  const double m1 = static_cast<double>(std::max(x.size(), z.size()));
  const double lhs = dtw(x, z, p).distance;
  const double rhs = std::pow(m1, 1.0 / p) * (dtw(x, y, p).distance + dtw(y, z, p).distance);
  return lhs <= rhs;
}

}  // namespace dtwmean

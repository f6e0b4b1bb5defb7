#pragma once

#include <cstddef>
#include <vector>

#include "dtwmean/dtw.hpp"
#include "dtwmean/sequence.hpp"

namespace dtwmean {

/// dtw_p^q from an accumulated warping cost sum rho^p. Every cost in the
/// library goes through this function so that argmin comparisons are made on
/// identical values.
inline double cost_term(double power_cost, double p, double q) {
  if (q == p) return power_cost;
  const double dist = root_p(power_cost, p);
  if (q == 1.0) return dist;
  if (q == 2.0) return dist * dist;
  return std::pow(dist, q);
}

/// Largest warping power cost whose cost_term does not exceed `budget`.
inline double power_limit_for(double budget, double p, double q) {
  if (q == p) return budget;
  return std::pow(budget, p / q);
}

/// cost_p^q(T, c) = sum_i dtw_p(c, tau_i)^q.
double cost(const Dataset& data, const PointSequence& center, double p, double q);

/// Same value as cost(), or +infinity as soon as the partial sum reaches `cutoff`.
double cost_below(const Dataset& data, const PointSequence& center, double p, double q,
                  double cutoff);

/// Vertex tau_{seq, index} warped onto one position of a center sequence.
struct SectionMember {
  std::size_t sequence = 0;
  std::size_t index = 0;
  Point point;
};

/// S_j: every input vertex matched to vertex j of the center.
struct Section {
  std::size_t position = 0;
  std::vector<SectionMember> members;
};

/// Sections of `center` with respect to `data` and one warping per input
/// sequence (warpings[i] couples center with data[i]).
std::vector<Section> sections(const PointSequence& center, const Dataset& data,
                              const std::vector<Warping>& warpings);

/// Sections under the optimal p-warpings returned by dtw().
std::vector<Section> optimal_sections(const PointSequence& center, const Dataset& data, double p);

/// sum_j sum_{v in S_j} rho(c_j, v)^p.
double section_cost(const PointSequence& center, const std::vector<Section>& secs, double p);

/// dtw_p(x, z) <= max(|x|,|z|)^{1/p} (dtw_p(x, y) + dtw_p(y, z)).
bool weak_triangle_check(const PointSequence& x, const PointSequence& y, const PointSequence& z,
                         double p);

}  // namespace dtwmean

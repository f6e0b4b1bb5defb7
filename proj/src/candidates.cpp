#include "dtwmean/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace dtwmean {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Sampled: return "sampled";
    case Provenance::Net: return "net";
    case Provenance::Grid: return "grid";
    case Provenance::Simplified: return "simplified";
  }
  return "unknown";
}

std::size_t sequences_up_to(std::size_t alphabet, std::size_t ell) {
  constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t block = 1;
  for (std::size_t len = 1; len <= ell; ++len) {
    if (alphabet != 0 && block > kSat / alphabet) return kSat;
    block *= alphabet;
    if (total > kSat - block) return kSat;
    total += block;
  }
  return total;
}

void decode_candidate(std::size_t index, std::size_t alphabet, std::size_t ell,
                      std::vector<std::size_t>& digits) {
  std::size_t block = 1;
  for (std::size_t len = 1; len <= ell; ++len) {
    block *= alphabet;
    if (index < block) {
      digits.assign(len, 0);
      for (std::size_t pos = len; pos-- > 0;) {
        digits[pos] = index % alphabet;
        index /= alphabet;
      }
      return;
    }
    index -= block;
  }
  throw DomainError("candidate index out of range");
}

std::vector<PointSequence> all_sequences_up_to(const std::vector<Point>& alphabet, std::size_t ell) {
  const SequenceSpace space(alphabet, ell);
  std::vector<PointSequence> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

SequenceSpace::SequenceSpace(std::vector<Point> alphabet, std::size_t ell)
    : alphabet_(std::move(alphabet)), ell_(ell), count_(sequences_up_to(alphabet_.size(), ell)) {}

void SequenceSpace::build(std::size_t index, PointSequence& out,
                          std::vector<std::size_t>& scratch) const {
  decode_candidate(index, alphabet_.size(), ell_, scratch);
  out.clear();
  for (std::size_t d : scratch) out.push_back(alphabet_[d]);
}

PointSequence SequenceSpace::at(std::size_t index) const {
  PointSequence out;
  std::vector<std::size_t> scratch;
  build(index, out, scratch);
  return out;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("DTWMEAN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

ArgminResult scan(const Dataset& data, std::size_t begin, std::size_t end,
                  const CandidateBuilder& build, double p, double q, double cutoff) {
  ArgminResult best;
  best.cost = cutoff;
  PointSequence candidate;
  std::vector<std::size_t> scratch;
  for (std::size_t i = begin; i < end; ++i) {
    build(i, candidate, scratch);
    const double c = cost_below(data, candidate, p, q, best.cost);
    if (c < best.cost) best = {i, c};
  }
  return best;
}

bool better(const ArgminResult& a, const ArgminResult& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.index < b.index;
}

}  // namespace

ArgminResult argmin_cost(const Dataset& data, std::size_t count, const CandidateBuilder& build,
                         double p, double q, double cutoff) {
  require_exponent(p, "p");
  require_exponent(q, "q");
  const std::size_t threads =
      std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, count / 256));
  if (threads <= 1) return scan(data, 0, count, build, p, q, cutoff);

  std::vector<ArgminResult> partial(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(count, t * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back([&, t, begin, end] { partial[t] = scan(data, begin, end, build, p, q, cutoff); });
    }
  }
  ArgminResult best;
  for (const ArgminResult& r : partial) {
    if (r.found() && (!best.found() || better(r, best))) best = r;
  }
  return best;
}

ArgminResult argmin_cost(const Dataset& data, const std::vector<PointSequence>& candidates,
                         double p, double q) {
  return argmin_cost(
      data, candidates.size(),
      [&](std::size_t i, PointSequence& out, std::vector<std::size_t>&) { out = candidates[i]; }, p,
      q);
}

std::vector<std::size_t> sample_with_replacement(std::size_t population, std::size_t count,
                                                 Rng& rng) {
  if (population == 0) throw DomainError("cannot sample from an empty population");
  std::uniform_int_distribution<std::size_t> pick(0, population - 1);
  std::vector<std::size_t> out(count);
  for (std::size_t& v : out) v = pick(rng);
  return out;
}

std::size_t ceil_count(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("sample size is not a finite count");
  return static_cast<std::size_t>(std::ceil(x * (1.0 - 1e-12)));
}

}  // namespace dtwmean

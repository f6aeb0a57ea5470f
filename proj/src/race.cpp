#include "omegamod/race.hpp"

#include "omegamod/error.hpp"

namespace omegamod {

const char* to_string(RaceDirection d) {
  return d == RaceDirection::kPositiveToNegative ? "positive-to-negative"
                                                 : "negative-to-positive";
}

RaceTracker::RaceTracker(unsigned m, unsigned j, unsigned jprime) {
  require(m >= 2, "race: m must be >= 2");
  require(j < m && jprime < m, "race: classes must lie in 0..m-1");
  require(j != jprime, "race: j and jprime must differ");
  summary_.m = m;
  summary_.j = j;
  summary_.jprime = jprime;
}

void RaceTracker::step(std::uint64_t n, unsigned omega) {
  const unsigned r = omega % summary_.m;
  if (r == summary_.j) {
    ++summary_.final_delta;
  } else if (r == summary_.jprime) {
    --summary_.final_delta;
  }
  const std::int64_t d = summary_.final_delta;
  const int sign = (d > 0) - (d < 0);
  if (sign > 0) {
    ++summary_.lead_pos;
  } else if (sign < 0) {
    ++summary_.lead_neg;
  } else {
    ++summary_.lead_tie;
  }
  if (sign != 0) {
    if (last_sign_ != 0 && sign != last_sign_) {
      summary_.events.push_back(
          {n, sign < 0 ? RaceDirection::kPositiveToNegative
                       : RaceDirection::kNegativeToPositive});
    }
    last_sign_ = sign;
  }
  summary_.x_max = n;
}

void RaceTracker::feed(const OmegaSegment& segment) {
  for (std::uint64_t n = segment.lo; n < segment.hi; ++n) {
    step(n, segment.values[n - segment.lo]);
  }
}

RaceSummary race_scan(unsigned m, unsigned j, unsigned jprime,
                      std::uint64_t x_max, const StreamOptions& options) {
  require(x_max >= 1, "race_scan: x_max must be >= 1");
  RaceTracker tracker(m, j, jprime);
  stream_omega(x_max, options,
               [&](const OmegaSegment& seg) { tracker.feed(seg); });
  return tracker.take();
}

std::vector<RaceSummary> all_pairs(unsigned m, std::uint64_t x_max,
                                   const StreamOptions& options) {
  require(m >= 2, "all_pairs: m must be >= 2");
  require(x_max >= 1, "all_pairs: x_max must be >= 1");
  std::vector<RaceTracker> trackers;
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned jp = j + 1; jp < m; ++jp) trackers.emplace_back(m, j, jp);
  }
  stream_omega(x_max, options, [&](const OmegaSegment& seg) {
    for (auto& t : trackers) t.feed(seg);
  });
  std::vector<RaceSummary> out;
  out.reserve(trackers.size());
  for (auto& t : trackers) out.push_back(t.take());
  return out;
}

}  // namespace omegamod

#pragma once

#include <cstdint>
#include <vector>

#include "omegamod/sieve.hpp"

namespace omegamod {

enum class RaceDirection { kPositiveToNegative, kNegativeToPositive };

const char* to_string(RaceDirection d);

struct RaceEvent {
  std::uint64_t x = 0;
  RaceDirection direction = RaceDirection::kPositiveToNegative;
};

/// Race between classes j and jprime:
/// delta(x) = N_{m,j}(x) - N_{m,jprime}(x).
struct RaceSummary {
  unsigned m = 2;
  unsigned j = 0;
  unsigned jprime = 1;
  std::uint64_t x_max = 0;
  std::vector<RaceEvent> events;
  std::uint64_t lead_pos = 0;
  std::uint64_t lead_neg = 0;
  std::uint64_t lead_tie = 0;
  std::int64_t final_delta = 0;
};

/// Incremental race state fed one Omega value at a time. Zeros of delta are
/// transparent: a sign change is only recorded when delta moves from the
/// last nonzero sign to the opposite one.
class RaceTracker {
 public:
  RaceTracker(unsigned m, unsigned j, unsigned jprime);

  void step(std::uint64_t n, unsigned omega);
  void feed(const OmegaSegment& segment);
  const RaceSummary& summary() const { return summary_; }
  RaceSummary take() { return std::move(summary_); }

 private:
  RaceSummary summary_;
  int last_sign_ = 0;
};

RaceSummary race_scan(unsigned m, unsigned j, unsigned jprime,
                      std::uint64_t x_max, const StreamOptions& options = {});

/// All unordered pairs j < jprime, from one pass over Omega.
std::vector<RaceSummary> all_pairs(unsigned m, std::uint64_t x_max,
                                   const StreamOptions& options = {});

}  // namespace omegamod

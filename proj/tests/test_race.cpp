#include "doctest.h"
#include "omegamod/error.hpp"
#include "omegamod/race.hpp"
#include "omegamod/residue.hpp"
#include "oracles.hpp"

using namespace omegamod;

namespace {

// Sign changes of delta: drop zeros, then count neighbours of opposite sign.
std::vector<std::uint64_t> brute_changes(unsigned m, unsigned j, unsigned jp,
                                         std::uint64_t x_max) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> nonzero;
  std::int64_t delta = 0;
  for (std::uint64_t n = 1; n <= x_max; ++n) {
    const unsigned r = oracle::big_omega(n) % m;
    delta += (r == j) - (r == jp);
    if (delta != 0) nonzero.emplace_back(n, delta);
  }
  std::vector<std::uint64_t> at;
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    if ((nonzero[i].second > 0) != (nonzero[i - 1].second > 0)) {
      at.push_back(nonzero[i].first);
    }
  }
  return at;
}

}  // namespace

TEST_CASE("race_scan examples") {
  CHECK(race_scan(2, 0, 1, 10).final_delta == 0);
  CHECK(race_scan(3, 1, 2, 20).final_delta == 3);

  const RaceSummary s = race_scan(3, 1, 0, 3);
  REQUIRE(s.events.size() == 1);
  CHECK(s.events[0].x == 3);
  CHECK(s.events[0].direction == RaceDirection::kNegativeToPositive);
  CHECK(s.lead_neg == 1);
  CHECK(s.lead_tie == 1);
  CHECK(s.lead_pos == 1);
  CHECK(s.final_delta == 1);
  CHECK(s.x_max == 3);
}

TEST_CASE("race_scan matches brute force") {
  for (unsigned m : {2u, 3u, 4u}) {
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned jp = 0; jp < m; ++jp) {
        if (j == jp) continue;
        const RaceSummary s = race_scan(m, j, jp, 3000);
        const auto expect = brute_changes(m, j, jp, 3000);
        REQUIRE(s.events.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
          CHECK(s.events[i].x == expect[i]);
          if (i) CHECK(s.events[i].direction != s.events[i - 1].direction);
        }
        CHECK(s.lead_pos + s.lead_neg + s.lead_tie == 3000);
        const auto counts = oracle::class_counts(m, 3000);
        CHECK(s.final_delta == static_cast<std::int64_t>(counts[j]) -
                                   static_cast<std::int64_t>(counts[jp]));
      }
    }
  }
}

TEST_CASE("zeros are transparent") {
  RaceTracker t(3, 0, 1);
  // delta: +1, 0, +1, 0, -1
  t.step(1, 0);
  t.step(2, 1);
  t.step(3, 0);
  t.step(4, 1);
  t.step(5, 1);
  REQUIRE(t.summary().events.size() == 1);
  CHECK(t.summary().events[0].x == 5);
  CHECK(t.summary().events[0].direction == RaceDirection::kPositiveToNegative);
  CHECK(t.summary().lead_tie == 2);
}

TEST_CASE("all_pairs") {
  CHECK(all_pairs(2, 100).size() == 1);
  const auto four = all_pairs(4, 50000, {1024, 3});
  CHECK(four.size() == 6);
  for (const auto& s : four) {
    const RaceSummary single = race_scan(4, s.j, s.jprime, 50000);
    const RaceSummary reverse = race_scan(4, s.jprime, s.j, 50000);
    CHECK(single.final_delta == s.final_delta);
    CHECK(single.events.size() == s.events.size());
    CHECK(reverse.final_delta == -s.final_delta);
    CHECK(reverse.events.size() == s.events.size());
    CHECK(reverse.lead_pos == s.lead_neg);
  }
  CHECK_THROWS_AS(all_pairs(1, 10), Error);
}

TEST_CASE("race errors") {
  CHECK_THROWS_AS(race_scan(3, 1, 1, 10), Error);
  CHECK_THROWS_AS(race_scan(3, 0, 3, 10), Error);
  CHECK_THROWS_AS(race_scan(3, 0, 1, 0), Error);
}

#include <numeric>

#include "doctest.h"
#include "omegamod/error.hpp"
#include "omegamod/error_terms.hpp"
#include "omegamod/hall.hpp"
#include "oracles.hpp"

using namespace omegamod;

namespace {

ResidueTally tally_of(std::vector<std::uint64_t> counts) {
  ResidueTally t = ResidueTally::empty(static_cast<unsigned>(counts.size()));
  t.x = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  t.counts = std::move(counts);
  return t;
}

// m = 2 series whose class-0 residual is exactly f(x) at x = 10, 100, ...
CheckpointSeries synthetic(std::int64_t (*f)(std::int64_t), int points) {
  CheckpointSeries s{2, {}};
  std::int64_t x = 10;
  for (int i = 0; i < points; ++i, x *= 10) {
    const std::int64_t r = f(x);
    s.checkpoints.push_back({2, static_cast<std::uint64_t>(x), {2 * r, -2 * r}});
  }
  return s;
}

}  // namespace

TEST_CASE("checkpoint") {
  CHECK(checkpoint(tally_of({5, 9, 6})).scaled_residuals ==
        std::vector<std::int64_t>{-5, 7, -2});
  CHECK(checkpoint(tally_of({5, 5})).scaled_residuals ==
        std::vector<std::int64_t>{0, 0});
  CHECK(checkpoint(tally_of({12345})).scaled_residuals ==
        std::vector<std::int64_t>{0});

  ResidueTally huge = tally_of({std::uint64_t{1} << 61, std::uint64_t{1} << 61,
                                std::uint64_t{1} << 61});
  try {
    checkpoint(huge);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kRangeError);
  }
  CHECK_THROWS_AS(checkpoint(ResidueTally::empty(3)), Error);
}

TEST_CASE("checkpoint_schedule") {
  CHECK(checkpoint_schedule(100, 10.0) == std::vector<std::uint64_t>{10, 100});
  CHECK(checkpoint_schedule(150, 10.0) == std::vector<std::uint64_t>{10, 100, 150});
  CHECK(checkpoint_schedule(5, 10.0) == std::vector<std::uint64_t>{5});
  const auto xs = checkpoint_schedule(10000000, kDefaultRatio);
  CHECK(xs.front() == 10);
  CHECK(xs.back() == 10000000);
  CHECK(xs.size() == 25);
  for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
  // Tight ratios produce duplicates after rounding; they are dropped.
  const auto tight = checkpoint_schedule(100, 1.01);
  for (std::size_t i = 1; i < tight.size(); ++i) CHECK(tight[i] > tight[i - 1]);
  CHECK_THROWS_AS(checkpoint_schedule(100, 1.0), Error);
}

TEST_CASE("record_series") {
  const CheckpointSeries s = record_series(3, 100, 10.0);
  REQUIRE(s.checkpoints.size() == 2);
  CHECK(s.checkpoints[0].x == 10);
  CHECK(s.checkpoints[1].x == 100);
  for (const auto& cp : s.checkpoints) {
    CHECK(cp.counts().counts == oracle::class_counts(3, cp.x));
  }

  const CheckpointSeries s2 = record_series(2, 10000);
  CHECK(s2.checkpoints.back().x == 10000);
  CHECK(s2.checkpoints.back().counts().counts == oracle::class_counts(2, 10000));

  CHECK_THROWS_AS(record_series(3, 9), Error);
  CHECK_THROWS_AS(record_series(3, 100, 1.0), Error);
}

TEST_CASE("record_series across moduli, workers and segment sizes") {
  std::vector<unsigned> moduli(12);
  std::iota(moduli.begin(), moduli.end(), 1u);
  const auto ref = record_series(moduli, 100000, kDefaultRatio);
  const auto other = record_series(moduli, 100000, kDefaultRatio, {1024, 5});
  REQUIRE(ref.size() == 12);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    REQUIRE(ref[i].checkpoints.size() == other[i].checkpoints.size());
    for (std::size_t c = 0; c < ref[i].checkpoints.size(); ++c) {
      const ErrorCheckpoint& cp = ref[i].checkpoints[c];
      CHECK(cp.scaled_residuals == other[i].checkpoints[c].scaled_residuals);
      CHECK(std::accumulate(cp.scaled_residuals.begin(), cp.scaled_residuals.end(),
                            std::int64_t{0}) == 0);
      const ResidueTally t = cp.counts();
      CHECK(std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0}) == cp.x);
      for (unsigned j = 0; j < cp.m; ++j) {
        CHECK(std::llabs(cp.scaled_residuals[j]) <=
              static_cast<std::int64_t>((cp.m - 1) * cp.x));
        CHECK((cp.scaled_residuals[j] + static_cast<std::int64_t>(cp.x)) % cp.m == 0);
      }
    }
  }
}

TEST_CASE("growth_exponent on exact power laws") {
  const GrowthFit linear = growth_exponent(synthetic([](std::int64_t x) { return x; }, 6), 0);
  CHECK(linear.alpha_hat == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(linear.points_used == 6);
  CHECK(linear.residual_rms < 1e-12);

  const GrowthFit flat = growth_exponent(synthetic([](std::int64_t) -> std::int64_t { return 7; }, 6), 1);
  CHECK(std::abs(flat.alpha_hat) < 1e-12);

  const GrowthFit half = growth_exponent(
      synthetic([](std::int64_t x) { return -static_cast<std::int64_t>(std::llround(std::sqrt(double(x)) * 1000)); }, 7), 0);
  CHECK(half.alpha_hat == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("growth_exponent skips zeros and rejects sparse series") {
  CheckpointSeries s = synthetic([](std::int64_t x) { return x; }, 7);
  s.checkpoints[2].scaled_residuals = {0, 0};
  s.checkpoints[4].scaled_residuals = {0, 0};
  const GrowthFit fit = growth_exponent(s, 0);
  CHECK(fit.points_used == 5);
  CHECK(fit.alpha_hat == doctest::Approx(1.0));

  s.checkpoints[5].scaled_residuals = {0, 0};
  try {
    growth_exponent(s, 0);
    FAIL("expected insufficient-data");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientData);
  }
  CHECK_THROWS_AS(growth_exponent(s, 2), Error);
}

TEST_CASE("character_growth_exponent") {
  const CheckpointSeries s1 = record_series(1, 1000);
  CHECK_THROWS_AS(character_growth_exponent(s1, 0, RootTable(1)), Error);

  const CheckpointSeries s3 = record_series(3, 1000000);
  const GrowthFit fit = character_growth_exponent(s3, 1, RootTable(3));
  CHECK(fit.points_used >= 5);
  CHECK(std::isfinite(fit.alpha_hat));
  CHECK(fit.alpha_hat < 1.0);
  // Conjugate characters share magnitudes.
  const GrowthFit conj = character_growth_exponent(s3, 2, RootTable(3));
  CHECK(conj.alpha_hat == doctest::Approx(fit.alpha_hat).epsilon(1e-9));
}

TEST_CASE("hall_envelope") {
  const CheckpointSeries s = record_series(3, 100000);
  const PrimeTable table = primes_up_to(100000);
  const EnvelopeFit fit = hall_envelope(s, 1, table, 1000, 100000);
  CHECK(fit.points_used > 0);
  CHECK(std::isfinite(fit.constant));
  CHECK(fit.constant > 0.0);
  const RootTable roots(3);
  for (const auto& cp : s.checkpoints) {
    if (cp.x < 1000) continue;
    const double lhs = std::abs(sums_from_counts(cp.counts(), roots).sums[1]) / cp.x;
    CHECK(lhs <= fit.constant * hall_rhs(3, 1, cp.x, table) * (1 + 1e-12));
  }
}

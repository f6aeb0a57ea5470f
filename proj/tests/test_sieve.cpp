#include <random>

#include "doctest.h"
#include "omegamod/error.hpp"
#include "omegamod/sieve.hpp"
#include "oracles.hpp"

using namespace omegamod;

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2).primes == std::vector<std::uint64_t>{2});

  std::size_t expected = 0;
  for (std::uint64_t n = 2; n <= 100; ++n) expected += oracle::is_prime(n);
  CHECK(expected == 25);
  CHECK(primes_up_to(100).primes.size() == expected);

  const PrimeTable t = primes_up_to(5000);
  CHECK(t.primes.front() == 2);
  for (std::size_t i = 0; i < t.primes.size(); ++i) {
    CHECK(oracle::is_prime(t.primes[i]));
    if (i) CHECK(t.primes[i] > t.primes[i - 1]);
  }

  CHECK_THROWS_AS(primes_up_to(1), Error);
}

TEST_CASE("omega_single") {
  CHECK(omega_single(1) == 0);
  CHECK(omega_single(12) == 3);
  CHECK(omega_single(1024) == 10);
  CHECK(omega_single(999999937) == 1);
  CHECK(omega_single(std::uint64_t{1} << 63) == 63);
  try {
    omega_single(0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("omega_block small cases") {
  const PrimeTable table = primes_up_to(100);
  const OmegaSegment seg = omega_block(1, 11, table);
  CHECK(seg.values ==
        std::vector<std::uint8_t>{0, 1, 1, 2, 1, 2, 1, 3, 2, 2});
  CHECK(omega_block(16, 17, table).values == std::vector<std::uint8_t>{4});

  // Table must reach isqrt(hi - 1).
  CHECK_THROWS_AS(omega_block(1, 200, primes_up_to(10)), Error);
  CHECK_NOTHROW(omega_block(1, 122, primes_up_to(11)));
  CHECK_THROWS_AS(omega_block(5, 5, table), Error);
  CHECK_THROWS_AS(omega_block(0, 5, table), Error);
}

TEST_CASE("omega_block agrees with trial division") {
  const PrimeTable table = primes_up_to(40000);
  const OmegaSegment low = omega_block(1, 20001, table);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(low.at(n) == oracle::big_omega(n));
  }
  const std::uint64_t lo = 1000000000;
  const OmegaSegment far = omega_block(lo, lo + 1000, table);
  for (std::uint64_t n = lo; n < lo + 1000; ++n) {
    REQUIRE(far.at(n) == omega_single(n));
  }
}

TEST_CASE("omega_block invariants") {
  const PrimeTable table = primes_up_to(2000);
  const OmegaSegment seg = omega_block(1, 3000001, table);
  const PrimeTable primes = primes_up_to(3000000);
  std::vector<std::uint8_t> is_prime(3000001, 0);
  for (std::uint64_t p : primes.primes) is_prime[p] = 1;

  for (std::uint64_t n = 2; n <= 3000000; ++n) {
    const unsigned w = seg.at(n);
    REQUIRE(w >= 1);
    REQUIRE((std::uint64_t{1} << w) <= n);
    REQUIRE((w == 1) == (is_prime[n] == 1));
  }

  // Complete additivity on random products inside the range.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = 1 + rng() % 1700;
    const std::uint64_t b = 1 + rng() % 1700;
    REQUIRE(seg.at(a * b) == seg.at(a) + seg.at(b));
  }
}

TEST_CASE("segments concatenate") {
  const PrimeTable table = primes_up_to(1000);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t a = 1 + rng() % 400000;
    const std::uint64_t b = a + 1 + rng() % 3000;
    const std::uint64_t c = b + 1 + rng() % 3000;
    const OmegaSegment left = omega_block(a, b, table);
    const OmegaSegment right = omega_block(b, c, table);
    std::vector<std::uint8_t> joined = left.values;
    joined.insert(joined.end(), right.values.begin(), right.values.end());
    REQUIRE(joined == omega_block(a, c, table).values);
  }
}

TEST_CASE("stream_omega is independent of workers and segment size") {
  const OmegaSegment ref = omega_prefix(200000);
  for (unsigned workers : {1u, 3u, 8u}) {
    for (std::uint64_t seg : {1024ull, 5000ull, 1ull << 20}) {
      std::uint64_t expect_lo = 1;
      std::vector<std::uint8_t> all;
      stream_omega(200000, {seg, workers}, [&](const OmegaSegment& s) {
        REQUIRE(s.lo == expect_lo);
        expect_lo = s.hi;
        all.insert(all.end(), s.values.begin(), s.values.end());
      });
      CHECK(expect_lo == 200001);
      CHECK(all == ref.values);
    }
  }
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(999999999999999999ull) == 999999999ull);
  CHECK(isqrt(18446744073709551615ull) == 4294967295ull);
}

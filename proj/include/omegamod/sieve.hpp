#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace omegamod {

/// Ascending list of every prime <= limit.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

/// Omega(n) for n in [lo, hi). values[i] = Omega(lo + i), with Omega(1) = 0.
struct OmegaSegment {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint8_t> values;

  std::size_t size() const { return values.size(); }
  std::uint8_t at(std::uint64_t n) const { return values[n - lo]; }
};

std::uint64_t isqrt(std::uint64_t n);

PrimeTable primes_up_to(std::uint64_t limit);

/// Trial-division Omega. Slow; used as the oracle for omega_block.
unsigned omega_single(std::uint64_t n);

/// Segmented Omega sieve over [lo, hi). Needs table.limit >= isqrt(hi - 1).
OmegaSegment omega_block(std::uint64_t lo, std::uint64_t hi,
                         const PrimeTable& table);

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

struct StreamOptions {
  std::uint64_t segment_size = kDefaultSegmentSize;
  unsigned workers = 1;
};

/// Sieves 1..x_max in consecutive segments and hands each to `visit` in
/// ascending order. Segments are computed by up to `workers` threads at a
/// time, but visiting is always sequential, so the visitor sees the same
/// sequence for any worker count.
void stream_omega(std::uint64_t x_max, const StreamOptions& options,
                  const std::function<void(const OmegaSegment&)>& visit);

/// Convenience: one segment covering 1..n_max.
OmegaSegment omega_prefix(std::uint64_t n_max,
                          const StreamOptions& options = {});

}  // namespace omegamod

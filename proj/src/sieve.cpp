#include "omegamod/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "omegamod/error.hpp"

namespace omegamod {

std::uint64_t isqrt(std::uint64_t n) {
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFull;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > kMaxRoot) r = kMaxRoot;
  while (r > 0 && r * r > n) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeTable primes_up_to(std::uint64_t limit) {
  require(limit >= 2, "primes_up_to: limit must be >= 2, got " +
                          std::to_string(limit));
  std::vector<std::uint8_t> composite(limit + 1, 0);
  PrimeTable table;
  table.limit = limit;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    table.primes.push_back(i);
    if (i > limit / i) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return table;
}

unsigned omega_single(std::uint64_t n) {
  require(n >= 1, "omega_single: n must be >= 1");
  unsigned count = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++count;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

OmegaSegment omega_block(std::uint64_t lo, std::uint64_t hi,
                         const PrimeTable& table) {
  require(lo >= 1 && lo < hi, "omega_block: need 1 <= lo < hi");
  const std::uint64_t last = hi - 1;
  const std::uint64_t root = isqrt(last);
  require(table.limit >= root,
          "omega_block: prime table limit " + std::to_string(table.limit) +
              " is below isqrt(hi - 1) = " + std::to_string(root));

  const std::size_t len = hi - lo;
  OmegaSegment seg{lo, hi, std::vector<std::uint8_t>(len, 0)};
  // Product of the prime powers found so far for each entry. Whatever is
  // left of n after dividing by it is 1 or a single prime > sqrt(n).
  std::vector<std::uint64_t> found(len, 1);

  for (std::uint64_t p : table.primes) {
    if (p > root) break;
    std::uint64_t pe = p;
    while (true) {
      std::uint64_t first = ((lo + pe - 1) / pe) * pe;
      for (std::uint64_t n = first; n <= last; n += pe) {
        const std::size_t i = n - lo;
        ++seg.values[i];
        found[i] *= p;
      }
      if (pe > last / p) break;
      pe *= p;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (found[i] != lo + i) ++seg.values[i];
  }
  return seg;
}

void stream_omega(std::uint64_t x_max, const StreamOptions& options,
                  const std::function<void(const OmegaSegment&)>& visit) {
  require(options.segment_size >= 1, "stream_omega: empty segment size");
  require(options.workers >= 1, "stream_omega: need at least one worker");
  if (x_max == 0) return;
  const PrimeTable table = primes_up_to(std::max<std::uint64_t>(2, isqrt(x_max)));
  const std::uint64_t end = x_max + 1;
  const std::uint64_t step = options.segment_size;

  std::uint64_t next = 1;
  std::vector<OmegaSegment> batch(options.workers);
  while (next < end) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (unsigned w = 0; w < options.workers && next < end; ++w) {
      const std::uint64_t hi = std::min(end, next + step);
      ranges.emplace_back(next, hi);
      next = hi;
    }
    if (ranges.size() == 1) {
      batch[0] = omega_block(ranges[0].first, ranges[0].second, table);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(ranges.size());
      for (std::size_t w = 0; w < ranges.size(); ++w) {
        threads.emplace_back([&, w] {
          batch[w] = omega_block(ranges[w].first, ranges[w].second, table);
        });
      }
    }
    for (std::size_t w = 0; w < ranges.size(); ++w) visit(batch[w]);
  }
}

OmegaSegment omega_prefix(std::uint64_t n_max, const StreamOptions& options) {
  require(n_max >= 1, "omega_prefix: n_max must be >= 1");
  OmegaSegment out{1, n_max + 1, {}};
  out.values.reserve(n_max);
  stream_omega(n_max, options, [&](const OmegaSegment& seg) {
    out.values.insert(out.values.end(), seg.values.begin(), seg.values.end());
  });
  return out;
}

}  // namespace omegamod

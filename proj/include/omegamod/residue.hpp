#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "omegamod/sieve.hpp"

namespace omegamod {

using Complex = std::complex<double>;

/// powers[r] = exp(2*pi*i*r/m), each entry computed directly from r.
class RootTable {
 public:
  explicit RootTable(unsigned m);

  unsigned modulus() const { return m_; }
  const Complex& operator[](std::uint64_t r) const { return powers_[r % m_]; }
  const std::vector<Complex>& powers() const { return powers_; }

 private:
  unsigned m_;
  std::vector<Complex> powers_;
};

/// Counts N_{m,j} of n in [first, x] with Omega(n) = j (mod m).
///
/// A prefix tally has first == 1. Tallies of later blocks (first > 1) exist
/// so that independently computed pieces can be merged; an empty tally has
/// x == first - 1.
struct ResidueTally {
  unsigned m = 1;
  std::uint64_t first = 1;
  std::uint64_t x = 0;
  std::vector<std::uint64_t> counts;

  static ResidueTally empty(unsigned m, std::uint64_t first = 1);

  std::uint64_t length() const { return x + 1 - first; }
  bool operator==(const ResidueTally&) const = default;
};

/// S_{m,k}(x) for k = 0..m-1.
struct CharacterSumSet {
  unsigned m = 1;
  std::uint64_t x = 0;
  std::vector<Complex> sums;
};

/// Histogram of Omega values over a block of n. Omega(n) < 64 for all
/// 64-bit n, so it folds into a tally for any modulus without touching the
/// segment again.
struct OmegaHistogram {
  std::array<std::uint64_t, 64> bins{};

  void add(const OmegaSegment& segment, std::size_t begin, std::size_t end);
  ResidueTally fold(unsigned m, std::uint64_t first, std::uint64_t x) const;
};

Complex lambda_value(unsigned omega, unsigned m, unsigned k,
                     const RootTable& roots);

/// Extends a tally by a segment that starts at tally.x + 1.
ResidueTally tally_segment(const ResidueTally& tally,
                           const OmegaSegment& segment);

/// Sums two tallies of adjacent, disjoint ranges (in either order).
ResidueTally merge(const ResidueTally& a, const ResidueTally& b);

/// Forward transform, sums[k] = sum_j zeta^{jk} counts[j].
CharacterSumSet sums_from_counts(const ResidueTally& tally,
                                 const RootTable& roots);

struct InverseResult {
  ResidueTally tally;
  double max_residual = 0.0;  // distance of the pre-rounding values from
                              // integers (real part) or from 0 (imag part)
};

inline constexpr double kTransformTolerance = 1e-6;

/// Inverse transform, counts[j] = (1/m) sum_k zeta^{-jk} sums[k], rounded.
/// Throws kInconsistentTransform if any value misses an integer by more
/// than `tolerance`.
InverseResult counts_from_sums_checked(const CharacterSumSet& sums,
                                       const RootTable& roots,
                                       double tolerance = kTransformTolerance);

ResidueTally counts_from_sums(const CharacterSumSet& sums,
                              const RootTable& roots);

}  // namespace omegamod

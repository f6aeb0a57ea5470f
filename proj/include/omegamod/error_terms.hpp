#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "omegamod/residue.hpp"
#include "omegamod/sieve.hpp"

namespace omegamod {

/// scaled_residuals[j] = m * N_{m,j}(x) - x, i.e. m * R_{m,j}(x) kept exact.
struct ErrorCheckpoint {
  unsigned m = 1;
  std::uint64_t x = 0;
  std::vector<std::int64_t> scaled_residuals;

  /// N_{m,j}(x) recovered as (scaled + x) / m.
  ResidueTally counts() const;
  double residual(unsigned j) const {
    return static_cast<double>(scaled_residuals[j]) / m;
  }
};

struct CheckpointSeries {
  unsigned m = 1;
  std::vector<ErrorCheckpoint> checkpoints;
};

/// Least-squares fit of log|y| against log x.
struct GrowthFit {
  unsigned index = 0;  // class j, or character index k
  double alpha_hat = 0.0;
  unsigned points_used = 0;
  double residual_rms = 0.0;
};

inline constexpr unsigned kMinFitPoints = 5;

ErrorCheckpoint checkpoint(const ResidueTally& tally);

/// round(10 * ratio^t) for t = 0, 1, ... while <= x_max, then x_max,
/// deduplicated. For x_max < 10 only x_max itself is scheduled.
std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t x_max,
                                               double ratio);

inline const double kDefaultRatio = 1.7782794100389228;  // 10^(1/4)

/// One streaming pass over 1..schedule.back() emitting a checkpoint for each
/// modulus at every scheduled x (ascending, >= 1).
std::vector<CheckpointSeries> record_checkpoints(
    std::span<const unsigned> moduli, std::span<const std::uint64_t> schedule,
    const StreamOptions& options = {});

/// One streaming pass over 1..x_max recording a checkpoint series for each
/// modulus in `moduli`.
std::vector<CheckpointSeries> record_series(std::span<const unsigned> moduli,
                                            std::uint64_t x_max, double ratio,
                                            const StreamOptions& options = {});

CheckpointSeries record_series(unsigned m, std::uint64_t x_max,
                               double ratio = kDefaultRatio,
                               const StreamOptions& options = {});

/// Fits log|value| vs log x, skipping points where value is zero.
GrowthFit fit_power_law(std::span<const double> xs,
                        std::span<const double> values, unsigned index);

GrowthFit growth_exponent(const CheckpointSeries& series, unsigned j);

GrowthFit character_growth_exponent(const CheckpointSeries& series,
                                    unsigned k, const RootTable& roots);

/// Smallest C with |S_{m,k}(x)|/x <= C * hall_rhs(m,k,x) over the
/// checkpoints in [x_lo, x_hi].
struct EnvelopeFit {
  unsigned m = 2;
  unsigned k = 1;
  double constant = 0.0;
  std::uint64_t argmax_x = 0;
  unsigned points_used = 0;
};

EnvelopeFit hall_envelope(const CheckpointSeries& series, unsigned k,
                          const PrimeTable& table, std::uint64_t x_lo,
                          std::uint64_t x_hi);

}  // namespace omegamod

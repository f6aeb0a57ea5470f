#include "omegamod/error_terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "omegamod/error.hpp"
#include "omegamod/hall.hpp"

namespace omegamod {

ResidueTally ErrorCheckpoint::counts() const {
  ResidueTally t = ResidueTally::empty(m);
  t.x = x;
  for (unsigned j = 0; j < m; ++j) {
    const std::int64_t num = scaled_residuals[j] + static_cast<std::int64_t>(x);
    t.counts[j] = static_cast<std::uint64_t>(num / m);
  }
  return t;
}

ErrorCheckpoint checkpoint(const ResidueTally& tally) {
  require(tally.first == 1, "checkpoint: tally must start at n = 1");
  require(tally.x >= 1, "checkpoint: tally must cover at least n = 1");
  const std::uint64_t limit = (std::uint64_t{1} << 62) / tally.m;
  if (tally.x > limit) {
    fail(ErrorKind::kRangeError, "checkpoint: x = " + std::to_string(tally.x) +
                                     " overflows m * x for m = " +
                                     std::to_string(tally.m));
  }
  ErrorCheckpoint cp{tally.m, tally.x, {}};
  cp.scaled_residuals.reserve(tally.m);
  const auto x = static_cast<std::int64_t>(tally.x);
  for (std::uint64_t c : tally.counts) {
    cp.scaled_residuals.push_back(static_cast<std::int64_t>(tally.m) *
                                      static_cast<std::int64_t>(c) -
                                  x);
  }
  return cp;
}

std::vector<std::uint64_t> checkpoint_schedule(std::uint64_t x_max,
                                               double ratio) {
  require(ratio > 1.0, "checkpoint schedule: ratio must be > 1");
  require(x_max >= 1, "checkpoint schedule: x_max must be >= 1");
  std::vector<std::uint64_t> xs;
  for (int t = 0;; ++t) {
    const double v = std::round(10.0 * std::pow(ratio, t));
    if (v > static_cast<double>(x_max)) break;
    const auto x = static_cast<std::uint64_t>(v);
    if (xs.empty() || xs.back() != x) xs.push_back(x);
  }
  if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
  return xs;
}

std::vector<CheckpointSeries> record_checkpoints(
    std::span<const unsigned> moduli, std::span<const std::uint64_t> schedule,
    const StreamOptions& options) {
  require(!moduli.empty(), "record_checkpoints: no moduli given");
  require(!schedule.empty() && schedule.front() >= 1,
          "record_checkpoints: empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    require(schedule[i] > schedule[i - 1],
            "record_checkpoints: schedule must be strictly increasing");
  }
  for (unsigned m : moduli) require(m >= 1, "record_checkpoints: m must be >= 1");

  std::vector<CheckpointSeries> out;
  for (unsigned m : moduli) out.push_back({m, {}});

  OmegaHistogram hist;
  std::size_t next = 0;
  stream_omega(schedule.back(), options, [&](const OmegaSegment& seg) {
    std::size_t pos = 0;
    while (next < schedule.size() && schedule[next] < seg.hi) {
      const std::size_t upto = schedule[next] - seg.lo + 1;
      hist.add(seg, pos, upto);
      pos = upto;
      for (auto& series : out) {
        series.checkpoints.push_back(
            checkpoint(hist.fold(series.m, 1, schedule[next])));
      }
      ++next;
    }
    hist.add(seg, pos, seg.size());
  });
  return out;
}

std::vector<CheckpointSeries> record_series(std::span<const unsigned> moduli,
                                            std::uint64_t x_max, double ratio,
                                            const StreamOptions& options) {
  require(x_max >= 10, "record_series: x_max must be >= 10");
  require(ratio > 1.0, "record_series: ratio must be > 1");
  const std::vector<std::uint64_t> schedule = checkpoint_schedule(x_max, ratio);
  return record_checkpoints(moduli, schedule, options);
}

CheckpointSeries record_series(unsigned m, std::uint64_t x_max, double ratio,
                               const StreamOptions& options) {
  const unsigned moduli[] = {m};
  return std::move(record_series(moduli, x_max, ratio, options).front());
}

GrowthFit fit_power_law(std::span<const double> xs,
                        std::span<const double> values, unsigned index) {
  require(xs.size() == values.size(), "fit_power_law: length mismatch");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = std::abs(values[i]);
    if (v == 0.0) continue;
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(v));
  }
  if (lx.size() < kMinFitPoints) {
    fail(ErrorKind::kInsufficientData,
         "growth fit for index " + std::to_string(index) + ": only " +
             std::to_string(lx.size()) + " nonzero points (need " +
             std::to_string(kMinFitPoints) + ")");
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) {
    fail(ErrorKind::kInsufficientData,
         "growth fit: all points share one x value");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + slope * lx[i]);
    ss += r * r;
  }
  return GrowthFit{index, slope, static_cast<unsigned>(lx.size()),
                   std::sqrt(ss / n)};
}

GrowthFit growth_exponent(const CheckpointSeries& series, unsigned j) {
  require(j < series.m, "growth_exponent: class index out of range");
  std::vector<double> xs;
  std::vector<double> rs;
  for (const auto& cp : series.checkpoints) {
    xs.push_back(static_cast<double>(cp.x));
    rs.push_back(cp.residual(j));
  }
  return fit_power_law(xs, rs, j);
}

GrowthFit character_growth_exponent(const CheckpointSeries& series,
                                    unsigned k, const RootTable& roots) {
  require(k > 0 && k < series.m,
          "character_growth_exponent: k must satisfy 0 < k < m");
  std::vector<double> xs;
  std::vector<double> mags;
  for (const auto& cp : series.checkpoints) {
    const CharacterSumSet s = sums_from_counts(cp.counts(), roots);
    double mag = std::abs(s.sums[k]);
    // Rounding noise of the O(m^2) transform; anything below it is a zero.
    const double noise = 1e-12 * static_cast<double>(cp.x) * series.m;
    if (mag <= noise) mag = 0.0;
    xs.push_back(static_cast<double>(cp.x));
    mags.push_back(mag);
  }
  return fit_power_law(xs, mags, k);
}

EnvelopeFit hall_envelope(const CheckpointSeries& series, unsigned k,
                          const PrimeTable& table, std::uint64_t x_lo,
                          std::uint64_t x_hi) {
  require(k > 0 && k < series.m, "hall_envelope: k must satisfy 0 < k < m");
  const RootTable roots(series.m);
  EnvelopeFit fit{series.m, k, 0.0, 0, 0};
  for (const auto& cp : series.checkpoints) {
    if (cp.x < x_lo || cp.x > x_hi || cp.x < 2) continue;
    const CharacterSumSet s = sums_from_counts(cp.counts(), roots);
    const double ratio = std::abs(s.sums[k]) / static_cast<double>(cp.x) /
                         hall_rhs(series.m, k, cp.x, table);
    ++fit.points_used;
    if (ratio > fit.constant) {
      fit.constant = ratio;
      fit.argmax_x = cp.x;
    }
  }
  return fit;
}

}  // namespace omegamod

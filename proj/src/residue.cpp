#include "omegamod/residue.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "omegamod/error.hpp"

namespace omegamod {

RootTable::RootTable(unsigned m) : m_(m) {
  require(m >= 1, "RootTable: modulus must be >= 1");
  powers_.assign(m, Complex(1.0, 0.0));
  // Upper half from trig, exact at quarter turns; lower half by conjugation.
  for (unsigned r = 1; 2 * r <= m; ++r) {
    Complex z;
    if (2 * r == m) {
      z = Complex(-1.0, 0.0);
    } else if (4 * r == m) {
      z = Complex(0.0, 1.0);
    } else {
      const double angle = 2.0 * std::numbers::pi * r / m;
      z = Complex(std::cos(angle), std::sin(angle));
    }
    powers_[r] = z;
    powers_[m - r] = std::conj(z);
  }
}

ResidueTally ResidueTally::empty(unsigned m, std::uint64_t first) {
  require(m >= 1, "ResidueTally: modulus must be >= 1");
  require(first >= 1, "ResidueTally: ranges start at n >= 1");
  return ResidueTally{m, first, first - 1, std::vector<std::uint64_t>(m, 0)};
}

void OmegaHistogram::add(const OmegaSegment& segment, std::size_t begin,
                         std::size_t end) {
  const std::uint8_t* v = segment.values.data();
  for (std::size_t i = begin; i < end; ++i) ++bins[v[i] & 63];
}

ResidueTally OmegaHistogram::fold(unsigned m, std::uint64_t first,
                                  std::uint64_t x) const {
  ResidueTally out = ResidueTally::empty(m, first);
  out.x = x;
  for (unsigned w = 0; w < bins.size(); ++w) out.counts[w % m] += bins[w];
  return out;
}

Complex lambda_value(unsigned omega, unsigned m, unsigned k,
                     const RootTable& roots) {
  require(m == roots.modulus(), "lambda_value: root table modulus mismatch");
  require(k < m, "lambda_value: k must satisfy 0 <= k < m");
  const std::uint64_t r = (static_cast<std::uint64_t>(k) * omega) % m;
  return roots[r];
}

ResidueTally tally_segment(const ResidueTally& tally,
                           const OmegaSegment& segment) {
  if (segment.lo != tally.x + 1) {
    fail(ErrorKind::kInvalidArgument,
         "tally_segment: segment starts at " + std::to_string(segment.lo) +
             " but tally ends at " + std::to_string(tally.x));
  }
  OmegaHistogram hist;
  hist.add(segment, 0, segment.size());
  ResidueTally delta = hist.fold(tally.m, segment.lo, segment.hi - 1);
  return merge(tally, delta);
}

ResidueTally merge(const ResidueTally& a, const ResidueTally& b) {
  if (a.m != b.m) {
    fail(ErrorKind::kInvalidArgument,
         "merge: modulus mismatch (" + std::to_string(a.m) + " vs " +
             std::to_string(b.m) + ")");
  }
  if (b.length() == 0) return a;
  if (a.length() == 0) return b;
  const ResidueTally& lower = a.first < b.first ? a : b;
  const ResidueTally& upper = a.first < b.first ? b : a;
  require(upper.first == lower.x + 1,
          "merge: ranges are not adjacent and disjoint");
  ResidueTally out = lower;
  out.x = upper.x;
  for (unsigned j = 0; j < out.m; ++j) out.counts[j] += upper.counts[j];
  return out;
}

CharacterSumSet sums_from_counts(const ResidueTally& tally,
                                 const RootTable& roots) {
  require(tally.m == roots.modulus(), "sums_from_counts: modulus mismatch");
  const unsigned m = tally.m;
  CharacterSumSet out{m, tally.x, std::vector<Complex>(m)};
  for (unsigned k = 0; k < m; ++k) {
    Complex acc{0.0, 0.0};
    for (unsigned j = 0; j < m; ++j) {
      acc += roots[static_cast<std::uint64_t>(j) * k] *
             static_cast<double>(tally.counts[j]);
    }
    out.sums[k] = acc;
  }
  // Row k = 0 is an integer sum; keep it exact.
  out.sums[0] = Complex(static_cast<double>(std::accumulate(
                            tally.counts.begin(), tally.counts.end(),
                            std::uint64_t{0})),
                        0.0);
  return out;
}

InverseResult counts_from_sums_checked(const CharacterSumSet& sums,
                                       const RootTable& roots,
                                       double tolerance) {
  require(sums.m == roots.modulus(), "counts_from_sums: modulus mismatch");
  require(sums.sums.size() == sums.m, "counts_from_sums: wrong sum count");
  const unsigned m = sums.m;
  InverseResult res{ResidueTally::empty(m), 0.0};
  res.tally.x = sums.x;
  for (unsigned j = 0; j < m; ++j) {
    Complex acc{0.0, 0.0};
    for (unsigned k = 0; k < m; ++k) {
      // zeta^{-jk} = zeta^{m - (jk mod m)}
      const std::uint64_t r = (static_cast<std::uint64_t>(j) * k) % m;
      acc += std::conj(roots[r]) * sums.sums[k];
    }
    acc /= static_cast<double>(m);
    const double rounded = std::round(acc.real());
    const double residual =
        std::max(std::abs(acc.real() - rounded), std::abs(acc.imag()));
    res.max_residual = std::max(res.max_residual, residual);
    if (!(residual <= tolerance) || rounded < 0.0) {
      fail(ErrorKind::kInconsistentTransform,
           "counts_from_sums: class " + std::to_string(j) +
               " misses an integer count by " + std::to_string(residual));
    }
    res.tally.counts[j] = static_cast<std::uint64_t>(rounded);
  }
  const std::uint64_t total = std::accumulate(
      res.tally.counts.begin(), res.tally.counts.end(), std::uint64_t{0});
  const double expected = std::round(sums.sums[0].real());
  if (static_cast<double>(total) != expected) {
    fail(ErrorKind::kInconsistentTransform,
         "counts_from_sums: recovered counts sum to " + std::to_string(total) +
             ", S_0 is " + std::to_string(expected));
  }
  return res;
}

ResidueTally counts_from_sums(const CharacterSumSet& sums,
                              const RootTable& roots) {
  return counts_from_sums_checked(sums, roots).tally;
}

}  // namespace omegamod

#include "omegamod/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "omegamod/dirichlet.hpp"
#include "omegamod/error.hpp"
#include "omegamod/error_terms.hpp"
#include "omegamod/hall.hpp"
#include "omegamod/race.hpp"
#include "omegamod/residue.hpp"

namespace omegamod {
namespace {

constexpr std::uint64_t kScale = 100000;

using CheckFn = std::function<std::string()>;  // "" on success

SelftestCheck run_check(const std::string& name, const CheckFn& fn) {
  try {
    std::string why = fn();
    return {name, why.empty(), why.empty() ? "ok" : why};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

ResidueTally tally_prefix(const OmegaSegment& omegas, unsigned m,
                          std::uint64_t x) {
  OmegaHistogram hist;
  hist.add(omegas, 0, x);
  return hist.fold(m, 1, x);
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options) {
  OmegaSegment omegas = omega_prefix(kScale, options.stream);
  if (options.inject_fault) ++omegas.values[9972];  // n = 9973

  std::vector<SelftestCheck> out;

  out.push_back(run_check("sieve_matches_trial_division", [&] {
    for (std::uint64_t n = 1; n <= kScale; ++n) {
      if (omegas.at(n) != omega_single(n)) {
        return "Omega(" + std::to_string(n) + ") mismatch";
      }
    }
    const std::uint64_t lo = 1000000000;
    const PrimeTable table = primes_up_to(isqrt(lo + 10000));
    const OmegaSegment far = omega_block(lo, lo + 10000, table);
    std::mt19937_64 rng(20100);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t n = lo + rng() % 10000;
      if (far.at(n) != omega_single(n)) {
        return "Omega(" + std::to_string(n) + ") mismatch";
      }
    }
    return std::string();
  }));

  out.push_back(run_check("transform_round_trip", [&] {
    for (unsigned m = 1; m <= 12; ++m) {
      const RootTable roots(m);
      const ResidueTally t = tally_prefix(omegas, m, kScale);
      const InverseResult back =
          counts_from_sums_checked(sums_from_counts(t, roots), roots);
      if (back.tally.counts != t.counts) {
        return "round trip changed counts for m = " + std::to_string(m);
      }
    }
    return std::string();
  }));

  out.push_back(run_check("residual_sum_identity", [&] {
    for (unsigned m = 1; m <= 12; ++m) {
      for (std::uint64_t x : checkpoint_schedule(kScale, kDefaultRatio)) {
        const ErrorCheckpoint cp = checkpoint(tally_prefix(omegas, m, x));
        std::int64_t sum = 0;
        for (std::int64_t r : cp.scaled_residuals) sum += r;
        if (sum != 0) {
          return "m = " + std::to_string(m) + ", x = " + std::to_string(x) +
                 ": residuals sum to " + std::to_string(sum);
        }
      }
    }
    return std::string();
  }));

  out.push_back(run_check("liouville_quotient", [&] {
    const IdentityReport r = check_lquo(3.0, 10000, omegas);
    if (r.deviation < 1e-6) return std::string();
    return "deviation " + std::to_string(r.deviation) + " >= 1e-6";
  }));

  out.push_back(run_check("euler_product_identities", [&] {
    const PrimeTable table = primes_up_to(10000);
    for (unsigned m : {2u, 3u, 4u, 6u}) {
      for (const IdentityReport& r :
           {check_identity_product(m, 2.0, 10000, table),
            check_g_product(m, 2.0, 10000, table)}) {
        if (!(r.deviation < 1e-6)) {
          return r.name + " for m = " + std::to_string(m) + " deviates by " +
                 std::to_string(r.deviation);
        }
      }
    }
    return std::string();
  }));

  out.push_back(run_check("hall_constants", [&] {
    for (unsigned m = 2; m <= 64; ++m) {
      const HallConstants h = hall_constants(m);
      if (!(h.perimeter > 0 && h.perimeter < 2 * std::numbers::pi) ||
          !(h.c > 0 && h.c < 0.5) || !(h.a_exponent > 0)) {
        return "constants out of range for m = " + std::to_string(m);
      }
      double scan = INFINITY;
      for (unsigned k = 1; k < m; ++k) {
        scan = std::min(scan, h.c * (1 - std::cos(2 * std::numbers::pi * k / m)));
      }
      if (std::abs(scan - h.a_exponent) > 1e-15) {
        return "closed-form A disagrees with scan for m = " + std::to_string(m);
      }
    }
    return std::string();
  }));

  out.push_back(run_check("race_consistency", [&] {
    const ResidueTally t = tally_prefix(omegas, 3, kScale);
    std::vector<RaceTracker> trackers;
    for (unsigned j = 0; j < 3; ++j) {
      for (unsigned jp = j + 1; jp < 3; ++jp) trackers.emplace_back(3, j, jp);
    }
    for (auto& tr : trackers) tr.feed(omegas);
    for (const auto& tr : trackers) {
      const RaceSummary& s = tr.summary();
      const auto expect = static_cast<std::int64_t>(t.counts[s.j]) -
                          static_cast<std::int64_t>(t.counts[s.jprime]);
      if (s.final_delta != expect) return std::string("final delta mismatch");
      if (s.lead_pos + s.lead_neg + s.lead_tie != kScale) {
        return std::string("lead counts do not sum to x_max");
      }
      for (std::size_t i = 1; i < s.events.size(); ++i) {
        if (s.events[i].direction == s.events[i - 1].direction) {
          return std::string("event directions do not alternate");
        }
      }
    }
    return std::string();
  }));

  return out;
}

}  // namespace omegamod

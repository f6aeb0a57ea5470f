#include "omegamod/hall.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "omegamod/error.hpp"

namespace omegamod {

double hull_perimeter(unsigned m) {
  require(m >= 2, "hull_perimeter: m must be >= 2 (no k with 0 < k < m)");
  if (m == 2) return 4.0;
  return 2.0 * m * std::sin(std::numbers::pi / m);
}

HallConstants hall_constants(unsigned m) {
  HallConstants h;
  h.m = m;
  h.perimeter = hull_perimeter(m);
  h.c = 0.5 * (1.0 - h.perimeter / (2.0 * std::numbers::pi));
  // 1 - cos(2 pi k/m) is smallest at k = 1 and k = m - 1.
  h.a_exponent = h.c * (1.0 - std::cos(2.0 * std::numbers::pi / m));
  return h;
}

double mertens_sum(std::uint64_t x, const PrimeTable& table) {
  require(x >= 2, "mertens_sum: x must be >= 2");
  require(table.limit >= x, "mertens_sum: prime table limit " +
                                std::to_string(table.limit) + " < x = " +
                                std::to_string(x));
  double sum = 0.0;
  for (std::uint64_t p : table.primes) {
    if (p > x) break;
    sum += 1.0 / static_cast<double>(p);
  }
  return sum;
}

double hall_rhs(unsigned m, unsigned k, std::uint64_t x,
                const PrimeTable& table) {
  require(k > 0 && k < m, "hall_rhs: k must satisfy 0 < k < m");
  const HallConstants h = hall_constants(m);
  const double drift = 1.0 - std::cos(2.0 * std::numbers::pi * k / m);
  return std::exp(-h.c * drift * mertens_sum(x, table));
}

double predicted_bound(unsigned m, double x) {
  require(x > 1.0, "predicted_bound: x must be > 1");
  const HallConstants h = hall_constants(m);
  return x / std::pow(std::log(x), h.a_exponent);
}

}  // namespace omegamod

#include <complex>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "omegamod/error.hpp"
#include "omegamod/hall.hpp"

using namespace omegamod;

namespace {

// Perimeter of the convex hull by walking the polygon edge by edge.
double polygon_perimeter(unsigned m) {
  double total = 0.0;
  for (unsigned r = 0; r < m; ++r) {
    const auto a = std::polar(1.0, 2.0 * std::numbers::pi * r / m);
    const auto b = std::polar(1.0, 2.0 * std::numbers::pi * (r + 1) / m);
    total += std::abs(b - a);
  }
  return total;
}

double scanned_a(unsigned m, double c) {
  double best = INFINITY;
  for (unsigned k = 1; k < m; ++k) {
    best = std::min(best, c * (1.0 - std::cos(2.0 * std::numbers::pi * k / m)));
  }
  return best;
}

}  // namespace

TEST_CASE("hull_perimeter") {
  CHECK(hull_perimeter(3) == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(hull_perimeter(4) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(hull_perimeter(2) == 4.0);
  // Degenerate hull: the segment [-1, 1] walked there and back.
  CHECK(polygon_perimeter(2) == doctest::Approx(4.0));
  for (unsigned m = 3; m <= 200; ++m) {
    CHECK(hull_perimeter(m) == doctest::Approx(polygon_perimeter(m)).epsilon(1e-12));
  }
  CHECK(hull_perimeter(360) > 6.28);
  CHECK(hull_perimeter(360) < 2.0 * std::numbers::pi);
  CHECK_THROWS_AS(hull_perimeter(1), Error);
  CHECK_THROWS_AS(hull_perimeter(0), Error);
}

TEST_CASE("hall_constants") {
  // Values frozen from the polygon-walk oracle above (double precision).
  const HallConstants h3 = hall_constants(3);
  CHECK(h3.c == doctest::Approx(0.0865033284336559).epsilon(1e-12));
  CHECK(h3.a_exponent == doctest::Approx(0.129754992650484).epsilon(1e-12));
  CHECK(h3.a_exponent == doctest::Approx(1.5 * h3.c));

  const HallConstants h4 = hall_constants(4);
  CHECK(h4.a_exponent == doctest::Approx(h4.c).epsilon(1e-15));
  CHECK(h4.c == doctest::Approx(0.0498418419214470).epsilon(1e-12));

  const HallConstants h2 = hall_constants(2);
  CHECK(h2.c == doctest::Approx(0.5 * (1.0 - 2.0 / std::numbers::pi)));
  CHECK(std::abs(h2.c - 0.1816901) < 1e-7);
  CHECK(std::abs(h2.a_exponent - 0.3633802) < 1e-7);

  double prev = INFINITY;
  for (unsigned m = 2; m <= 300; ++m) {
    const HallConstants h = hall_constants(m);
    const double oracle_c = 0.5 * (1.0 - (m == 2 ? 4.0 : polygon_perimeter(m)) /
                                             (2.0 * std::numbers::pi));
    CHECK(h.perimeter > 0.0);
    CHECK(h.perimeter < 2.0 * std::numbers::pi);
    CHECK(h.c == doctest::Approx(oracle_c).epsilon(1e-10));
    CHECK(h.c > 0.0);
    CHECK(h.c < 0.5);
    CHECK(h.a_exponent > 0.0);
    CHECK(h.a_exponent == doctest::Approx(scanned_a(m, h.c)).epsilon(1e-14));
    if (m >= 3) {
      CHECK(h.a_exponent < prev);
      prev = h.a_exponent;
    }
  }
  CHECK_THROWS_AS(hall_constants(1), Error);
}

TEST_CASE("mertens_sum") {
  const PrimeTable table = primes_up_to(1000000);
  CHECK(mertens_sum(2, table) == 0.5);
  CHECK(mertens_sum(10, table) ==
        doctest::Approx(0.5 + 1.0 / 3 + 0.2 + 1.0 / 7).epsilon(1e-15));
  const double expected = std::log(std::log(1e6)) + 0.2615;
  CHECK(std::abs(mertens_sum(1000000, table) - expected) < 0.05);
  CHECK_THROWS_AS(mertens_sum(2000000, table), Error);
  CHECK_THROWS_AS(mertens_sum(1, table), Error);
}

TEST_CASE("hall_rhs") {
  const PrimeTable table = primes_up_to(100000);
  const double c2 = hall_constants(2).c;
  CHECK(hall_rhs(2, 1, 2, table) == doctest::Approx(std::exp(-c2)).epsilon(1e-14));
  const double c3 = hall_constants(3).c;
  const double ms10 = 0.5 + 1.0 / 3 + 0.2 + 1.0 / 7;
  CHECK(hall_rhs(3, 1, 10, table) ==
        doctest::Approx(std::exp(-c3 * 1.5 * ms10)).epsilon(1e-14));
  for (unsigned m = 2; m <= 8; ++m) {
    for (unsigned k = 1; k < m; ++k) {
      const double v = hall_rhs(m, k, 100000, table);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
    }
  }
  CHECK_THROWS_AS(hall_rhs(3, 0, 10, table), Error);
  CHECK_THROWS_AS(hall_rhs(3, 3, 10, table), Error);
}

TEST_CASE("predicted_bound") {
  CHECK(predicted_bound(2, std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  const double a3 = hall_constants(3).a_exponent;
  CHECK(predicted_bound(3, 1e6) ==
        doctest::Approx(1e6 / std::pow(6.0 * std::log(10.0), a3)).epsilon(1e-13));
  CHECK(predicted_bound(3, 1e8) / 1e8 < predicted_bound(3, 1e4) / 1e4);
  CHECK_THROWS_AS(predicted_bound(3, 1.0), Error);
  CHECK_THROWS_AS(predicted_bound(3, 0.5), Error);
}

#pragma once

#include <cstdint>

#include "omegamod/sieve.hpp"

namespace omegamod {

/// Constants of the mean-value bound for lambda_{m,k}, with D the convex
/// hull of the m-th roots of unity.
struct HallConstants {
  unsigned m = 2;
  double perimeter = 0.0;   // L(D)
  double c = 0.0;           // (1/2)(1 - L(D)/(2 pi))
  double a_exponent = 0.0;  // min over 0<k<m of c (1 - cos(2 pi k/m))
};

/// 2m sin(pi/m) for m >= 3; 4 for the degenerate segment at m = 2.
double hull_perimeter(unsigned m);

HallConstants hall_constants(unsigned m);

/// Sum of 1/p over primes p <= x, ascending.
double mertens_sum(std::uint64_t x, const PrimeTable& table);

/// exp(-c (1 - cos(2 pi k/m)) * mertens_sum(x)): the envelope for
/// |S_{m,k}(x)|/x up to an absolute constant.
double hall_rhs(unsigned m, unsigned k, std::uint64_t x,
                const PrimeTable& table);

/// x / (log x)^A.
double predicted_bound(unsigned m, double x);

}  // namespace omegamod

#include "omegamod/dirichlet.hpp"

#include <cmath>
#include <string>

#include "omegamod/error.hpp"

namespace omegamod {
namespace {

void require_half_plane(Complex s, const char* who) {
  if (!(s.real() > 1.0)) {
    fail(ErrorKind::kOutOfDomain,
         std::string(who) + ": requires Re s > 1, got Re s = " +
             std::to_string(s.real()));
  }
}

Complex inverse_power(std::uint64_t n, Complex s) {
  return std::exp(-s * std::log(static_cast<double>(n)));
}

void require_cover(const OmegaSegment& omegas, std::uint64_t n_max) {
  require(omegas.lo == 1 && omegas.hi > n_max,
          "Omega source must cover 1..n_max");
}

}  // namespace

const char* to_string(DirichletMethod method) {
  switch (method) {
    case DirichletMethod::kTruncatedSum:
      return "truncated-sum";
    case DirichletMethod::kEulerProduct:
      return "euler-product";
  }
  return "?";
}

Complex zeta_ref(Complex s, std::uint64_t terms) {
  require_half_plane(s, "zeta_ref");
  require(terms >= 10, "zeta_ref: need at least 10 terms");
  // Smallest terms first.
  Complex sum{0.0, 0.0};
  for (std::uint64_t n = terms; n >= 1; --n) sum += inverse_power(n, s);
  const Complex tail =
      std::exp((1.0 - s) * std::log(static_cast<double>(terms))) / (s - 1.0);
  return sum + tail;
}

DirichletEvaluation truncated_L(unsigned m, unsigned k, Complex s,
                                std::uint64_t n_max,
                                const OmegaSegment& omegas) {
  require_half_plane(s, "truncated_L");
  require(n_max >= 1, "truncated_L: n_max must be >= 1");
  require(k < m, "truncated_L: k must satisfy 0 <= k < m");
  require_cover(omegas, n_max);
  const RootTable roots(m);
  Complex sum{0.0, 0.0};
  for (std::uint64_t n = n_max; n >= 1; --n) {
    sum += lambda_value(omegas.at(n), m, k, roots) * inverse_power(n, s);
  }
  return {m, k, s, DirichletMethod::kTruncatedSum, n_max, sum};
}

DirichletEvaluation truncated_L(unsigned m, unsigned k, Complex s,
                                std::uint64_t n_max) {
  require_half_plane(s, "truncated_L");
  return truncated_L(m, k, s, n_max, omega_prefix(n_max));
}

DirichletEvaluation euler_L(unsigned m, unsigned k, Complex s,
                            std::uint64_t p_max, const PrimeTable& table) {
  require_half_plane(s, "euler_L");
  require(k < m, "euler_L: k must satisfy 0 <= k < m");
  require(p_max >= 2, "euler_L: p_max must be >= 2");
  require(table.limit >= p_max, "euler_L: prime table too small");
  const RootTable roots(m);
  const Complex w = roots[k];
  Complex prod{1.0, 0.0};
  for (std::uint64_t p : table.primes) {
    if (p > p_max) break;
    prod /= 1.0 - w * inverse_power(p, s);
  }
  return {m, k, s, DirichletMethod::kEulerProduct, p_max, prod};
}

GFactorEvaluation euler_G(unsigned m, unsigned k, Complex s,
                          std::uint64_t p_max, const PrimeTable& table) {
  require_half_plane(s, "euler_G");
  if (s.imag() != 0.0) {
    fail(ErrorKind::kUnsupported,
         "euler_G: only real s is supported (complex powers need a branch)");
  }
  require(k > 0 && k < m, "euler_G: k must satisfy 0 < k < m");
  require(p_max >= 2, "euler_G: p_max must be >= 2");
  require(table.limit >= p_max, "euler_G: prime table too small");
  const RootTable roots(m);
  const Complex w = roots[k];
  const double sigma = s.real();
  Complex prod{1.0, 0.0};
  for (std::uint64_t p : table.primes) {
    if (p > p_max) break;
    const double z = std::pow(static_cast<double>(p), -sigma);
    // (1 - z)^w with the principal log of the positive base 1 - z.
    const Complex regular = std::exp(w * std::log1p(-z));
    prod *= regular / (1.0 - w * z);
  }
  return {m, k, s, p_max, prod};
}

IdentityReport check_identity_product(unsigned m, Complex s,
                                      std::uint64_t p_max,
                                      const PrimeTable& table,
                                      std::uint64_t zeta_terms) {
  require_half_plane(s, "check_identity_product");
  require(m >= 1, "check_identity_product: m must be >= 1");
  Complex prod{1.0, 0.0};
  for (unsigned k = 0; k < m; ++k) prod *= euler_L(m, k, s, p_max, table).value;
  const Complex target = zeta_ref(static_cast<double>(m) * s, zeta_terms);
  return {"prod_L", m, s, p_max, prod, target, std::abs(prod - target)};
}

IdentityReport check_g_product(unsigned m, Complex s, std::uint64_t p_max,
                               const PrimeTable& table,
                               std::uint64_t zeta_terms) {
  require_half_plane(s, "check_g_product");
  require(m >= 2, "check_g_product: m must be >= 2");
  Complex prod{1.0, 0.0};
  for (unsigned k = 1; k < m; ++k) prod *= euler_G(m, k, s, p_max, table).value;
  const Complex target = zeta_ref(static_cast<double>(m) * s, zeta_terms);
  return {"prod_G", m, s, p_max, prod, target, std::abs(prod - target)};
}

IdentityReport check_lquo(Complex s, std::uint64_t n_max,
                          const OmegaSegment& omegas,
                          std::uint64_t zeta_terms) {
  require_half_plane(s, "check_lquo");
  const Complex lhs = truncated_L(2, 1, s, n_max, omegas).value;
  const Complex rhs = zeta_ref(2.0 * s, zeta_terms) / zeta_ref(s, zeta_terms);
  return {"liouville_quotient", 2, s, n_max, lhs, rhs, std::abs(lhs - rhs)};
}

IdentityReport check_lquo(Complex s, std::uint64_t n_max) {
  require_half_plane(s, "check_lquo");
  return check_lquo(s, n_max, omega_prefix(n_max));
}

}  // namespace omegamod

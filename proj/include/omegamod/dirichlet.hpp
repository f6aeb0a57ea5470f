#pragma once

#include <cstdint>
#include <string>

#include "omegamod/residue.hpp"
#include "omegamod/sieve.hpp"

namespace omegamod {

enum class DirichletMethod { kTruncatedSum, kEulerProduct };

const char* to_string(DirichletMethod method);

/// L_{m,k}(s) approximated by a cutoff (N terms or primes <= P).
struct DirichletEvaluation {
  unsigned m = 1;
  unsigned k = 0;
  Complex s;
  DirichletMethod method = DirichletMethod::kTruncatedSum;
  std::uint64_t cutoff = 2;
  Complex value;
};

/// Truncated Euler product of the regular factor G_{m,k}(s) in
/// L_{m,k} = zeta^{zeta_m^k} G_{m,k}.
struct GFactorEvaluation {
  unsigned m = 1;
  unsigned k = 1;
  Complex s;
  std::uint64_t cutoff = 2;
  Complex value;
};

/// Both sides of a numerical identity check.
struct IdentityReport {
  std::string name;
  unsigned m = 1;
  Complex s;
  std::uint64_t cutoff = 0;
  Complex lhs;
  Complex rhs;
  double deviation = 0.0;
};

inline constexpr std::uint64_t kDefaultZetaTerms = 100000;

/// sum_{n<=terms} n^{-s} + terms^{1-s}/(s-1), for Re s > 1.
Complex zeta_ref(Complex s, std::uint64_t terms = kDefaultZetaTerms);

/// sum_{n<=n_max} zeta_m^{k Omega(n)} n^{-s}; `omegas` must cover 1..n_max.
DirichletEvaluation truncated_L(unsigned m, unsigned k, Complex s,
                                std::uint64_t n_max,
                                const OmegaSegment& omegas);

/// Same, sieving Omega(1..n_max) itself.
DirichletEvaluation truncated_L(unsigned m, unsigned k, Complex s,
                                std::uint64_t n_max);

/// prod_{p<=p_max} (1 - zeta_m^k p^{-s})^{-1}.
DirichletEvaluation euler_L(unsigned m, unsigned k, Complex s,
                            std::uint64_t p_max, const PrimeTable& table);

/// prod_{p<=p_max} (1 - zeta_m^k p^{-s})^{-1} (1 - p^{-s})^{zeta_m^k}.
/// Real s > 1 only, so every power has a positive real base.
GFactorEvaluation euler_G(unsigned m, unsigned k, Complex s,
                          std::uint64_t p_max, const PrimeTable& table);

/// prod_{k=0}^{m-1} euler_L(m,k,s) against zeta(m s).
IdentityReport check_identity_product(unsigned m, Complex s,
                                      std::uint64_t p_max,
                                      const PrimeTable& table,
                                      std::uint64_t zeta_terms = kDefaultZetaTerms);

/// prod_{k=1}^{m-1} euler_G(m,k,s) against zeta(m s).
IdentityReport check_g_product(unsigned m, Complex s, std::uint64_t p_max,
                               const PrimeTable& table,
                               std::uint64_t zeta_terms = kDefaultZetaTerms);

/// sum_{n<=n_max} lambda(n) n^{-s} against zeta(2s)/zeta(s).
IdentityReport check_lquo(Complex s, std::uint64_t n_max,
                          const OmegaSegment& omegas,
                          std::uint64_t zeta_terms = kDefaultZetaTerms);

IdentityReport check_lquo(Complex s, std::uint64_t n_max);

}  // namespace omegamod

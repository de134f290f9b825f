#ifndef TOTIENT_GAP_FACTOR_BOUNDS_HPP
#define TOTIENT_GAP_FACTOR_BOUNDS_HPP

#include "totient_gap/exact_ratio.hpp"
#include "totient_gap/prime_table.hpp"

#include <stdexcept>

namespace totient_gap {

class table_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Context for integers known to be coprime to the first `coprime_prefix` primes.
struct CoprimalityContext {
  std::uint64_t coprime_prefix = 0;  // r: excluded leading primes
  const PrimeTable* table = nullptr;
};

/// Least s >= 0 with m <= p_{r+1} * ... * p_{r+s}. Any integer coprime to the
/// first r primes and bounded by that product has at most s distinct prime
/// factors. Throws table_exhausted_error when the table cannot reach m.
std::uint64_t max_distinct_factors(const CoprimalityContext& ctx, const BigInt& m);

/// prod_{i=r+1}^{r+s} (1 - 1/p_i), a valid lower bound on phi(m)/m for any m
/// coprime to the first r primes with at most s distinct prime factors.
ExactRatio phi_ratio_lower_bound(const CoprimalityContext& ctx, std::uint64_t s);

/// Least t with phi_ratio_lower_bound(ctx, t) < threshold: any m coprime to
/// the first r primes with phi(m)/m < threshold has at least t distinct
/// prime factors.
std::uint64_t min_distinct_factors_for_ratio(const CoprimalityContext& ctx,
                                             const ExactRatio& threshold);

}  // namespace totient_gap

#endif

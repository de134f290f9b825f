#include "totient_gap/factor_bounds.hpp"

#include <vector>

namespace totient_gap {

namespace {

void check_ctx(const CoprimalityContext& ctx) {
  if (ctx.table == nullptr) throw std::invalid_argument("coprimality context without table");
  if (ctx.coprime_prefix > ctx.table->count())
    throw std::out_of_range("coprimality prefix exceeds table size");
}

}  // namespace

std::uint64_t max_distinct_factors(const CoprimalityContext& ctx, const BigInt& m) {
  check_ctx(ctx);
  if (m < 1) throw std::invalid_argument("max_distinct_factors: m must be >= 1");
  BigInt acc(1);
  std::uint64_t s = 0;
  while (acc < m) {
    std::uint64_t idx = ctx.coprime_prefix + s + 1;
    if (idx > ctx.table->count())
      throw table_exhausted_error(
          "prime table exhausted before the primorial reached m (need index > " +
          std::to_string(ctx.table->count()) + ")");
    acc *= static_cast<unsigned long>(ctx.table->nth(idx));
    ++s;
  }
  return s;
}

ExactRatio phi_ratio_lower_bound(const CoprimalityContext& ctx, std::uint64_t s) {
  check_ctx(ctx);
  if (s == 0) return ExactRatio(1, 1);
  if (ctx.coprime_prefix + s > ctx.table->count())
    throw table_exhausted_error("prime table too small for lower bound at s = " +
                                std::to_string(s));
  std::span<const std::uint64_t> primes =
      ctx.table->primes().subspan(ctx.coprime_prefix, s);
  return ExactRatio::phi_ratio_from_primes(primes);
}

std::uint64_t min_distinct_factors_for_ratio(const CoprimalityContext& ctx,
                                             const ExactRatio& threshold) {
  check_ctx(ctx);
  if (threshold.numerator() == 0 || threshold >= ExactRatio(1, 1))
    throw std::invalid_argument("threshold must lie strictly between 0 and 1");
  // grow the running product until its phi-ratio drops below the threshold
  BigInt num(1), den(1);
  std::uint64_t t = 0;
  for (;;) {
    if (num * threshold.denominator() < threshold.numerator() * den) return t;
    std::uint64_t idx = ctx.coprime_prefix + t + 1;
    if (idx > ctx.table->count())
      throw table_exhausted_error("prime table exhausted before the ratio dropped below " +
                                  threshold.to_string());
    std::uint64_t p = ctx.table->nth(idx);
    num *= static_cast<unsigned long>(p - 1);
    den *= static_cast<unsigned long>(p);
    ++t;
  }
}

}  // namespace totient_gap

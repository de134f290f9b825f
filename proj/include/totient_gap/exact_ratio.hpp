#ifndef TOTIENT_GAP_EXACT_RATIO_HPP
#define TOTIENT_GAP_EXACT_RATIO_HPP

#include "totient_gap/numeric.hpp"

#include <compare>
#include <span>
#include <string>

namespace totient_gap {

/// Exact non-negative rational, always stored in lowest terms.
/// All bound arithmetic in this project stays rational; decimal strings
/// exist for display only and are truncated, never rounded.
class ExactRatio {
 public:
  ExactRatio() : num_(0), den_(1) {}
  ExactRatio(BigInt numerator, BigInt denominator);

  /// prod (1 - 1/p) over the given primes, reduced once at the end.
  /// Rejects duplicates and non-primes. Empty input yields 1/1.
  static ExactRatio phi_ratio_from_primes(std::span<const std::uint64_t> distinct_primes);

  /// Accepts "n", "n/d", or a pair of decimal strings.
  static ExactRatio parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  ExactRatio operator*(const ExactRatio& other) const;

  /// Exact cross-multiplied comparison; no rounding anywhere.
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// floor(value * 10^digits) rendered as "i.d1d2..."; truncation toward zero.
  std::string to_decimal_truncated(unsigned digits) const;

  std::string to_string() const;  // "num/den"

 private:
  BigInt num_;
  BigInt den_;
};

std::strong_ordering compare(const ExactRatio& a, const ExactRatio& b);

}  // namespace totient_gap

#endif

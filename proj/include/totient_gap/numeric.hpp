#ifndef TOTIENT_GAP_NUMERIC_HPP
#define TOTIENT_GAP_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace totient_gap {

using BigInt = mpz_class;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact number of decimal digits; digit_count(0) == 1.
std::size_t digit_count(const BigInt& value);

/// Parses a decimal integer string. Throws std::invalid_argument on anything
/// that is not an optionally signed run of digits.
BigInt parse_big_int(std::string_view text);

// "1234567" -> "1,234,567" (groups of three, aligned to the least significant digit).
std::string group_digits(std::string_view digits);

/// Short human rendering of a big value: full grouped digits when small,
/// otherwise digit count plus grouped head/tail excerpts.
std::string abbreviate_value(const BigInt& value, std::size_t edge_digits = 30);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

}  // namespace totient_gap

#endif

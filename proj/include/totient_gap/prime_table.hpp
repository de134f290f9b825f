#ifndef TOTIENT_GAP_PRIME_TABLE_HPP
#define TOTIENT_GAP_PRIME_TABLE_HPP

#include "totient_gap/numeric.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace totient_gap {

/// Balanced pairwise product of 64-bit values; empty input yields 1.
BigInt product_tree(std::span<const std::uint64_t> values);

/// Immutable, 1-indexed table of the first `count` primes (nth(1) == 2).
class PrimeTable {
 public:
  static constexpr std::uint64_t kMaxCount = 1'000'000'000;
  // default segment covers 2^20 odd residues per sieve pass
  static constexpr std::size_t kDefaultSegmentOdds = std::size_t{1} << 20;

  static PrimeTable build(std::uint64_t count,
                          std::size_t segment_odds = kDefaultSegmentOdds);

  /// Binary cache: "PTBL1", u64 count, count u64 primes, u64 checksum
  /// (wrapping sum of the prime values), all little-endian.
  static PrimeTable load_cache(const std::filesystem::path& path);
  void save_cache(const std::filesystem::path& path) const;

  /// Uses the cache when it exists and holds at least `count` primes,
  /// otherwise sieves and rewrites the cache.
  static PrimeTable load_or_build(std::uint64_t count,
                                  const std::optional<std::filesystem::path>& cache);

  std::uint64_t count() const { return primes_.size(); }

  /// i-th prime, 1-based. Throws std::out_of_range.
  std::uint64_t nth(std::uint64_t i) const;

  /// Exact product of primes with indices lo..hi inclusive (1-based).
  BigInt primorial_range(std::uint64_t lo, std::uint64_t hi) const;

  std::span<const std::uint64_t> primes() const { return primes_; }

 private:
  explicit PrimeTable(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {}
  std::vector<std::uint64_t> primes_;
};

}  // namespace totient_gap

#endif

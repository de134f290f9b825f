#ifndef TOTIENT_GAP_ORACLE_HPP
#define TOTIENT_GAP_ORACLE_HPP

#include "totient_gap/exact_ratio.hpp"
#include "totient_gap/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace totient_gap::oracle {

struct SmallFactorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

/// Trial-division factorization; feasible for values whose square root is
/// reachable by trial division (tests stay below ~10^12).
SmallFactorization factorize_naive(std::uint64_t m);

std::uint64_t phi_naive(std::uint64_t m);
std::uint32_t omega_naive(std::uint64_t m);

/// Streams phi(v) for v = start, start + step, ... while v <= max_value,
/// via a segmented sieve restricted to the progression.
class PhiProgression {
 public:
  PhiProgression(std::uint64_t start, std::uint64_t step, std::uint64_t max_value,
                 std::size_t segment = 1 << 16);

  struct Entry {
    std::uint64_t value;
    std::uint64_t phi;
  };
  std::optional<Entry> next();

 private:
  void fill_segment();

  std::uint64_t start_, step_, max_value_;
  std::size_t segment_;
  std::vector<std::uint64_t> small_primes_;
  std::vector<std::uint64_t> rem_, phi_;
  std::uint64_t next_value_ = 0;  // first value of the segment being consumed
  std::size_t cursor_ = 0, filled_ = 0;
};

/// Least z <= limit with z = residue (mod modulus) and phi(z)/z < threshold
/// (exact comparison), or nullopt.
std::optional<std::uint64_t> smallest_z_scan(std::uint64_t modulus, std::uint64_t residue,
                                             const ExactRatio& threshold, std::uint64_t limit);

/// Least n in [1, limit] with phi(a n + b) < phi(c n + d), or nullopt.
/// Requires a + b >= 1 and c + d >= 1 so both sides stay positive.
std::optional<std::uint64_t> scan_inequality(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                             std::uint64_t d, std::uint64_t limit);

}  // namespace totient_gap::oracle

#endif

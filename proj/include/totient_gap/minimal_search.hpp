#ifndef TOTIENT_GAP_MINIMAL_SEARCH_HPP
#define TOTIENT_GAP_MINIMAL_SEARCH_HPP

#include "totient_gap/exact_ratio.hpp"
#include "totient_gap/factor_bounds.hpp"
#include "totient_gap/prime_table.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace totient_gap {

class search_budget_exceeded_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of leading table primes whose set equals the primes dividing
/// `modulus`. Throws std::invalid_argument when the modulus has a prime
/// divisor outside that initial run (the search method does not apply then).
std::uint32_t modulus_prime_prefix(const BigInt& modulus, const PrimeTable& table);

/// phi(M)/M: the natural strict threshold for phi(Mn + residue) < phi(Mn),
/// since phi(ab) <= phi(a) b forces phi(z)/z below it at any solution.
ExactRatio derive_threshold(const BigInt& modulus, const PrimeTable& table);

struct SearchProblem {
  BigInt modulus;
  BigInt residue;
  ExactRatio threshold;
  std::uint32_t coprime_prefix = 0;  // derived from the modulus
};

/// Validates modulus/residue/threshold and derives the coprime prefix.
SearchProblem make_search_problem(BigInt modulus, BigInt residue, ExactRatio threshold,
                                  const PrimeTable& table);

/// One integer below the bound, described by its squarefree kernel (indices
/// of its distinct primes) and the leftover multiplier supported on those
/// same primes: value = multiplier * prod p_i.
struct CandidateValue {
  std::vector<std::uint32_t> kernel_indices;
  BigInt multiplier{1};
  BigInt value;
};

/// Every integer v < bound that is coprime to the first `coprime_prefix`
/// primes and has at least `min_factors` distinct prime factors. Depth-first
/// over strictly increasing index tuples, pruning a branch as soon as the
/// partial product times the cheapest completion reaches the bound.
std::vector<CandidateValue> enumerate_candidates(std::uint32_t coprime_prefix,
                                                 std::uint32_t min_factors,
                                                 const BigInt& bound,
                                                 const PrimeTable& table);

enum class RejectionReason { wrong_residue, ratio_not_below };

struct RejectedCandidate {
  CandidateValue candidate;
  BigInt value_mod;  // candidate value mod modulus
  RejectionReason reason;
};

struct SearchResult {
  BigInt z;
  std::vector<std::uint32_t> prime_indices;  // squarefree kernel of z
  BigInt multiplier{1};                      // 1 whenever z is squarefree
  std::uint64_t min_factor_count = 0;        // t from the ratio bound
  std::vector<RejectedCandidate> ledger;     // every candidate below z, sorted by value
};

struct SearchOptions {
  std::uint64_t best_first_budget = 100000;  // max tuples examined for the seed
};

/// Smallest z with z = residue (mod M) and phi(z)/z < threshold, plus the
/// exhaustive ledger of rejected candidates below it.
SearchResult find_smallest_z(const SearchProblem& problem, const PrimeTable& table,
                             const SearchOptions& options = {});

/// Ledger rows as a JSON array of {indices, multiplier, value_digits,
/// value_mod_M, reason}.
void write_ledger_json(const SearchResult& result, std::ostream& os);

}  // namespace totient_gap

#endif

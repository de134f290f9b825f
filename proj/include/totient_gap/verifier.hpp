#ifndef TOTIENT_GAP_VERIFIER_HPP
#define TOTIENT_GAP_VERIFIER_HPP

#include "totient_gap/exact_ratio.hpp"
#include "totient_gap/factor_bounds.hpp"
#include "totient_gap/numeric.hpp"
#include "totient_gap/prime_table.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace totient_gap {

/// Partial factorization: the fully known small part plus a cofactor proven
/// coprime to the first `coprime_depth` table primes via block gcds.
struct FactorizationSketch {
  BigInt value;
  std::vector<PrimePower> known_factors;  // sorted by prime, full multiplicity
  BigInt cofactor;
  std::uint32_t coprime_depth = 0;  // K
};

/// Pulls every factor among the first `depth` primes out of n by gcd-batching
/// blocks of `block` consecutive primes, dividing found primes out to full
/// multiplicity. A final pass re-checks gcd(cofactor, block product) == 1 for
/// every block.
FactorizationSketch extract_known_factors(const BigInt& n, const PrimeTable& table,
                                          std::uint32_t depth, std::uint32_t block);

/// (value, phi) for a squarefree product of distinct table primes.
std::pair<BigInt, BigInt> phi_exact(std::span<const std::uint32_t> prime_indices,
                                    const PrimeTable& table);

/// (value, phi) for a fully factored part with exponents.
std::pair<BigInt, BigInt> phi_exact(std::span<const PrimePower> factors);

struct PhiLowerBound {
  ExactRatio ratio;                      // lower bound on phi(value)/value
  std::uint64_t cofactor_factor_bound;   // s: distinct-factor cap used for the cofactor
};

/// Exact phi-ratio of the known part times the primorial-tail bound for the
/// cofactor. The default size witness is the cofactor itself (tightest); pass
/// a larger witness (for instance the full value) to reproduce bounds that
/// were derived from a coarser size comparison. The witness must dominate the
/// cofactor for the factor-count cap to be valid.
PhiLowerBound lower_bound_phi_over_m(const FactorizationSketch& sketch, const PrimeTable& table);
PhiLowerBound lower_bound_phi_over_m(const FactorizationSketch& sketch, const PrimeTable& table,
                                     const BigInt& cofactor_size_witness);

enum class VerifyStatus { proven, inconclusive, disproven };

/// Self-contained replayable proof of phi(Mn + residue) < phi(Mn).
struct Certificate {
  BigInt modulus;
  BigInt residue;
  std::vector<std::uint32_t> z_prime_indices;
  BigInt n;
  std::vector<PrimePower> n_known_factors;
  std::size_t cofactor_digit_count = 0;
  std::uint32_t coprime_depth = 0;
  std::uint64_t cofactor_factor_bound = 0;      // s for the cofactor, from the full value
  ExactRatio z_phi_ratio;                       // phi(z)/z
  ExactRatio mn_phi_lower_bound;                // N/D <= phi(Mn)/Mn
  BigInt inequality_lhs;                        // phi(z) * D
  BigInt inequality_rhs;                        // N * M * n
};

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::inconclusive;
  std::optional<Certificate> certificate;  // present only when proven
  // diagnostics, present for every status
  BigInt n;
  FactorizationSketch n_sketch;
  std::uint64_t cofactor_factor_bound = 0;
  ExactRatio z_phi_ratio;
  ExactRatio mn_phi_lower_bound;
  BigInt inequality_lhs;
  BigInt inequality_rhs;
};

/// Proves phi(Mn + residue) < phi(Mn) for z = prod p_i without factoring n:
/// gcd-batch extraction, the primorial-tail bound on the cofactor, and one
/// strict comparison of exact integers.
VerifyOutcome verify_inequality(std::span<const std::uint32_t> z_prime_indices,
                                const BigInt& modulus, const BigInt& residue,
                                const PrimeTable& table, std::uint32_t coprime_depth,
                                std::uint32_t block);

inline constexpr std::string_view kCertificateFormat = "totient-gap-cert/1";

std::string serialize_certificate(const Certificate& cert);

class certificate_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws certificate_format_error on structural problems.
Certificate parse_certificate(const std::string& json_text);

enum class CheckStatus { valid, structural_error, replay_mismatch, inequality_not_strict };

struct CheckReport {
  CheckStatus status = CheckStatus::structural_error;
  std::string detail;
  bool ok() const { return status == CheckStatus::valid; }
};

/// Recomputes every derived field from z_prime_indices and the problem
/// parameters, compares against the certificate, and re-runs the final
/// integer comparison.
CheckReport check_certificate(const Certificate& cert, const PrimeTable& table);

/// Same, starting from raw text; parse failures come back as structural errors.
CheckReport check_certificate_text(const std::string& json_text, const PrimeTable& table);

}  // namespace totient_gap

#endif

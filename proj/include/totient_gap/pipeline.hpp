#ifndef TOTIENT_GAP_PIPELINE_HPP
#define TOTIENT_GAP_PIPELINE_HPP

#include "totient_gap/minimal_search.hpp"
#include "totient_gap/verifier.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace totient_gap {

struct PipelineConfig {
  BigInt modulus{30};
  BigInt residue{1};
  std::optional<ExactRatio> threshold;  // default: phi(modulus)/modulus
  std::uint32_t coprime_depth = 80000;
  std::uint32_t block = 1000;
  std::optional<std::filesystem::path> prime_cache;
  std::uint64_t best_first_budget = 100000;
};

struct PhaseTimings {
  double table_seconds = 0;
  double search_seconds = 0;
  double verify_seconds = 0;
  double check_seconds = 0;
};

struct RunReport {
  std::string modulus;
  std::string residue;
  std::string threshold;           // "num/den"
  std::uint64_t table_count = 0;

  std::uint64_t min_factor_count = 0;       // t
  std::string boundary_ratio_decimal;       // ratio at t-1 primes, 7 digits
  std::size_t z_digit_count = 0;
  std::string z_excerpt;
  std::string z_indices_compact;
  std::size_t ledger_size = 0;
  std::size_t ledger_residue_rejections = 0;
  std::size_t ledger_ratio_rejections = 0;
  std::string lhs_ratio_decimal;            // phi(z)/z, 7 digits

  std::size_t n_digit_count = 0;
  std::string n_excerpt;
  std::string n_digits;                     // full value, printed only on request
  std::string n_factors_compact;
  std::size_t cofactor_digit_count = 0;
  std::uint32_t coprime_depth = 0;
  std::uint64_t cofactor_factor_bound = 0;  // s for the cofactor
  std::size_t primorial_tail_digit_count = 0;
  std::string rhs_bound_decimal;            // lower bound on phi(Mn)/Mn, 7 digits

  VerifyStatus status = VerifyStatus::inconclusive;
  bool self_check_passed = false;
  PhaseTimings timings;
};

struct PipelineResult {
  SearchResult search;
  VerifyOutcome verify;
  std::string certificate_json;  // empty unless proven
  RunReport report;
};

/// search -> verify -> serialize -> self-check, with per-phase timings.
PipelineResult run_full_pipeline(const PipelineConfig& config);

/// Stable line-oriented rendering; ratios truncate at 7 digits, big values
/// appear as digit count plus comma-grouped head/tail.
std::string render_report(const RunReport& report, bool full_n = false);

/// Prime count the pipeline provisions for a given coprime depth.
std::uint64_t provision_table_count(std::uint32_t coprime_depth);

}  // namespace totient_gap

#endif

#include "totient_gap/minimal_search.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <queue>
#include <set>

namespace totient_gap {

std::uint32_t modulus_prime_prefix(const BigInt& modulus, const PrimeTable& table) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  BigInt rem = modulus;
  std::uint32_t r = 0;
  while (rem > 1) {
    if (r + 1 > table.count())
      throw table_exhausted_error("prime table too small to factor the modulus");
    std::uint64_t p = table.nth(r + 1);
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p))
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
    ++r;
  }
  if (rem != 1)
    throw std::invalid_argument(
        "modulus " + modulus.get_str() +
        " is not supported: its prime divisors must be exactly the first r primes");
  return r;
}

ExactRatio derive_threshold(const BigInt& modulus, const PrimeTable& table) {
  std::uint32_t r = modulus_prime_prefix(modulus, table);
  return ExactRatio::phi_ratio_from_primes(table.primes().subspan(0, r));
}

SearchProblem make_search_problem(BigInt modulus, BigInt residue, ExactRatio threshold,
                                  const PrimeTable& table) {
  std::uint32_t r = modulus_prime_prefix(modulus, table);
  if (residue < 0 || residue >= modulus)
    throw std::invalid_argument("residue must lie in [0, modulus)");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw std::invalid_argument("residue must be coprime to the modulus");
  if (threshold.numerator() == 0 || threshold >= ExactRatio(1, 1))
    throw std::invalid_argument("threshold must lie strictly between 0 and 1");
  return SearchProblem{std::move(modulus), std::move(residue), std::move(threshold), r};
}

namespace {

// Lazily extended products of consecutive table primes following `base`.
class ConsecutiveProducts {
 public:
  ConsecutiveProducts(const PrimeTable& table, std::uint32_t base)
      : table_(table), base_(base) {
    partial_.emplace_back(1);
  }

  // product of primes with indices in (from, to]; requires base <= from <= to
  BigInt range(std::uint64_t from, std::uint64_t to) {
    extend_to(to);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), partial_[to - base_].get_mpz_t(),
                 partial_[from - base_].get_mpz_t());
    return q;
  }

 private:
  void extend_to(std::uint64_t idx) {
    while (base_ + partial_.size() - 1 < idx) {
      std::uint64_t next_index = base_ + partial_.size();
      if (next_index > table_.count())
        throw table_exhausted_error("prime table exhausted while pruning the enumeration");
      partial_.push_back(partial_.back() *
                         static_cast<unsigned long>(table_.nth(next_index)));
    }
  }

  const PrimeTable& table_;
  std::uint32_t base_;
  std::vector<BigInt> partial_;
};

struct EnumerationState {
  const PrimeTable& table;
  std::uint32_t coprime_prefix;
  std::uint32_t min_factors;
  const BigInt& bound;
  ConsecutiveProducts products;
  std::vector<std::uint32_t> prefix;
  std::vector<CandidateValue>& out;

  void emit_multipliers(const BigInt& kernel_value) {
    std::vector<std::uint64_t> kernel_primes;
    kernel_primes.reserve(prefix.size());
    for (std::uint32_t idx : prefix) kernel_primes.push_back(table.nth(idx));
    // kernel itself
    out.push_back(CandidateValue{prefix, BigInt(1), kernel_value});
    // extra powers of kernel primes, nondecreasing to visit each value once
    multiplier_dfs(kernel_primes, 0, BigInt(1), kernel_value);
  }

  void multiplier_dfs(const std::vector<std::uint64_t>& kernel_primes, std::size_t from,
                      const BigInt& multiplier, const BigInt& kernel_value) {
    for (std::size_t q = from; q < kernel_primes.size(); ++q) {
      BigInt next = multiplier * static_cast<unsigned long>(kernel_primes[q]);
      BigInt value = kernel_value * next;
      if (value >= bound) break;  // primes increase along the row
      out.push_back(CandidateValue{prefix, next, std::move(value)});
      multiplier_dfs(kernel_primes, q, next, kernel_value);
    }
  }

  void dfs(const BigInt& value) {
    std::size_t depth = prefix.size();
    if (depth >= min_factors) emit_multipliers(value);
    std::uint64_t first = prefix.empty() ? coprime_prefix + 1 : prefix.back() + 1;
    std::uint32_t need = min_factors > depth + 1 ? min_factors - static_cast<std::uint32_t>(depth) - 1 : 0;
    for (std::uint64_t j = first;; ++j) {
      if (j > table.count()) {
        // cannot test further primes: prove that none could fit under the bound
        BigInt floor_power(static_cast<unsigned long>(table.nth(table.count())));
        BigInt min_continuation = value;
        for (std::uint32_t k = 0; k <= need; ++k) min_continuation *= floor_power;
        if (min_continuation >= bound) break;
        throw table_exhausted_error(
            "prime table exhausted before the enumeration bound was proven");
      }
      BigInt with_j = value * static_cast<unsigned long>(table.nth(j));
      BigInt completed = need == 0 ? with_j : with_j * products.range(j, j + need);
      if (completed >= bound) break;  // larger j only grows the product
      prefix.push_back(static_cast<std::uint32_t>(j));
      dfs(with_j);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<CandidateValue> enumerate_candidates(std::uint32_t coprime_prefix,
                                                 std::uint32_t min_factors,
                                                 const BigInt& bound,
                                                 const PrimeTable& table) {
  if (min_factors < 1) throw std::invalid_argument("enumeration needs min_factors >= 1");
  if (bound < 1) throw std::invalid_argument("enumeration needs a positive bound");
  if (coprime_prefix > table.count())
    throw std::out_of_range("coprime prefix exceeds table size");
  std::vector<CandidateValue> out;
  EnumerationState state{table, coprime_prefix, min_factors, bound,
                         ConsecutiveProducts(table, coprime_prefix),
                         {},   out};
  state.dfs(BigInt(1));
  std::sort(out.begin(), out.end(),
            [](const CandidateValue& a, const CandidateValue& b) { return a.value < b.value; });
  return out;
}

namespace {

struct TupleNode {
  BigInt value;
  std::vector<std::uint32_t> indices;
};

struct TupleNodeGreater {
  bool operator()(const TupleNode& a, const TupleNode& b) const { return a.value > b.value; }
};

bool ratio_below(const std::vector<std::uint32_t>& indices, const PrimeTable& table,
                 const ExactRatio& threshold, const BigInt& value) {
  std::vector<std::uint64_t> minus_one;
  minus_one.reserve(indices.size());
  for (std::uint32_t idx : indices) minus_one.push_back(table.nth(idx) - 1);
  BigInt phi = product_tree(minus_one);
  return phi * threshold.denominator() < threshold.numerator() * value;
}

// Smallest tuple of exactly t indices (all > r) that satisfies both the
// residue and the ratio condition, visited in increasing product order.
TupleNode best_first_seed(const SearchProblem& problem, std::uint64_t t,
                          const PrimeTable& table, const SearchOptions& options) {
  if (problem.coprime_prefix + t > table.count())
    throw table_exhausted_error("prime table too small for the initial kernel");
  TupleNode base;
  base.indices.resize(t);
  for (std::uint64_t k = 0; k < t; ++k)
    base.indices[k] = static_cast<std::uint32_t>(problem.coprime_prefix + 1 + k);
  {
    std::vector<std::uint64_t> primes;
    primes.reserve(t);
    for (std::uint32_t idx : base.indices) primes.push_back(table.nth(idx));
    base.value = product_tree(primes);
  }

  std::priority_queue<TupleNode, std::vector<TupleNode>, TupleNodeGreater> queue;
  std::set<std::vector<std::uint32_t>> pushed;
  pushed.insert(base.indices);
  queue.push(std::move(base));

  std::uint64_t pops = 0;
  while (!queue.empty()) {
    TupleNode node = queue.top();
    queue.pop();
    if (++pops > options.best_first_budget)
      throw search_budget_exceeded_error(
          "no feasible value found within the best-first budget of " +
          std::to_string(options.best_first_budget) + " tuples");

    BigInt mod = node.value % problem.modulus;
    if (mod == problem.residue &&
        ratio_below(node.indices, table, problem.threshold, node.value))
      return node;

    // neighbors: bump one index to its successor where no collision occurs
    for (std::size_t pos = 0; pos < node.indices.size(); ++pos) {
      std::uint32_t next_idx = node.indices[pos] + 1;
      if (pos + 1 < node.indices.size() && next_idx == node.indices[pos + 1]) continue;
      if (next_idx > table.count()) continue;
      TupleNode neigh;
      neigh.indices = node.indices;
      neigh.indices[pos] = next_idx;
      if (!pushed.insert(neigh.indices).second) continue;
      neigh.value = node.value / table.nth(node.indices[pos]);
      neigh.value *= static_cast<unsigned long>(table.nth(next_idx));
      queue.push(std::move(neigh));
    }
  }
  throw table_exhausted_error("prime table exhausted before a feasible value was found");
}

}  // namespace

SearchResult find_smallest_z(const SearchProblem& problem, const PrimeTable& table,
                             const SearchOptions& options) {
  CoprimalityContext ctx{problem.coprime_prefix, &table};
  std::uint64_t t = min_distinct_factors_for_ratio(ctx, problem.threshold);

  TupleNode seed = best_first_seed(problem, t, table, options);

  SearchResult result;
  result.z = seed.value;
  result.prime_indices = seed.indices;
  result.multiplier = 1;
  result.min_factor_count = t;

  // exhaustive sweep below the seed: everything feasible must appear here
  std::vector<CandidateValue> candidates =
      enumerate_candidates(problem.coprime_prefix, static_cast<std::uint32_t>(t), seed.value, table);

  std::vector<RejectedCandidate> rejected;
  rejected.reserve(candidates.size());
  for (CandidateValue& cand : candidates) {
    BigInt mod = cand.value % problem.modulus;
    if (mod != problem.residue) {
      rejected.push_back({std::move(cand), std::move(mod), RejectionReason::wrong_residue});
      continue;
    }
    // the ratio depends only on the distinct primes, so test the kernel
    std::vector<std::uint64_t> kernel_primes;
    kernel_primes.reserve(cand.kernel_indices.size());
    for (std::uint32_t idx : cand.kernel_indices) kernel_primes.push_back(table.nth(idx));
    BigInt kernel_value = product_tree(kernel_primes);
    if (!ratio_below(cand.kernel_indices, table, problem.threshold, kernel_value)) {
      rejected.push_back({std::move(cand), std::move(mod), RejectionReason::ratio_not_below});
      continue;
    }
    // feasible and strictly below the current best: candidates arrive sorted
    result.z = cand.value;
    result.prime_indices = cand.kernel_indices;
    result.multiplier = cand.multiplier;
    break;
  }

  for (RejectedCandidate& r : rejected)
    if (r.candidate.value < result.z) result.ledger.push_back(std::move(r));

  return result;
}

void write_ledger_json(const SearchResult& result, std::ostream& os) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const RejectedCandidate& r : result.ledger) {
    nlohmann::ordered_json row;
    row["indices"] = r.candidate.kernel_indices;
    row["multiplier"] = r.candidate.multiplier.get_str();
    row["value_digits"] = r.candidate.value.get_str();
    row["value_mod_M"] = r.value_mod.get_str();
    row["reason"] = r.reason == RejectionReason::wrong_residue ? "residue" : "ratio";
    rows.push_back(std::move(row));
  }
  os << rows.dump() << "\n";
}

}  // namespace totient_gap

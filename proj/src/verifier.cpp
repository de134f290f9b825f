#include "totient_gap/verifier.hpp"

#include "totient_gap/minimal_search.hpp"

#include <algorithm>
#include <map>

namespace totient_gap {

FactorizationSketch extract_known_factors(const BigInt& n, const PrimeTable& table,
                                          std::uint32_t depth, std::uint32_t block) {
  if (n < 1) throw std::invalid_argument("extraction needs n >= 1");
  if (block < 1) throw std::invalid_argument("extraction needs block >= 1");
  if (depth > table.count())
    throw std::out_of_range("coprime depth exceeds the prime table");

  FactorizationSketch sketch;
  sketch.value = n;
  sketch.cofactor = n;
  sketch.coprime_depth = depth;

  BigInt g;
  for (std::uint64_t lo = 1; lo <= depth; lo += block) {
    std::uint64_t hi = std::min<std::uint64_t>(lo + block - 1, depth);
    BigInt block_product = table.primorial_range(lo, hi);
    mpz_gcd(g.get_mpz_t(), sketch.cofactor.get_mpz_t(), block_product.get_mpz_t());
    if (g == 1) continue;
    for (std::uint64_t i = lo; i <= hi; ++i) {
      std::uint64_t p = table.nth(i);
      if (!mpz_divisible_ui_p(g.get_mpz_t(), p)) continue;
      std::uint32_t e = 0;
      while (mpz_divisible_ui_p(sketch.cofactor.get_mpz_t(), p)) {
        mpz_divexact_ui(sketch.cofactor.get_mpz_t(), sketch.cofactor.get_mpz_t(), p);
        ++e;
      }
      sketch.known_factors.push_back({p, e});
    }
  }

  // final pass: the cofactor must be coprime to every block
  for (std::uint64_t lo = 1; lo <= depth; lo += block) {
    std::uint64_t hi = std::min<std::uint64_t>(lo + block - 1, depth);
    BigInt block_product = table.primorial_range(lo, hi);
    mpz_gcd(g.get_mpz_t(), sketch.cofactor.get_mpz_t(), block_product.get_mpz_t());
    if (g != 1)
      throw std::logic_error("extraction left a cofactor sharing a factor with block " +
                             std::to_string(lo));
  }
  return sketch;
}

std::pair<BigInt, BigInt> phi_exact(std::span<const std::uint32_t> prime_indices,
                                    const PrimeTable& table) {
  std::vector<std::uint32_t> sorted(prime_indices.begin(), prime_indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("phi_exact: duplicate prime index");
  std::vector<std::uint64_t> primes, minus_one;
  primes.reserve(sorted.size());
  minus_one.reserve(sorted.size());
  for (std::uint32_t idx : sorted) {
    std::uint64_t p = table.nth(idx);
    primes.push_back(p);
    minus_one.push_back(p - 1);
  }
  return {product_tree(primes), product_tree(minus_one)};
}

std::pair<BigInt, BigInt> phi_exact(std::span<const PrimePower> factors) {
  BigInt value(1), phi(1);
  std::uint64_t previous = 0;
  for (const PrimePower& pp : factors) {
    if (pp.prime <= previous)
      throw std::invalid_argument("phi_exact: factors must be sorted and distinct");
    if (pp.exponent < 1) throw std::invalid_argument("phi_exact: zero exponent");
    previous = pp.prime;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), pp.prime, pp.exponent - 1);
    value *= power * static_cast<unsigned long>(pp.prime);
    phi *= power * static_cast<unsigned long>(pp.prime - 1);
  }
  return {value, phi};
}

namespace {

void validate_sketch(const FactorizationSketch& sketch) {
  auto [known_value, known_phi] = phi_exact(std::span<const PrimePower>(sketch.known_factors));
  (void)known_phi;
  if (known_value * sketch.cofactor != sketch.value)
    throw std::invalid_argument("sketch invariant broken: value != cofactor * known part");
}

ExactRatio known_part_ratio(const FactorizationSketch& sketch) {
  std::vector<std::uint64_t> primes;
  primes.reserve(sketch.known_factors.size());
  for (const PrimePower& pp : sketch.known_factors) primes.push_back(pp.prime);
  return ExactRatio::phi_ratio_from_primes(primes);
}

}  // namespace

PhiLowerBound lower_bound_phi_over_m(const FactorizationSketch& sketch,
                                     const PrimeTable& table) {
  return lower_bound_phi_over_m(sketch, table, sketch.cofactor);
}

PhiLowerBound lower_bound_phi_over_m(const FactorizationSketch& sketch, const PrimeTable& table,
                                     const BigInt& cofactor_size_witness) {
  validate_sketch(sketch);
  if (cofactor_size_witness < sketch.cofactor)
    throw std::invalid_argument("size witness smaller than the cofactor");
  CoprimalityContext ctx{sketch.coprime_depth, &table};
  // a trivial cofactor needs no tail bound at all
  std::uint64_t s = sketch.cofactor == 1 ? 0 : max_distinct_factors(ctx, cofactor_size_witness);
  ExactRatio bound = known_part_ratio(sketch) * phi_ratio_lower_bound(ctx, s);
  return PhiLowerBound{std::move(bound), s};
}

VerifyOutcome verify_inequality(std::span<const std::uint32_t> z_prime_indices,
                                const BigInt& modulus, const BigInt& residue,
                                const PrimeTable& table, std::uint32_t coprime_depth,
                                std::uint32_t block) {
  if (z_prime_indices.empty()) throw std::invalid_argument("verify: empty index list");
  if (!std::is_sorted(z_prime_indices.begin(), z_prime_indices.end()))
    throw std::invalid_argument("verify: indices must be sorted");
  std::uint32_t r = modulus_prime_prefix(modulus, table);
  if (z_prime_indices.front() <= r)
    throw std::invalid_argument("verify: z shares a prime with the modulus");

  auto [z, phi_z] = phi_exact(z_prime_indices, table);
  if (z % modulus != residue)
    throw std::invalid_argument("verify: z is not congruent to the residue");
  BigInt n = z - residue;
  mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  if (n == 0) throw std::invalid_argument("verify: z below the modulus leaves nothing to compare");

  VerifyOutcome out;
  out.n = n;
  out.n_sketch = extract_known_factors(n, table, coprime_depth, block);

  // sketch of M*n: fold the modulus factorization into the known part
  FactorizationSketch mn;
  mn.value = modulus * n;
  mn.cofactor = out.n_sketch.cofactor;
  mn.coprime_depth = coprime_depth;
  {
    std::map<std::uint64_t, std::uint32_t> merged;
    for (const PrimePower& pp : out.n_sketch.known_factors) merged[pp.prime] += pp.exponent;
    BigInt rem = modulus;
    for (std::uint32_t i = 1; i <= r; ++i) {
      std::uint64_t p = table.nth(i);
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++merged[p];
      }
    }
    for (auto& [p, e] : merged) mn.known_factors.push_back({p, e});
  }

  // the full value dominates the cofactor, so Claim 1 applies with its s;
  // this matches bounds stated through "q exceeds the whole number"
  PhiLowerBound bound = lower_bound_phi_over_m(mn, table, mn.value);

  out.cofactor_factor_bound = bound.cofactor_factor_bound;
  out.z_phi_ratio = ExactRatio(phi_z, z);
  out.mn_phi_lower_bound = bound.ratio;
  out.inequality_lhs = phi_z * bound.ratio.denominator();
  out.inequality_rhs = bound.ratio.numerator() * mn.value;

  bool strict = out.inequality_lhs < out.inequality_rhs;
  bool exact = mn.cofactor == 1;  // then the bound is phi(Mn)/Mn itself
  out.status = strict ? VerifyStatus::proven
                      : (exact ? VerifyStatus::disproven : VerifyStatus::inconclusive);

  if (out.status == VerifyStatus::proven) {
    Certificate cert;
    cert.modulus = modulus;
    cert.residue = residue;
    cert.z_prime_indices.assign(z_prime_indices.begin(), z_prime_indices.end());
    cert.n = n;
    cert.n_known_factors = out.n_sketch.known_factors;
    cert.cofactor_digit_count = digit_count(out.n_sketch.cofactor);
    cert.coprime_depth = coprime_depth;
    cert.cofactor_factor_bound = bound.cofactor_factor_bound;
    cert.z_phi_ratio = out.z_phi_ratio;
    cert.mn_phi_lower_bound = out.mn_phi_lower_bound;
    cert.inequality_lhs = out.inequality_lhs;
    cert.inequality_rhs = out.inequality_rhs;
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace totient_gap

#include "totient_gap/exact_ratio.hpp"

#include "totient_gap/prime_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace totient_gap {

ExactRatio::ExactRatio(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("ratio: zero denominator");
  if (den_ < 0) throw std::invalid_argument("ratio: negative denominator");
  if (num_ < 0) throw std::invalid_argument("ratio: negative numerator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

ExactRatio ExactRatio::phi_ratio_from_primes(std::span<const std::uint64_t> distinct_primes) {
  std::vector<std::uint64_t> sorted(distinct_primes.begin(), distinct_primes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("phi ratio: duplicate prime " + std::to_string(sorted[i]));
    if (!is_prime_u64(sorted[i]))
      throw std::invalid_argument("phi ratio: not a prime: " + std::to_string(sorted[i]));
  }
  std::vector<std::uint64_t> minus_one(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) minus_one[i] = sorted[i] - 1;
  // tree products, one reduction at the end
  return ExactRatio(product_tree(minus_one), product_tree(sorted));
}

ExactRatio ExactRatio::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRatio(parse_big_int(text), 1);
  return ExactRatio(parse_big_int(text.substr(0, slash)), parse_big_int(text.substr(slash + 1)));
}

ExactRatio ExactRatio::operator*(const ExactRatio& other) const {
  return ExactRatio(num_ * other.num_, den_ * other.den_);
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactRatio& a, const ExactRatio& b) { return a <=> b; }

std::string ExactRatio::to_decimal_truncated(unsigned digits) const {
  if (digits < 1) throw std::invalid_argument("decimal rendering needs digits >= 1");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = num_ * scale;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
  BigInt integer_part = q / scale;
  BigInt fraction = q % scale;
  std::string frac = fraction.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return integer_part.get_str() + "." + frac;
}

std::string ExactRatio::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

}  // namespace totient_gap

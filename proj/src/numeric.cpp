#include "totient_gap/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace totient_gap {

std::size_t digit_count(const BigInt& value) {
  BigInt v = abs(value);
  if (v == 0) return 1;
  // sizeinbase is exact or one too large for base 10
  std::size_t n = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (n == 1) return 1;
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
  return v < p ? n - 1 : n;
}

BigInt parse_big_int(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return v;
}

std::string group_digits(std::string_view digits) {
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  std::size_t lead = digits.size() % 3;
  if (lead == 0 && !digits.empty()) lead = 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i == lead || (i > lead && (i - lead) % 3 == 0)) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string abbreviate_value(const BigInt& value, std::size_t edge_digits) {
  std::string digits = value.get_str();
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  if (digits.size() <= 2 * edge_digits + 6) return sign + group_digits(digits);
  std::string grouped = group_digits(digits);
  // slice head/tail so comma positions match the full rendering
  std::size_t taken = 0, i = 0;
  for (; i < grouped.size() && taken < edge_digits; ++i)
    if (grouped[i] != ',') ++taken;
  std::string head = grouped.substr(0, i);
  taken = 0;
  std::size_t j = grouped.size();
  for (; j > 0 && taken < edge_digits; --j)
    if (grouped[j - 1] != ',') ++taken;
  std::string tail = grouped.substr(j);
  return sign + std::to_string(digits.size()) + " digits: " + head + "..." + tail;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Sinclair's bases: deterministic for all 64-bit integers
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace totient_gap

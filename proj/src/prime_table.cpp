#include "totient_gap/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace totient_gap {

BigInt product_tree(std::span<const std::uint64_t> values) {
  if (values.empty()) return BigInt(1);
  std::vector<BigInt> level;
  level.reserve(values.size() / 2 + 1);
  std::size_t i = 0;
  for (; i + 1 < values.size(); i += 2) {
    BigInt v(static_cast<unsigned long>(values[i]));
    v *= static_cast<unsigned long>(values[i + 1]);
    level.push_back(std::move(v));
  }
  if (i < values.size()) level.emplace_back(static_cast<unsigned long>(values[i]));
  while (level.size() > 1) {
    std::vector<BigInt> next;
    next.reserve(level.size() / 2 + 1);
    std::size_t j = 0;
    for (; j + 1 < level.size(); j += 2) next.push_back(level[j] * level[j + 1]);
    if (j < level.size()) next.push_back(std::move(level[j]));
    level = std::move(next);
  }
  return std::move(level.front());
}

namespace {

// Odd-only segmented sieve; appends primes <= limit until `want` collected.
void sieve_primes(std::uint64_t limit, std::size_t segment_odds, std::uint64_t want,
                  std::vector<std::uint64_t>& out) {
  if (limit >= 2) out.push_back(2);
  if (out.size() >= want || limit < 3) return;

  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  while (root * root > limit) --root;

  // base primes up to sqrt(limit), simple sieve
  std::vector<char> base(root + 1, 1);
  for (std::uint64_t i = 2; i * i <= root; ++i)
    if (base[i])
      for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  std::vector<std::uint64_t> small_primes;
  for (std::uint64_t i = 3; i <= root; i += 2)
    if (base[i]) small_primes.push_back(i);

  std::vector<char> sieve(segment_odds);
  for (std::uint64_t low = 3; low <= limit; low += 2 * segment_odds) {
    std::uint64_t high = std::min(low + 2 * segment_odds - 2, limit);
    std::size_t len = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill(sieve.begin(), sieve.begin() + len, 1);
    for (std::uint64_t p : small_primes) {
      if (p * p > high) break;
      std::uint64_t first = std::max(p * p, ((low + p - 1) / p) * p);
      if ((first & 1) == 0) first += p;
      for (std::uint64_t v = first; v <= high; v += 2 * p) sieve[(v - low) / 2] = 0;
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (sieve[k]) {
        out.push_back(low + 2 * k);
        if (out.size() >= want) return;
      }
    }
  }
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t count, std::size_t segment_odds) {
  if (count < 1) throw std::invalid_argument("prime table: count must be >= 1");
  if (count > kMaxCount)
    throw std::length_error("prime table: count above hard cap of 10^9");
  if (segment_odds < 64) segment_odds = 64;

  std::uint64_t limit = 16;
  if (count >= 6) {
    // Rosser: p_n < n (ln n + ln ln n) for n >= 6
    double n = static_cast<double>(count);
    limit = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  }

  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (;;) {
    primes.clear();
    sieve_primes(limit, segment_odds, count, primes);
    if (primes.size() >= count) break;
    limit += limit / 2 + 64;
  }
  primes.resize(count);
  return PrimeTable(std::move(primes));
}

std::uint64_t PrimeTable::nth(std::uint64_t i) const {
  if (i < 1 || i > primes_.size())
    throw std::out_of_range("prime index " + std::to_string(i) + " outside table of " +
                            std::to_string(primes_.size()));
  return primes_[i - 1];
}

BigInt PrimeTable::primorial_range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo < 1 || lo > hi || hi > primes_.size())
    throw std::out_of_range("primorial range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] outside table of " +
                            std::to_string(primes_.size()));
  return product_tree(std::span<const std::uint64_t>(primes_).subspan(lo - 1, hi - lo + 1));
}

namespace {

constexpr char kCacheMagic[5] = {'P', 'T', 'B', 'L', '1'};

void put_u64le(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw std::runtime_error("prime cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

void PrimeTable::save_cache(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("prime cache: cannot open for writing: " + path.string());
  os.write(kCacheMagic, sizeof(kCacheMagic));
  put_u64le(os, primes_.size());
  std::uint64_t checksum = 0;
  for (std::uint64_t p : primes_) {
    put_u64le(os, p);
    checksum += p;
  }
  put_u64le(os, checksum);
  if (!os) throw std::runtime_error("prime cache: write failed: " + path.string());
}

PrimeTable PrimeTable::load_cache(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("prime cache: cannot open: " + path.string());
  char magic[sizeof(kCacheMagic)];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kCacheMagic, sizeof(magic)) != 0)
    throw std::runtime_error("prime cache: bad magic: " + path.string());
  std::uint64_t count = get_u64le(is);
  if (count < 1 || count > kMaxCount)
    throw std::runtime_error("prime cache: implausible count: " + path.string());
  std::vector<std::uint64_t> primes(count);
  std::uint64_t checksum = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    primes[i] = get_u64le(is);
    checksum += primes[i];
  }
  if (get_u64le(is) != checksum)
    throw std::runtime_error("prime cache: checksum mismatch: " + path.string());
  if (primes[0] != 2 || !std::is_sorted(primes.begin(), primes.end()))
    throw std::runtime_error("prime cache: contents not a prime table: " + path.string());
  return PrimeTable(std::move(primes));
}

PrimeTable PrimeTable::load_or_build(std::uint64_t count,
                                     const std::optional<std::filesystem::path>& cache) {
  if (cache && std::filesystem::exists(*cache)) {
    try {
      PrimeTable loaded = load_cache(*cache);
      if (loaded.count() >= count) {
        loaded.primes_.resize(count);
        return loaded;
      }
    } catch (const std::runtime_error&) {
      // unusable cache: fall through and rebuild
    }
  }
  PrimeTable built = build(count);
  if (cache) built.save_cache(*cache);
  return built;
}

}  // namespace totient_gap

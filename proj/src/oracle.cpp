#include "totient_gap/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace totient_gap::oracle {

SmallFactorization factorize_naive(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("factorize_naive: m must be >= 1");
  SmallFactorization out;
  out.value = m;
  auto strip = [&](std::uint64_t p) {
    if (m % p != 0) return;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= m / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (m > 1) out.factors.push_back({m, 1});
  return out;
}

std::uint64_t phi_naive(std::uint64_t m) {
  SmallFactorization f = factorize_naive(m);
  std::uint64_t phi = 1;
  for (const PrimePower& pp : f.factors) {
    std::uint64_t part = pp.prime - 1;
    for (std::uint32_t e = 1; e < pp.exponent; ++e) part *= pp.prime;
    phi *= part;
  }
  return phi;
}

std::uint32_t omega_naive(std::uint64_t m) {
  return static_cast<std::uint32_t>(factorize_naive(m).factors.size());
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended euclid; p prime, a not divisible by p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> is(limit + 1, 1);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!is[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) is[j] = 0;
  }
  return primes;
}

}  // namespace

PhiProgression::PhiProgression(std::uint64_t start, std::uint64_t step,
                               std::uint64_t max_value, std::size_t segment)
    : start_(start), step_(step), max_value_(max_value), segment_(segment) {
  if (start_ < 1 || step_ < 1) throw std::invalid_argument("progression needs start, step >= 1");
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(max_value_))) + 2;
  small_primes_ = primes_up_to(root);
  rem_.resize(segment_);
  phi_.resize(segment_);
  next_value_ = start_;
}

void PhiProgression::fill_segment() {
  std::uint64_t lo = next_value_;
  std::size_t count = 0;
  while (count < segment_ && lo + static_cast<std::uint64_t>(count) * step_ <= max_value_)
    ++count;
  filled_ = count;
  cursor_ = 0;
  if (count == 0) return;
  std::uint64_t hi = lo + (count - 1) * step_;
  for (std::size_t j = 0; j < count; ++j) {
    rem_[j] = lo + j * step_;
    phi_[j] = 1;
  }
  auto strip_at = [&](std::size_t j, std::uint64_t p) {
    std::uint64_t part = p - 1;
    rem_[j] /= p;
    while (rem_[j] % p == 0) {
      rem_[j] /= p;
      part *= p;
    }
    phi_[j] *= part;
  };
  for (std::uint64_t p : small_primes_) {
    if (p * p > hi) break;
    if (step_ % p == 0) {
      if (lo % p == 0)
        for (std::size_t j = 0; j < count; ++j) strip_at(j, p);
      continue;
    }
    // first j with lo + j*step divisible by p
    std::uint64_t inv = inverse_mod(step_ % p, p);
    std::uint64_t j0 = ((p - lo % p) % p) * inv % p;
    for (std::uint64_t j = j0; j < count; j += p) strip_at(static_cast<std::size_t>(j), p);
  }
  for (std::size_t j = 0; j < count; ++j)
    if (rem_[j] > 1) phi_[j] *= rem_[j] - 1;  // single prime above the root
}

std::optional<PhiProgression::Entry> PhiProgression::next() {
  if (cursor_ >= filled_) {
    if (next_value_ > max_value_) return std::nullopt;
    fill_segment();
    if (filled_ == 0) return std::nullopt;
    next_value_ += static_cast<std::uint64_t>(filled_) * step_;
  }
  std::size_t j = cursor_++;
  std::uint64_t v = next_value_ - static_cast<std::uint64_t>(filled_ - j) * step_;
  return Entry{v, phi_[j]};
}

std::optional<std::uint64_t> smallest_z_scan(std::uint64_t modulus, std::uint64_t residue,
                                             const ExactRatio& threshold, std::uint64_t limit) {
  if (modulus < 1 || residue >= modulus)
    throw std::invalid_argument("smallest_z_scan: need 0 <= residue < modulus");
  if (!threshold.numerator().fits_ulong_p() || !threshold.denominator().fits_ulong_p())
    throw std::invalid_argument("smallest_z_scan: threshold too large for the scan range");
  std::uint64_t tn = threshold.numerator().get_ui();
  std::uint64_t td = threshold.denominator().get_ui();
  std::uint64_t start = residue == 0 ? modulus : residue;
  if (start > limit) return std::nullopt;
  PhiProgression prog(start, modulus, limit);
  while (auto e = prog.next()) {
    // phi(z)/z < tn/td, exactly
    unsigned __int128 lhs = static_cast<unsigned __int128>(e->phi) * td;
    unsigned __int128 rhs = static_cast<unsigned __int128>(tn) * e->value;
    if (lhs < rhs) return e->value;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> scan_inequality(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                             std::uint64_t d, std::uint64_t limit) {
  if (a + b < 1 || c + d < 1)
    throw std::invalid_argument("scan_inequality: both sides must stay positive");
  if (limit < 1) return std::nullopt;
  if (a == 0 && c == 0)
    return phi_naive(b) < phi_naive(d) ? std::optional<std::uint64_t>(1) : std::nullopt;
  if (a == 0) {
    std::uint64_t lhs = phi_naive(b);
    PhiProgression right(c + d, c, c * limit + d);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      auto e = right.next();
      if (!e) break;
      if (lhs < e->phi) return n;
    }
    return std::nullopt;
  }
  if (c == 0) {
    std::uint64_t rhs = phi_naive(d);
    PhiProgression left(a + b, a, a * limit + b);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      auto e = left.next();
      if (!e) break;
      if (e->phi < rhs) return n;
    }
    return std::nullopt;
  }
  PhiProgression left(a + b, a, a * limit + b);
  PhiProgression right(c + d, c, c * limit + d);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    auto le = left.next();
    auto re = right.next();
    if (!le || !re) break;
    if (le->phi < re->phi) return n;
  }
  return std::nullopt;
}

}  // namespace totient_gap::oracle

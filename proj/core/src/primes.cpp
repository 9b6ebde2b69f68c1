#include "narrow2/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "narrow2/errors.hpp"
#include "narrow2/modarith.hpp"

namespace narrow2 {

using detail::mulmod;
using detail::powmod;

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c) {
  if (n % 2 == 0) return 2;
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min(m, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    const std::uint64_t d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmallPrimes) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  const auto f = factorize(n);
  return std::adjacent_find(f.begin(), f.end()) == f.end();
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeP1Mod4::PrimeP1Mod4(std::uint64_t value) : value_(value) {
  if (value % 4 != 1 || !is_prime(value)) {
    throw ArgumentError(std::to_string(value) + " is not a prime congruent to 1 mod 4");
  }
}

PrimeStream::PrimeStream(std::uint64_t limit, std::uint64_t segment)
    : limit_(limit), segment_(std::max<std::uint64_t>(segment, 1024)) {
  const std::uint64_t root = isqrt(limit);
  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (composite[i]) continue;
    base_primes_.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) composite[j] = true;
  }
}

void PrimeStream::sieve_next_segment() {
  pending_.clear();
  cursor_ = 0;
  if (low_ > limit_) return;
  const std::uint64_t high = std::min(limit_, low_ + segment_ - 1);
  std::vector<bool> composite(high - low_ + 1, false);
  for (std::uint64_t p : base_primes_) {
    if (p * p > high) break;
    std::uint64_t start = std::max(p * p, (low_ + p - 1) / p * p);
    for (std::uint64_t j = start; j <= high; j += p) composite[j - low_] = true;
  }
  for (std::uint64_t v = low_; v <= high; ++v) {
    if (v >= 5 && v % 4 == 1 && !composite[v - low_]) pending_.push_back(v);
  }
  low_ = high + 1;
}

std::optional<PrimeP1Mod4> PrimeStream::next() {
  while (cursor_ >= pending_.size()) {
    if (low_ > limit_) return std::nullopt;
    sieve_next_segment();
  }
  return PrimeP1Mod4::trusted(pending_[cursor_++]);
}

bool PrimeStream::next_batch(std::size_t count, std::vector<PrimeP1Mod4>& out) {
  bool appended = false;
  for (std::size_t i = 0; i < count; ++i) {
    auto p = next();
    if (!p) break;
    out.push_back(*p);
    appended = true;
  }
  return appended;
}

}  // namespace narrow2

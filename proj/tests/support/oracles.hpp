#pragma once

// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

// SplitMix64; fixed seeds keep every property test reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::uint64_t state_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::uint64_t> primes_1mod4(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (p % 4 == 1 && is_prime(p)) out.push_back(p);
  }
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = mulmod(b, b, m)) {
    if (e & 1) r = mulmod(r, b, m);
  }
  return r;
}

// Euler's criterion, returning -1, 0 or 1.
inline int euler(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Residue symbol by listing the squares; only for small p.
inline int squares_symbol(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

inline std::optional<std::uint64_t> smallest_sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (mulmod(x, x, p) == a) return x;
  }
  return std::nullopt;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 31; bit; bit >>= 1) {
    const std::uint64_t t = r | bit;
    if (t * t <= n) r = t;
  }
  return r;
}

inline bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

inline bool squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

// All cross Legendre symbols between the prime factors of distinct entries are +1.
inline bool consistent(const std::vector<std::uint64_t>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (i == j) continue;
      for (std::uint64_t p : prime_divisors(entries[i])) {
        if (euler(entries[j], p) != 1) return false;
      }
    }
  }
  return true;
}

struct Triple {
  std::uint64_t x, y, z;
};

// Normalized solutions of x^2 = a y^2 + b z^2 (primitive, z odd) found by
// scanning z odd, then y, in a small box.
inline std::vector<Triple> ternary_solutions(std::uint64_t a, std::uint64_t b, std::uint64_t box,
                                             std::size_t want) {
  std::vector<Triple> out;
  for (std::uint64_t z = 1; z <= box && out.size() < want; z += 2) {
    for (std::uint64_t y = 0; y <= box && out.size() < want; ++y) {
      const std::uint64_t rhs = a * y * y + b * z * z;
      if (!is_square(rhs)) continue;
      const std::uint64_t x = isqrt(rhs);
      if (std::gcd(std::gcd(x, y), z) != 1) continue;
      out.push_back({x, y, z});
    }
  }
  return out;
}

// Number of roots mod p of X^4 - 2x X^2 + b z^2.
inline int quartic_roots(std::uint64_t x, std::uint64_t b, std::uint64_t z, std::uint64_t p) {
  const std::uint64_t c2 = (p - mulmod(2, x % p, p)) % p;
  const std::uint64_t c0 = mulmod(b % p, mulmod(z % p, z % p, p), p);
  int roots = 0;
  for (std::uint64_t t = 0; t < p; ++t) {
    const std::uint64_t t2 = mulmod(t, t, p);
    if ((mulmod(t2, t2, p) + mulmod(c2, t2, p) + c0) % p == 0) ++roots;
  }
  return roots;
}

// Frobenius bit at p of the degree 2 extension of Q(sqrt a, sqrt b) cut out
// by sqrt(x + y sqrt a): the quartic splits completely (bit 0) or has no root
// (bit 1). Returns -1 when p divides y z and the count is uninformative.
inline int root_count_bit(const Triple& s, std::uint64_t b, std::uint64_t p) {
  if (s.y % p == 0 || s.z % p == 0) return -1;
  const int roots = quartic_roots(s.x, b, s.z, p);
  if (roots == 4) return 0;
  if (roots == 0) return 1;
  return -2;
}

}  // namespace oracle

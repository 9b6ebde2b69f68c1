#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace narrow2 {

using Integer = mpz_class;

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Deterministic below 2^64; above that, 64 rounds of strong-probable-prime
// testing (error below 2^-128).
bool is_prime(const Integer& n);

// Prime factors of n in ascending order, with multiplicity. n = 0 and n = 1
// give an empty list. Trial division followed by Pollard-Brent.
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

// A prime p with p = 1 (mod 4). Construction validates both properties.
class PrimeP1Mod4 {
 public:
  explicit PrimeP1Mod4(std::uint64_t value);

  // Skips validation; for values that came out of a sieve.
  static PrimeP1Mod4 trusted(std::uint64_t value) { return PrimeP1Mod4(value, Trusted{}); }

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  friend auto operator<=>(const PrimeP1Mod4&, const PrimeP1Mod4&) = default;

 private:
  struct Trusted {};
  PrimeP1Mod4(std::uint64_t value, Trusted) : value_(value) {}
  std::uint64_t value_;
};

// Yields primes p = 1 (mod 4) in increasing order up to an inclusive limit,
// sieving one segment at a time so that early termination stays cheap.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t limit, std::uint64_t segment = 1u << 18);

  std::optional<PrimeP1Mod4> next();

  // Fills `out` with up to `count` further primes; returns false once the
  // limit is reached and nothing was appended.
  bool next_batch(std::size_t count, std::vector<PrimeP1Mod4>& out);

 private:
  void sieve_next_segment();

  std::uint64_t limit_;
  std::uint64_t segment_;
  std::uint64_t low_ = 0;  // start of the next unsieved segment
  std::vector<std::uint64_t> base_primes_;
  std::vector<std::uint64_t> pending_;
  std::size_t cursor_ = 0;
};

}  // namespace narrow2

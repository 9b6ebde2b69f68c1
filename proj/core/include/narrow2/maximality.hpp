#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "narrow2/redei.hpp"

namespace narrow2 {

// Squarefree, pairwise coprime entries >= 2 whose primes are all 1 mod 4.
struct AcceptableVector {
  std::vector<std::uint64_t> entries;
  std::vector<std::vector<std::uint64_t>> factors;  // ascending, per entry

  std::size_t size() const { return entries.size(); }
  std::uint64_t omega_total() const;
};

// Throws AcceptabilityError naming the first offending entry.
AcceptableVector parse_acceptable(const std::vector<std::uint64_t>& entries);

// omega * 2^(n-1) - 2^n + 1.
std::int64_t torsion_bound(const AcceptableVector& v);

// torsion_bound(v) + 2^n * omega(c). Throws ArgumentError when c is not
// squarefree with primes = 1 (mod 4) or shares a prime with v.
std::int64_t ray_class_bound(const AcceptableVector& v, std::uint64_t c);

struct LegendreWitness {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t i = 0;  // entry holding p
  std::size_t j = 0;  // entry holding q
};

struct ConsistencyResult {
  bool consistent = true;
  std::vector<LegendreWitness> failures;
};

ConsistencyResult is_strongly_quadratically_consistent(const AcceptableVector& v);

struct Condition {
  enum class Kind { legendre, redei };
  Kind kind = Kind::legendre;
  std::vector<std::uint64_t> args;
  int value = 0;  // Legendre symbol in {-1, 1}, or Redei symbol in {0, 1}
  bool passed = false;
};

std::string kind_name(Condition::Kind kind);

struct MaximalityReport {
  bool verdict = false;
  std::size_t n = 0;
  std::uint64_t omega_total = 0;
  std::int64_t bound = 0;
  std::vector<Condition> transcript;
  std::vector<Condition> failed_conditions;
};

struct MaximalityOptions {
  // Evaluate [a_i, p, r] as a sum over the primes of a_i (true) or directly
  // from the context of the composite a_i (false).
  bool prime_by_prime = true;
};

// n = 1: always maximal. n = 2: strong quadratic consistency. n = 3:
// consistency and [a_i, p, r] = 0 for every ordering (i, j, k) of the entries
// and primes p | a_j, r | a_k. Throws UnsupportedDimensionError for n >= 4
// and ArgumentError for n = 0.
MaximalityReport is_maximal(const AcceptableVector& v, RedeiCache* cache = nullptr,
                            const MaximalityOptions& options = {});

}  // namespace narrow2

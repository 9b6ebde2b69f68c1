#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "narrow2/expansion.hpp"
#include "narrow2/ternary.hpp"

namespace narrow2 {

// The quadratic extension of Q(sqrt(a), sqrt(b)) generated by sqrt(x + y*sqrt(a))
// for a normalized solution of x^2 = a*y^2 + b*z^2.
struct RedeiContext {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  TernarySolution solution;
  std::array<Integer, 5> quartic;  // X^4 - 2x X^2 + b z^2, leading coefficient first
  std::vector<std::uint64_t> a_primes;
  std::vector<std::uint64_t> b_primes;
};

// Throws ArgumentError unless a, b >= 2 are squarefree, coprime, built from
// primes = 1 (mod 4) and every cross Legendre symbol is +1.
RedeiContext redei_context(std::uint64_t a, std::uint64_t b,
                           const TernaryOptions& options = {});

// Context for a caller-supplied solution, which must be normalized.
RedeiContext redei_context(const TernarySolution& solution);

// Frobenius of the prime p in Gal(L / Q(sqrt a, sqrt b)) as 0 (split) or 1.
// p must be prime with (a/p) = (b/p) = 1 and coprime to ab.
int frobenius_bit(const RedeiContext& ctx, std::uint64_t p);

// Sum of frobenius_bit over the primes of c; c = 1 gives 0. Validates that
// (a, b, c) is acceptable and strongly quadratically consistent.
int redei_symbol(const RedeiContext& ctx, std::uint64_t c);
int redei_symbol(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// redei_symbol(a1, a2, a3) == redei_symbol(a1, a3, a2).
bool reciprocity_check(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3);

// [1, 0, -2x, 0, b z^2] for the context of (a, b).
std::array<Integer, 5> emit_quartic(std::uint64_t a, std::uint64_t b);

// Read-mostly memo of contexts keyed by (a, b). Safe for concurrent use.
class RedeiCache {
 public:
  explicit RedeiCache(TernaryOptions options = {}) : options_(options) {}

  std::shared_ptr<const RedeiContext> context(std::uint64_t a, std::uint64_t b);

  // Symbol for prime entries whose consistency the caller has already
  // established; skips revalidation.
  int prime_symbol(std::uint64_t p, std::uint64_t q, std::uint64_t r);

  std::size_t size() const;

 private:
  TernaryOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const RedeiContext>> table_;
};

// Finite model of Gal(L/Q) for the context (a, b): triples (s_a, s_b, s_beta)
// of bits, where s_a, s_b record the action on sqrt(a), sqrt(b) and s_beta the
// action on sqrt(beta) relative to a fixed lift. Composition is
//   (s o t) = (s_a + t_a, s_b + t_b, s_beta + t_beta + t_a s_b).
struct RedeiGaloisElement {
  int s_a = 0;
  int s_b = 0;
  int s_beta = 0;

  std::size_t index() const { return static_cast<std::size_t>(s_a * 4 + s_b * 2 + s_beta); }
  bool operator==(const RedeiGaloisElement&) const = default;
};

RedeiGaloisElement compose(const RedeiGaloisElement& s, const RedeiGaloisElement& t);

// Frobenius at the prime above p fixed by sqrt(a) = sqrt_mod(a, p). Requires
// (a/p) = 1 and p coprime to ab.
RedeiGaloisElement frobenius_element(const RedeiContext& ctx, std::uint64_t p);

// Cochains of the expansion map with T = {a}, pointer chi_b on the eight-element
// model: phi_empty = s_b and phi_{a} = s_beta + s_a s_b.
CochainTable redei_cochain_table();

}  // namespace narrow2

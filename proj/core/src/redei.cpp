#include "narrow2/redei.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "narrow2/errors.hpp"
#include "narrow2/residues.hpp"

namespace narrow2 {

namespace {

constexpr std::size_t kDegenerateRetries = 8;

std::vector<std::uint64_t> entry_primes(std::uint64_t value, const char* name, bool allow_one) {
  if (value == 0 || (value == 1 && !allow_one)) {
    throw ArgumentError(std::string("redei: entry ") + name + " must be at least 2");
  }
  auto f = factorize(value);
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw ArgumentError(std::string("redei: entry ") + name + " = " + std::to_string(value) +
                        " is not squarefree");
  }
  for (std::uint64_t p : f) {
    if (p % 4 != 1) {
      throw ArgumentError(std::string("redei: entry ") + name + " = " + std::to_string(value) +
                          " has the prime factor " + std::to_string(p) + " = " +
                          std::to_string(p % 4) + " mod 4");
    }
  }
  return f;
}

void check_consistent(const std::vector<std::uint64_t>& lhs, const std::vector<std::uint64_t>& rhs) {
  for (std::uint64_t p : lhs) {
    for (std::uint64_t q : rhs) {
      if (p == q) {
        throw ArgumentError("redei: entries share the prime " + std::to_string(p));
      }
      if (jacobi(p % q, q) != 1) {
        throw ArgumentError("redei: (" + std::to_string(p) + "/" + std::to_string(q) +
                            ") = -1, entries are not quadratically consistent");
      }
    }
  }
}

std::array<Integer, 5> quartic_of(const TernarySolution& s) {
  return {Integer(1), Integer(0), Integer(-2) * s.x, Integer(0), Integer(s.b) * s.z * s.z};
}

// The summand for p at the embedding sqrt(a) -> s, falling back to the
// conjugate embedding; -1 if both vanish.
int summand(const TernarySolution& sol, std::uint64_t p, std::uint64_t s) {
  const std::uint64_t x = residue(sol.x, p);
  const std::uint64_t ys = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(residue(sol.y, p)) * s % p);
  std::uint64_t value = (x + ys) % p;
  if (value == 0) value = (x + p - ys) % p;
  if (value == 0) return -1;
  return jacobi(value, p) == 1 ? 0 : 1;
}

int frobenius_with_retries(const RedeiContext& ctx, std::uint64_t p) {
  const std::uint64_t s = sqrt_mod_unchecked(ctx.a % p, p);
  int bit = summand(ctx.solution, p, s);
  if (bit >= 0) return bit;
  for (const auto& alt : alternate_ternary_solutions(ctx.solution, kDegenerateRetries)) {
    bit = summand(alt, p, s);
    if (bit >= 0) return bit;
  }
  throw SearchExhaustedError("redei: both embeddings vanish at " + std::to_string(p) +
                             " for every tried solution");
}

}  // namespace

RedeiContext redei_context(std::uint64_t a, std::uint64_t b, const TernaryOptions& options) {
  RedeiContext ctx;
  ctx.a = a;
  ctx.b = b;
  ctx.a_primes = entry_primes(a, "a", false);
  ctx.b_primes = entry_primes(b, "b", false);
  check_consistent(ctx.a_primes, ctx.b_primes);
  ctx.solution = solve_ternary(a, b, options);
  ctx.quartic = quartic_of(ctx.solution);
  return ctx;
}

RedeiContext redei_context(const TernarySolution& solution) {
  if (!is_normalized(solution)) {
    throw ArgumentError("redei: supplied ternary solution is not normalized");
  }
  RedeiContext ctx;
  ctx.a = solution.a;
  ctx.b = solution.b;
  ctx.a_primes = entry_primes(solution.a, "a", false);
  ctx.b_primes = entry_primes(solution.b, "b", false);
  check_consistent(ctx.a_primes, ctx.b_primes);
  ctx.solution = solution;
  ctx.quartic = quartic_of(solution);
  return ctx;
}

int frobenius_bit(const RedeiContext& ctx, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ArgumentError("redei: " + std::to_string(p) + " is not an odd prime");
  }
  if (ctx.a % p == 0 || ctx.b % p == 0 || jacobi(ctx.a % p, p) != 1 ||
      jacobi(ctx.b % p, p) != 1) {
    throw ArgumentError("redei: " + std::to_string(p) + " does not split in Q(sqrt " +
                        std::to_string(ctx.a) + ", sqrt " + std::to_string(ctx.b) + ")");
  }
  return frobenius_with_retries(ctx, p);
}

int redei_symbol(const RedeiContext& ctx, std::uint64_t c) {
  const auto c_primes = entry_primes(c, "c", true);
  check_consistent(ctx.a_primes, c_primes);
  check_consistent(ctx.b_primes, c_primes);
  int total = 0;
  for (std::uint64_t p : c_primes) total ^= frobenius_with_retries(ctx, p);
  return total;
}

int redei_symbol(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  // Validate c before paying for the ternary solve.
  const auto c_primes = entry_primes(c, "c", true);
  const auto a_primes = entry_primes(a, "a", false);
  const auto b_primes = entry_primes(b, "b", false);
  check_consistent(a_primes, c_primes);
  check_consistent(b_primes, c_primes);
  return redei_symbol(redei_context(a, b), c);
}

bool reciprocity_check(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3) {
  // An entry equal to 1 makes both sides empty sums; still validate the rest.
  if (a2 == 1 || a3 == 1) {
    redei_symbol(a1, a2 == 1 ? a3 : a2, 1);
    return true;
  }
  return redei_symbol(a1, a2, a3) == redei_symbol(a1, a3, a2);
}

std::array<Integer, 5> emit_quartic(std::uint64_t a, std::uint64_t b) {
  return redei_context(a, b).quartic;
}

std::shared_ptr<const RedeiContext> RedeiCache::context(std::uint64_t a, std::uint64_t b) {
  const auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  // Built outside the lock; a concurrent builder of the same key computes the
  // same deterministic value and the first insertion wins.
  auto built = std::make_shared<const RedeiContext>(redei_context(a, b, options_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.emplace(key, std::move(built));
  return it->second;
}

int RedeiCache::prime_symbol(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  return frobenius_with_retries(*context(p, q), r);
}

std::size_t RedeiCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

RedeiGaloisElement compose(const RedeiGaloisElement& s, const RedeiGaloisElement& t) {
  return {s.s_a ^ t.s_a, s.s_b ^ t.s_b, s.s_beta ^ t.s_beta ^ (t.s_a & s.s_b)};
}

RedeiGaloisElement frobenius_element(const RedeiContext& ctx, std::uint64_t p) {
  if (p < 3 || !is_prime(p) || ctx.a % p == 0 || ctx.b % p == 0 || jacobi(ctx.a % p, p) != 1) {
    throw ArgumentError("redei: " + std::to_string(p) + " is not a prime split in Q(sqrt " +
                        std::to_string(ctx.a) + ")");
  }
  RedeiGaloisElement g;
  g.s_b = jacobi(ctx.b % p, p) == 1 ? 0 : 1;
  g.s_beta = frobenius_with_retries(ctx, p);
  return g;
}

CochainTable redei_cochain_table() {
  CochainTable table;
  table.t = 1;
  table.domain_size = 8;
  table.product.assign(64, -1);
  table.phi.assign(2, std::vector<int>(8, -1));
  table.characters.assign(1, std::vector<int>(8, -1));
  auto element = [](std::size_t i) {
    return RedeiGaloisElement{static_cast<int>(i >> 2) & 1, static_cast<int>(i >> 1) & 1,
                              static_cast<int>(i) & 1};
  };
  for (std::size_t i = 0; i < 8; ++i) {
    const auto g = element(i);
    for (std::size_t j = 0; j < 8; ++j) {
      table.product[i * 8 + j] = static_cast<int>(compose(g, element(j)).index());
    }
    table.characters[0][i] = g.s_a;
    table.phi[0][i] = g.s_b;
    table.phi[1][i] = g.s_beta ^ (g.s_a & g.s_b);
  }
  return table;
}

}  // namespace narrow2

#include <benchmark/benchmark.h>

#include <vector>

#include "narrow2/primes.hpp"
#include "narrow2/redei.hpp"
#include "narrow2/residues.hpp"
#include "narrow2/ternary.hpp"

using namespace narrow2;

namespace {

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  PrimeStream stream(limit);
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

// Pairs (p, q) of primes = 1 mod 4 with (p/q) = 1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> consistent_pairs(std::uint64_t lo, std::size_t count) {
  const auto primes = primes_below(lo * 4);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < primes.size() && out.size() < count; ++i) {
    if (primes[i] < lo) continue;
    for (std::size_t j = i + 1; j < primes.size() && out.size() < count; j += 7) {
      if (legendre(Integer(primes[i]), primes[j]) == 1) out.emplace_back(primes[i], primes[j]);
    }
  }
  return out;
}

}  // namespace

static void BM_Legendre(benchmark::State& state) {
  const auto primes = primes_below(100000);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::uint64_t p = primes[i % primes.size()];
    benchmark::DoNotOptimize(legendre(i * 2654435761u + 3, PrimeP1Mod4(p)));
    ++i;
  }
}
BENCHMARK(BM_Legendre);

static void BM_SqrtMod(benchmark::State& state) {
  const auto primes = primes_below(static_cast<std::uint64_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::uint64_t p = primes[primes.size() - 1 - i % 64];
    const std::uint64_t x = 2 + i % 1000;
    benchmark::DoNotOptimize(sqrt_mod_unchecked(x * x % p, p));
    ++i;
  }
}
BENCHMARK(BM_SqrtMod)->Arg(1 << 16)->Arg(1 << 24);

static void BM_SolveTernary(benchmark::State& state) {
  const auto pairs = consistent_pairs(static_cast<std::uint64_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(solve_ternary(a, b));
  }
}
BENCHMARK(BM_SolveTernary)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_RedeiSymbol(benchmark::State& state) {
  RedeiCache cache;
  const auto ctx = cache.context(13, 17);
  const auto primes = primes_below(1000000);
  std::vector<std::uint64_t> split;
  for (std::uint64_t p : primes) {
    if (p > 17 && legendre(Integer(13), p) == 1 && legendre(Integer(17), p) == 1) split.push_back(p);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(redei_symbol(*ctx, split[i++ % split.size()]));
}
BENCHMARK(BM_RedeiSymbol);

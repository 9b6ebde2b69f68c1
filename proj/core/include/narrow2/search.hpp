#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "narrow2/maximality.hpp"
#include "narrow2/rayclass.hpp"

namespace narrow2 {

// Disjoint prime sets X_1, ..., X_m with every cross Legendre symbol +1 and
// [p, q, r] = 0 for primes from three distinct sets, listed in the
// certificate as they were checked.
struct RedeiSpace {
  std::vector<std::vector<std::uint64_t>> sets;
  std::vector<Condition> certificate;

  std::size_t m() const { return sets.size(); }
};

struct SearchOptions {
  std::uint64_t limit = 10'000'000;  // inclusive bound on candidate primes
  unsigned workers = 1;
  std::size_t batch = 8192;          // candidates per parallel round
};

// Extra per-candidate condition, evaluated after the space conditions.
using CandidateFilter = std::function<bool(std::uint64_t)>;

// Appends a set of the `count` smallest primes z <= limit, z = 1 (mod 4), not
// already in the space, with (z/p) = 1 for every p in the space and
// [p, q, z] = 0 for p, q in distinct existing sets. Throws ExhaustionError
// when fewer qualify.
RedeiSpace extend_space(const RedeiSpace& space, std::size_t count, const SearchOptions& options,
                        RedeiCache& cache, const CandidateFilter& extra = {});

RedeiSpace build_space(std::size_t m, std::size_t count, const SearchOptions& options,
                       RedeiCache& cache);

struct MaximalVector {
  AcceptableVector vector;
  MaximalityReport report;
};

struct EnumerationResult {
  RedeiSpace space;
  std::vector<MaximalVector> vectors;
  std::size_t rejected = 0;  // combinations failing the recheck
};

// Builds a space whose i-th set has max(k) * pool primes and returns every
// vector whose i-th entry is a product of k_i primes from set i that passes
// is_maximal, in lexicographic order of the chosen subsets. `max_vectors`
// caps the output (0 = no cap). Throws UnsupportedDimensionError for more
// than three entries.
EnumerationResult enumerate_maximal_vectors(const std::vector<unsigned>& profile, std::size_t pool,
                                            const SearchOptions& options, RedeiCache& cache,
                                            std::size_t max_vectors = 0);

struct RayClassSearchResult {
  std::uint64_t c = 1;
  AcceptableVector vector;    // (a_1, ...)
  AcceptableVector combined;  // (c, a_1, ...) or (a_1, ...) when c = 1
  MaximalityReport report;    // for the combined vector
  UnitReductionReport units;
  RedeiSpace space;
  std::size_t pool = 0;
};

// Seeds the first set with the primes of c and searches the remaining ones.
// Candidate primes z must also have their fundamental unit square modulo
// every l | c. Requires at most two profile entries and c squarefree with
// primes = 1 (mod 4).
RayClassSearchResult find_ray_class_vector(std::uint64_t c, const std::vector<unsigned>& profile,
                                           const SearchOptions& options, RedeiCache& cache);

}  // namespace narrow2

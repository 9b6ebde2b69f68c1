#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace narrow2 {

// A finite additive system on X = X_1 x ... x X_d, stored extensionally.
//
// For a subset S of coordinates (bitmask, bit i = coordinate i) the ambient
// set is prod_{i in S} X_i^2 x prod_{i not in S} X_i. An ambient point is a
// tuple of coordinate codes: for i in S the pair (a, b) has code a*|X_i| + b,
// otherwise the code is the element index. Points are numbered in mixed radix
// with coordinate 0 most significant.
struct AdditiveSystem {
  unsigned d = 0;
  std::vector<std::vector<std::string>> ground_sets;
  std::vector<unsigned> value_dims;                // indexed by subset mask
  std::vector<std::vector<std::uint32_t>> f;       // F_S values as bit vectors
  std::vector<std::vector<std::uint8_t>> c;        // membership in C_S
  bool c_empty_default = true;                     // C_empty was not supplied

  std::size_t set_size(unsigned i) const { return ground_sets[i].size(); }
  std::size_t ambient_size(std::uint32_t subset) const;
  std::vector<std::size_t> decode(std::uint32_t subset, std::size_t index) const;
  std::size_t encode(std::uint32_t subset, const std::vector<std::size_t>& codes) const;

  bool accepted(std::uint32_t subset, std::size_t index) const {
    return c[subset][index] && f[subset][index] == 0;
  }
  std::uint32_t full() const { return (1u << d) - 1; }
};

// Recomputes C_S for every nonempty S from C_empty and the F tables.
void derive_membership(AdditiveSystem& system);

struct Violation {
  std::string kind;  // "closure", "additivity", "range" or "shape"
  std::uint32_t subset = 0;
  std::vector<std::size_t> points;  // ambient indices of the witnesses
  std::string detail;
};

struct ValidationResult {
  bool valid = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // the first few, in enumeration order
};

ValidationResult validate(const AdditiveSystem& system, std::size_t keep = 32);

// |C_empty^acc| / |X|.
mpq_class density_empty(const AdditiveSystem& system);

struct ShrinkingResult {
  mpq_class lhs;
  mpq_class rhs;
  mpq_class delta;
  mpz_class a;
  bool holds = false;
};

// lhs = |C_[d]^acc| / prod |X_i|^2, rhs = delta^(2^d) * a^(-3^d) with
// a = 2^(max value dim). Throws ValidationError for an invalid system.
ShrinkingResult verify_shrinking(const AdditiveSystem& system);

struct EquivalenceResult {
  std::vector<std::size_t> v;                    // V(x), ascending
  std::vector<std::vector<std::size_t>> blocks;  // classes of W(x)
  std::size_t w_size = 0;                        // |W(x)|
  bool is_equivalence = true;
  std::vector<std::string> violations;           // axiom and witnesses
};

// `x` lists the pair codes of coordinates 0..d-2. Throws ArgumentError for
// d = 0 or a malformed x.
EquivalenceResult equivalence_structure(const AdditiveSystem& system,
                                        const std::vector<std::size_t>& x);

// Labels elements with random F2 vectors and builds every F_S from products
// of linear forms in the label differences of the paired coordinates, which
// satisfies the additivity law identically. Each A_S gets a dimension drawn
// from [0, max_dim]. C_empty is the full set, the other C_S are derived.
AdditiveSystem random_bilinear_system(std::uint64_t seed, unsigned d,
                                      const std::vector<std::size_t>& sizes, unsigned max_dim);

// The all-zero system: F_S = 0 and C_S the full ambient set.
AdditiveSystem zero_system(const std::vector<std::size_t>& sizes, unsigned dim = 0);

}  // namespace narrow2

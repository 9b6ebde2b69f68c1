#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "narrow2/primes.hpp"

namespace narrow2 {

// A solution of x^2 = a*y^2 + b*z^2.
//
// Normalized solutions are primitive with x > 0, y >= 0, z > 0 and z odd.
// Odd z makes the norm b*z^2 of x + y*sqrt(a) prime to 2, which is what pins
// down the quadratic extension generated by sqrt(x + y*sqrt(a)) up to a sign
// twist.
struct TernarySolution {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  Integer x;
  Integer y;
  Integer z;

  bool operator==(const TernarySolution&) const = default;
};

struct TernaryOptions {
  // Maximum number of (y, z) pairs the box search may visit before handing
  // over to lattice reduction.
  std::uint64_t brute_force_budget = std::uint64_t{1} << 20;
  // Largest coordinate used when walking the conic's parametrization.
  int walk_radius = 8;
};

// Solves x^2 = a*y^2 + b*z^2 for a, b >= 2 squarefree, coprime, built from
// primes = 1 (mod 4), with b a square modulo every prime of a and vice versa.
// Throws ArgumentError on violated preconditions and SearchExhaustedError if
// no normalized solution turns up.
TernarySolution solve_ternary(std::uint64_t a, std::uint64_t b, const TernaryOptions& options = {});

// True iff x^2 = a*y^2 + b*z^2, gcd(x, y, z) = 1, x > 0, y >= 0, z > 0, z odd.
bool is_normalized(const TernarySolution& s);

// Up to `count` further normalized solutions, distinct from `base` and from
// each other, produced by walking lines through `base` on the conic.
std::vector<TernarySolution> alternate_ternary_solutions(const TernarySolution& base,
                                                         std::size_t count,
                                                         int walk_radius = 8);

// Divides out the content and fixes signs; does not touch the parity of z.
TernarySolution primitive_form(TernarySolution s);

}  // namespace narrow2

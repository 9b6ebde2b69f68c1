#pragma once

#include <cstdint>

#include "narrow2/primes.hpp"

namespace narrow2 {

// Fundamental unit of the maximal order of Q(sqrt(d)). When `half` is set the
// unit is (u + v*sqrt(d))/2 with u = v (mod 2), otherwise u + v*sqrt(d).
struct QuadraticUnit {
  std::uint64_t d = 0;
  Integer u;
  Integer v;
  bool half = false;
  int norm = 0;  // +1 or -1

  bool operator==(const QuadraticUnit&) const = default;
};

// The same unit with coordinates reduced modulo an odd prime l. For a half
// unit, u and v are the reductions of the numerator coordinates.
struct QuadraticUnitMod {
  std::uint64_t d = 0;
  std::uint64_t l = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  bool half = false;
  int norm = 0;
};

// Continued fraction of sqrt(d), or of (1 + sqrt(d))/2 when d = 1 (mod 4).
// Throws ArgumentError unless d >= 2 is squarefree.
QuadraticUnit fundamental_unit(std::uint64_t d);

// Runs the same expansion with convergents kept modulo 2l, so the cost is
// linear in the period and independent of the size of the unit.
QuadraticUnitMod fundamental_unit_mod(std::uint64_t d, std::uint64_t l);

}  // namespace narrow2
